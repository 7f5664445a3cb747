#pragma once

#include <string>

#include "mcjudge/errors.hpp"

namespace mcjudge {

// Raw text of the first fenced code block (``` or ```json). Throws
// std::invalid_argument when no complete fence is present.
std::string extract_fenced_block(const std::string& text);

// Judge reply to a pairwise importance question. i carries the criterion the
// judge named as more important; the pair may arrive in either order.
struct PairwiseAnswer {
  std::string i;
  std::string j;
  int score = 1;          // 1..9
  double confidence = 1;  // 0..1
};

// Judge reply to a single-criterion scoring question.
struct CriterionAnswer {
  std::string criterion;
  int score_a = 1;
  int score_b = 1;
};

// Judge reply to the holistic scoring question.
struct DirectAnswer {
  int score_a = 1;
  int score_b = 1;
};

// Strict parsers: the fenced block must be a JSON object carrying the
// documented fields with integer scores in range and confidence in [0, 1];
// fields beyond those are ignored. Each throws std::invalid_argument with a
// diagnostic on violation.
PairwiseAnswer parse_pairwise_answer(const std::string& text);
CriterionAnswer parse_criterion_answer(const std::string& text, int scale_max);
DirectAnswer parse_direct_answer(const std::string& text, int scale_max);

}  // namespace mcjudge
