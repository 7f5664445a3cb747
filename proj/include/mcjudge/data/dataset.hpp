#pragma once

#include <set>
#include <string>
#include <vector>

#include "mcjudge/errors.hpp"

namespace mcjudge {

enum class Split { GPT, Claude };

std::string to_string(Split split);
Split split_from_string(const std::string& s);  // throws std::invalid_argument

// One pairwise-preference benchmark item. label names the ground-truth
// preferred response.
struct EvaluationSample {
  std::string sample_id;
  std::string source;
  std::string category;
  Split split = Split::GPT;
  std::string question;
  std::string response_a;
  std::string response_b;
  char label = 'A';  // 'A' or 'B'
  void validate() const;
};

// JSONL, one sample per line. known_categories comes from the criteria
// config; category values outside it are rejected with their line number.
std::vector<EvaluationSample> load_dataset(const std::string& path,
                                           const std::set<std::string>& known_categories);

// Serialization used by fixtures and tooling; one JSON object per line.
std::string sample_to_jsonl_line(const EvaluationSample& s);

}  // namespace mcjudge
