#pragma once

#include <map>
#include <string>

#include "mcjudge/data/dataset.hpp"
#include "mcjudge/judge/criteria.hpp"

namespace mcjudge {

// Plain-text templates with {question}, {response_a}, {response_b},
// {criteria_block} and {scale_max} placeholders. criteria_block carries the
// compared pair, the scored criterion, or nothing depending on the prompt.
struct PromptTemplates {
  std::string pairwise;
  std::string criterion_scoring;
  std::string direct;

  static PromptTemplates defaults();
  // Reads pairwise.txt, criterion.txt and direct.txt from dir; missing files
  // keep their default text.
  static PromptTemplates load_dir(const std::string& dir);
};

// Replaces each {key} from vars; unknown placeholders are left untouched.
std::string render_template(const std::string& tmpl, const std::map<std::string, std::string>& vars);

// Appended to a prompt for the single re-ask after a malformed reply.
std::string format_reminder();

// Renders the three elicitation prompts for one sample. Holds copies, so it
// stays valid independent of its constructor arguments.
class PromptBuilder {
 public:
  PromptBuilder(PromptTemplates templates, EvaluationSample sample, CriterionSet criteria,
                int scale_max);

  std::string pairwise(int i, int j) const;       // criteria indices, i < j as asked
  std::string criterion_scoring(int index) const;
  std::string direct() const;

 private:
  PromptTemplates templates_;
  EvaluationSample sample_;
  CriterionSet criteria_;
  int scale_max_;
};

}  // namespace mcjudge
