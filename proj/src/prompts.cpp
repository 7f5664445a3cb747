#include "mcjudge/judge/prompts.hpp"

#include <fstream>
#include <sstream>

namespace mcjudge {

namespace {

const char* kPairwiseDefault =
    R"PROMPT(You are weighing evaluation criteria for judging answers to a question.

Question:
{question}

{criteria_block}

Which of the two criteria is more important when judging answers to this question, and how strongly?
Use the 1-9 scale: 1 equally important, 3 moderately more, 5 strongly more, 7 very strongly more, 9 extremely more; 2, 4, 6 and 8 are intermediate.
Also report your confidence in this judgment as a decimal between 0 and 1.

Reply with a fenced JSON block of exactly this form:
```json
{"i": "<name of the more important criterion>", "j": "<name of the other criterion>", "score": <integer 1-9>, "confidence": <decimal 0-1>}
```
)PROMPT";

const char* kCriterionDefault =
    R"PROMPT(You are scoring two candidate responses against a single criterion.

Question:
{question}

Response A:
{response_a}

Response B:
{response_b}

{criteria_block}

Score each response on this criterion alone, from 1 (worst) to {scale_max} (best), integers only.

Reply with a fenced JSON block of exactly this form:
```json
{"criterion": "<criterion name>", "score_a": <integer 1-{scale_max}>, "score_b": <integer 1-{scale_max}>}
```
)PROMPT";

const char* kDirectDefault =
    R"PROMPT(You are judging two candidate responses holistically.

Question:
{question}

Response A:
{response_a}

Response B:
{response_b}

Considering overall quality, score each response from 1 (worst) to {scale_max} (best), integers only.

Reply with a fenced JSON block of exactly this form:
```json
{"score_a": <integer 1-{scale_max}>, "score_b": <integer 1-{scale_max}>}
```
)PROMPT";

std::string read_if_present(const std::string& path, const std::string& fallback) {
  std::ifstream in(path);
  if (!in) return fallback;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

PromptTemplates PromptTemplates::defaults() {
  return PromptTemplates{kPairwiseDefault, kCriterionDefault, kDirectDefault};
}

PromptTemplates PromptTemplates::load_dir(const std::string& dir) {
  PromptTemplates t = defaults();
  t.pairwise = read_if_present(dir + "/pairwise.txt", t.pairwise);
  t.criterion_scoring = read_if_present(dir + "/criterion.txt", t.criterion_scoring);
  t.direct = read_if_present(dir + "/direct.txt", t.direct);
  return t;
}

std::string render_template(const std::string& tmpl, const std::map<std::string, std::string>& vars) {
  std::string out;
  out.reserve(tmpl.size());
  size_t pos = 0;
  while (pos < tmpl.size()) {
    size_t open = tmpl.find('{', pos);
    if (open == std::string::npos) {
      out.append(tmpl, pos, std::string::npos);
      break;
    }
    size_t close = tmpl.find('}', open + 1);
    if (close == std::string::npos) {
      out.append(tmpl, pos, std::string::npos);
      break;
    }
    out.append(tmpl, pos, open - pos);
    std::string key = tmpl.substr(open + 1, close - open - 1);
    auto it = vars.find(key);
    if (it != vars.end()) {
      out.append(it->second);
      pos = close + 1;
    } else {
      out.push_back('{');
      pos = open + 1;
    }
  }
  return out;
}

std::string format_reminder() {
  return "\n\nYour previous reply could not be parsed. Reply again with only the fenced JSON block, "
         "in exactly the requested format.";
}

PromptBuilder::PromptBuilder(PromptTemplates templates, EvaluationSample sample,
                             CriterionSet criteria, int scale_max)
    : templates_(std::move(templates)), sample_(std::move(sample)), criteria_(std::move(criteria)),
      scale_max_(scale_max) {}

std::string PromptBuilder::pairwise(int i, int j) const {
  const Criterion& a = criteria_.criteria.at(i);
  const Criterion& b = criteria_.criteria.at(j);
  std::string block = "Criterion \"" + a.name + "\": " + a.description + "\nCriterion \"" + b.name +
                      "\": " + b.description;
  return render_template(templates_.pairwise, {{"question", sample_.question},
                                               {"response_a", sample_.response_a},
                                               {"response_b", sample_.response_b},
                                               {"criteria_block", block},
                                               {"scale_max", std::to_string(scale_max_)}});
}

std::string PromptBuilder::criterion_scoring(int index) const {
  const Criterion& c = criteria_.criteria.at(index);
  std::string block = "Criterion \"" + c.name + "\": " + c.description;
  return render_template(templates_.criterion_scoring, {{"question", sample_.question},
                                                        {"response_a", sample_.response_a},
                                                        {"response_b", sample_.response_b},
                                                        {"criteria_block", block},
                                                        {"scale_max", std::to_string(scale_max_)}});
}

std::string PromptBuilder::direct() const {
  return render_template(templates_.direct, {{"question", sample_.question},
                                             {"response_a", sample_.response_a},
                                             {"response_b", sample_.response_b},
                                             {"criteria_block", ""},
                                             {"scale_max", std::to_string(scale_max_)}});
}

}  // namespace mcjudge
