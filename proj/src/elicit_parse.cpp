#include "mcjudge/judge/elicit.hpp"

#include "json.hpp"

namespace mcjudge {

std::string extract_fenced_block(const std::string& text) {
  size_t open = text.find("```");
  if (open == std::string::npos) throw std::invalid_argument("reply has no fenced code block");
  size_t line_end = text.find('\n', open + 3);
  if (line_end == std::string::npos) throw std::invalid_argument("fenced block is not terminated");
  size_t close = text.find("```", line_end + 1);
  if (close == std::string::npos) throw std::invalid_argument("fenced block is not terminated");
  return text.substr(line_end + 1, close - line_end - 1);
}

namespace {

nlohmann::json fenced_object(const std::string& text) {
  nlohmann::json obj = nlohmann::json::parse(extract_fenced_block(text), nullptr, false);
  if (obj.is_discarded() || !obj.is_object()) {
    throw std::invalid_argument("fenced block is not a JSON object");
  }
  return obj;
}

const nlohmann::json& require(const nlohmann::json& obj, const char* field) {
  auto it = obj.find(field);
  if (it == obj.end()) throw std::invalid_argument(std::string("missing field '") + field + "'");
  return *it;
}

std::string require_string(const nlohmann::json& obj, const char* field) {
  const nlohmann::json& v = require(obj, field);
  if (!v.is_string()) throw std::invalid_argument(std::string("field '") + field + "' must be a string");
  return v.get<std::string>();
}

int require_int_in(const nlohmann::json& obj, const char* field, int lo, int hi) {
  const nlohmann::json& v = require(obj, field);
  if (!v.is_number_integer()) {
    throw std::invalid_argument(std::string("field '") + field + "' must be an integer");
  }
  long long value = v.get<long long>();
  if (value < lo || value > hi) {
    throw std::invalid_argument(std::string("field '") + field + "' must be in [" + std::to_string(lo) +
                                ", " + std::to_string(hi) + "], got " + std::to_string(value));
  }
  return static_cast<int>(value);
}

}  // namespace

PairwiseAnswer parse_pairwise_answer(const std::string& text) {
  nlohmann::json obj = fenced_object(text);
  PairwiseAnswer ans;
  ans.i = require_string(obj, "i");
  ans.j = require_string(obj, "j");
  ans.score = require_int_in(obj, "score", 1, 9);
  const nlohmann::json& conf = require(obj, "confidence");
  if (!conf.is_number()) throw std::invalid_argument("field 'confidence' must be a number");
  ans.confidence = conf.get<double>();
  if (!(ans.confidence >= 0.0 && ans.confidence <= 1.0)) {
    throw std::invalid_argument("field 'confidence' must be in [0, 1]");
  }
  if (ans.i == ans.j) throw std::invalid_argument("fields 'i' and 'j' must name different criteria");
  return ans;
}

CriterionAnswer parse_criterion_answer(const std::string& text, int scale_max) {
  nlohmann::json obj = fenced_object(text);
  CriterionAnswer ans;
  ans.criterion = require_string(obj, "criterion");
  ans.score_a = require_int_in(obj, "score_a", 1, scale_max);
  ans.score_b = require_int_in(obj, "score_b", 1, scale_max);
  return ans;
}

DirectAnswer parse_direct_answer(const std::string& text, int scale_max) {
  nlohmann::json obj = fenced_object(text);
  DirectAnswer ans;
  ans.score_a = require_int_in(obj, "score_a", 1, scale_max);
  ans.score_b = require_int_in(obj, "score_b", 1, scale_max);
  return ans;
}

}  // namespace mcjudge
