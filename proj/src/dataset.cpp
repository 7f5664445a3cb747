#include "mcjudge/data/dataset.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace mcjudge {

std::string to_string(Split split) { return split == Split::GPT ? "GPT" : "Claude"; }

Split split_from_string(const std::string& s) {
  if (s == "GPT") return Split::GPT;
  if (s == "Claude") return Split::Claude;
  throw std::invalid_argument("unknown split: " + s);
}

void EvaluationSample::validate() const {
  if (sample_id.empty()) throw std::invalid_argument("sample_id must be non-empty");
  if (source.empty()) throw std::invalid_argument("source must be non-empty");
  if (category.empty()) throw std::invalid_argument("category must be non-empty");
  if (label != 'A' && label != 'B') throw std::invalid_argument("label must be A or B");
}

namespace {

std::string require_string(const nlohmann::json& obj, const std::string& field, int line) {
  auto it = obj.find(field);
  if (it == obj.end()) throw MissingField(line, field);
  if (!it->is_string()) throw MalformedLine(line, "field '" + field + "' must be a string");
  return it->get<std::string>();
}

}  // namespace

std::vector<EvaluationSample> load_dataset(const std::string& path,
                                           const std::set<std::string>& known_categories) {
  std::ifstream in(path);
  if (!in) throw NotFound("dataset file: " + path);

  std::vector<EvaluationSample> samples;
  std::unordered_set<std::string> seen_ids;
  std::string text;
  int line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;

    nlohmann::json obj = nlohmann::json::parse(text, nullptr, false);
    if (obj.is_discarded() || !obj.is_object()) throw MalformedLine(line_no, "not a JSON object");

    EvaluationSample s;
    s.sample_id = require_string(obj, "sample_id", line_no);
    s.source = require_string(obj, "source", line_no);
    s.category = require_string(obj, "category", line_no);
    s.question = require_string(obj, "question", line_no);
    s.response_a = require_string(obj, "response_a", line_no);
    s.response_b = require_string(obj, "response_b", line_no);

    std::string split = require_string(obj, "split", line_no);
    try {
      s.split = split_from_string(split);
    } catch (const std::invalid_argument&) {
      throw MalformedLine(line_no, "split must be GPT or Claude, got '" + split + "'");
    }

    std::string label = require_string(obj, "label", line_no);
    if (label != "A" && label != "B") {
      throw MalformedLine(line_no, "label must be A or B, got '" + label + "'");
    }
    s.label = label[0];

    if (!known_categories.count(s.category)) throw UnknownCategory(line_no, s.category);
    if (!seen_ids.insert(s.sample_id).second) {
      throw MalformedLine(line_no, "duplicate sample_id '" + s.sample_id + "'");
    }
    samples.push_back(std::move(s));
  }
  return samples;
}

std::string sample_to_jsonl_line(const EvaluationSample& s) {
  nlohmann::ordered_json obj;
  obj["sample_id"] = s.sample_id;
  obj["source"] = s.source;
  obj["category"] = s.category;
  obj["split"] = to_string(s.split);
  obj["question"] = s.question;
  obj["response_a"] = s.response_a;
  obj["response_b"] = s.response_b;
  obj["label"] = std::string(1, s.label);
  return obj.dump();
}

}  // namespace mcjudge
