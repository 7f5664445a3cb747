#include "mcjudge/judge/criteria.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace mcjudge {

int CriterionSet::index_of(const std::string& name) const {
  for (size_t idx = 0; idx < criteria.size(); ++idx) {
    if (criteria[idx].name == name) return static_cast<int>(idx);
  }
  return -1;
}

void CriterionSet::validate() const {
  if (category.empty()) throw std::invalid_argument("criterion set category must be non-empty");
  if (k() < 2 || k() > 9) {
    throw std::invalid_argument("category '" + category + "' must define between 2 and 9 criteria, got " +
                                std::to_string(k()));
  }
  std::unordered_set<std::string> names;
  for (const auto& c : criteria) {
    if (c.name.empty()) throw std::invalid_argument("category '" + category + "' has a criterion with an empty name");
    if (!names.insert(c.name).second) {
      throw std::invalid_argument("category '" + category + "' has duplicate criterion '" + c.name + "'");
    }
  }
}

CriteriaConfig CriteriaConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw NotFound("criteria config: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

CriteriaConfig CriteriaConfig::from_json_text(const std::string& text) {
  nlohmann::json root = nlohmann::json::parse(text, nullptr, false);
  if (root.is_discarded() || !root.is_object()) {
    throw std::invalid_argument("criteria config is not a JSON object");
  }
  auto cats = root.find("categories");
  if (cats == root.end() || !cats->is_object()) {
    throw std::invalid_argument("criteria config must have an object field 'categories'");
  }

  CriteriaConfig config;
  for (auto it = cats->begin(); it != cats->end(); ++it) {
    CriterionSet set;
    set.category = it.key();
    const nlohmann::json& entry = it.value();
    if (!entry.is_object() || !entry.contains("criteria") || !entry["criteria"].is_array()) {
      throw std::invalid_argument("category '" + it.key() + "' must be an object with a 'criteria' array");
    }
    for (const auto& item : entry["criteria"]) {
      if (!item.is_object() || !item.contains("name") || !item["name"].is_string()) {
        throw std::invalid_argument("category '" + it.key() + "' has a criterion without a string 'name'");
      }
      Criterion c;
      c.name = item["name"].get<std::string>();
      if (item.contains("description")) {
        if (!item["description"].is_string()) {
          throw std::invalid_argument("criterion '" + c.name + "' has a non-string description");
        }
        c.description = item["description"].get<std::string>();
      }
      set.criteria.push_back(std::move(c));
    }
    set.validate();
    config.add(std::move(set));
  }
  return config;
}

const CriterionSet& CriteriaConfig::for_category(const std::string& category) const {
  auto it = by_category_.find(category);
  if (it == by_category_.end()) throw NotFound("criteria for category: " + category);
  return it->second;
}

std::set<std::string> CriteriaConfig::categories() const {
  std::set<std::string> out;
  for (const auto& [name, unused] : by_category_) out.insert(name);
  return out;
}

bool CriteriaConfig::has_category(const std::string& category) const {
  return by_category_.count(category) != 0;
}

void CriteriaConfig::add(CriterionSet set) {
  set.validate();
  by_category_[set.category] = std::move(set);
}

}  // namespace mcjudge
