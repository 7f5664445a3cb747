#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mcjudge/errors.hpp"

namespace mcjudge {

struct Criterion {
  std::string name;
  std::string description;
};

// Criteria used to judge one category. Matrix order equals criteria.size().
struct CriterionSet {
  std::string category;
  std::vector<Criterion> criteria;

  int k() const { return static_cast<int>(criteria.size()); }
  // Index of a criterion by exact name, -1 if absent.
  int index_of(const std::string& name) const;
  // 2 <= k <= 9, names unique and non-empty.
  void validate() const;
};

// Per-category criteria sets loaded from a JSON config of the shape
// {"categories": {"<label>": {"criteria": [{"name", "description"}, ...]}}}.
class CriteriaConfig {
 public:
  static CriteriaConfig load(const std::string& path);
  static CriteriaConfig from_json_text(const std::string& text);

  const CriterionSet& for_category(const std::string& category) const;  // throws NotFound
  std::set<std::string> categories() const;
  bool has_category(const std::string& category) const;
  void add(CriterionSet set);

 private:
  std::map<std::string, CriterionSet> by_category_;
};

}  // namespace mcjudge
