#pragma once

#include <vector>

#include "mcjudge/ahp.hpp"

namespace mcjudge {

// Triangular fuzzy preference intensity with 0 < l <= m <= u.
struct TriangularFuzzyNumber {
  double l = 1.0;
  double m = 1.0;
  double u = 1.0;
  void validate() const;
  bool operator==(const TriangularFuzzyNumber&) const = default;
};

struct FuzzyWeight {
  TriangularFuzzyNumber tfn;
};

// Fuzzy judgment matrix: (1,1,1) on the diagonal, entry (j,i) the fuzzy
// reciprocal of entry (i,j).
class FuzzyComparisonMatrix {
 public:
  explicit FuzzyComparisonMatrix(int order);
  int order() const { return k_; }
  const TriangularFuzzyNumber& at(int i, int j) const;
  // Writes t at (i,j) and its fuzzy reciprocal at (j,i).
  void set_pair(int i, int j, const TriangularFuzzyNumber& t);
  void validate() const;

 private:
  int k_;
  std::vector<TriangularFuzzyNumber> e_;
};

// Base TFN (max(1, s-1), s, min(9, s+1)) contracted toward the mode:
// l' = l + (m-l)*confidence, u' = u - (u-m)*confidence.
TriangularFuzzyNumber tfn_from_score(SaatyScore score, double confidence);

TriangularFuzzyNumber fuzzy_reciprocal(const TriangularFuzzyNumber& t);

// Refuzzifies an accepted crisp matrix, taking confidences from the original
// comparisons. The >= 1 direction of each pair is rounded to the Saaty
// integer and fuzzified; the mirror entry is its fuzzy reciprocal, so repaired
// sub-unit entries keep their judgment direction.
FuzzyComparisonMatrix build_fuzzy_matrix(
    const ComparisonMatrix& repaired,
    const std::vector<PairwiseComparison>& comparisons);

// Componentwise geometric mean (Buckley's TFN product convention).
TriangularFuzzyNumber fuzzy_geometric_mean(
    const std::vector<TriangularFuzzyNumber>& row);

// Row geometric means divided by the single scalar sum of their modal
// components, so the modes form a simplex while bounds keep their spread.
std::vector<FuzzyWeight> fuzzy_weights(const FuzzyComparisonMatrix& fm);

// Centroid (l+m+u)/3 per weight, then simplex normalization.
WeightVector defuzzify_weights(const std::vector<FuzzyWeight>& fws);

}  // namespace mcjudge
