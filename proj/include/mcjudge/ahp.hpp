#pragma once

#include <string>
#include <vector>

#include "mcjudge/errors.hpp"

namespace mcjudge {

inline constexpr double kSaatyMin = 1.0 / 9.0;
inline constexpr double kSaatyMax = 9.0;

// Integer intensity on the 1..9 comparison scale.
struct SaatyScore {
  int value = 1;
  void validate() const;
};

// One elicited judgment: criterion i is `score` times as important as
// criterion j; confidence carries gamma in [0,1] for the fuzzy branch.
struct PairwiseComparison {
  int i = 0;
  int j = 0;
  SaatyScore score;
  double confidence = 1.0;
  void validate() const;
};

// Positive reciprocal judgment matrix: a_ii = 1, a_ij * a_ji = 1 within
// 1e-12 relative, entries in [1/9, 9] (small slack for reciprocal rounding).
class ComparisonMatrix {
 public:
  explicit ComparisonMatrix(int order);
  static ComparisonMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int order() const { return k_; }
  double at(int i, int j) const;
  // Writes a_ij = value and mirrors a_ji = 1/value. i != j required.
  void set_pair(int i, int j, double value);
  void validate() const;
  std::string to_json() const;

 private:
  int k_;
  std::vector<double> a_;
};

// Normalized priority vector: strictly positive, sums to 1 within 1e-9.
struct WeightVector {
  std::vector<double> weights;
  void validate() const;
};

struct ConsistencyReport {
  double lambda_max = 1.0;
  double ci = 0.0;
  double cr = 0.0;
  bool acceptable = true;
  int k = 1;
};

enum class RepairStatus { AlreadyConsistent, Repaired, RegenerateRequired };

std::string to_string(RepairStatus status);
RepairStatus repair_status_from_string(const std::string& s);

struct Correction {
  int i = 0;
  int j = 0;
  double old_value = 1.0;
  double new_value = 1.0;
};

struct RepairOutcome {
  RepairStatus status;
  ComparisonMatrix matrix;
  std::vector<Correction> corrections;
  ConsistencyReport final_report;
  // Populated when status is RegenerateRequired; names the trigger.
  std::string diagnostics;
};

struct EigenResult {
  double lambda_max;
  WeightVector weights;
};

// Saaty random-index constant for orders 1..10.
double random_index(int k);

// ceil(k/2): the default correction budget for one repair phase.
int default_max_corrections(int k);

// Reciprocal matrix from one comparison per unordered pair. k = 1 is the
// degenerate no-comparison case; k >= 2 requires full coverage.
ComparisonMatrix build_matrix(const std::vector<PairwiseComparison>& comparisons,
                              int k);

// Power iteration with L1 normalization each step. Converges for any valid
// (strictly positive) matrix; the cap turns pathology into an error.
EigenResult principal_eigenvector(const ComparisonMatrix& matrix);

// CI = (lambda_max - k)/(k - 1), CR = CI/RI_k for k >= 3, CR = 0 for k <= 2.
// lambda below k is iteration noise (the Perron root of a positive reciprocal
// matrix is >= k) and is clamped so CI and CR never go negative.
ConsistencyReport consistency_report(const ComparisonMatrix& matrix,
                                     double lambda_max, double tau);

// Single repair phase: transitive estimates computed once from the input,
// worst log-deviations (> log 2) corrected up to max_corrections, CR
// recomputed once. Eigenvalue growth beyond 1.05x the input triggers
// RegenerateRequired instead of further repair.
RepairOutcome repair_matrix(const ComparisonMatrix& matrix, double tau,
                            int max_corrections);

}  // namespace mcjudge
