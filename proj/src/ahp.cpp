#include "mcjudge/ahp.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace mcjudge {

namespace {

// Slack for values produced by reciprocal rounding, e.g. 1/(1/9) = 9 + 2ulp.
constexpr double kRangeSlack = 1e-12;
constexpr double kReciprocitySlack = 1e-12;

void check_index(int idx, int order) {
  if (idx < 0 || idx >= order) throw IndexOutOfRange(idx, order);
}

}  // namespace

void SaatyScore::validate() const {
  if (value < 1 || value > 9)
    throw std::invalid_argument("Saaty score outside 1..9: " + std::to_string(value));
}

void PairwiseComparison::validate() const {
  if (i == j)
    throw std::invalid_argument("pairwise comparison of a criterion with itself: " +
                                std::to_string(i));
  score.validate();
  if (!(confidence >= 0.0 && confidence <= 1.0))
    throw std::invalid_argument("confidence outside [0,1]: " +
                                std::to_string(confidence));
}

ComparisonMatrix::ComparisonMatrix(int order) : k_(order) {
  if (order < 1)
    throw std::invalid_argument("matrix order must be >= 1, got " +
                                std::to_string(order));
  a_.assign(static_cast<size_t>(k_) * k_, 1.0);
}

ComparisonMatrix ComparisonMatrix::from_rows(
    const std::vector<std::vector<double>>& rows) {
  ComparisonMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.k_; ++i) {
    if (static_cast<int>(rows[i].size()) != m.k_)
      throw std::invalid_argument("matrix rows must be square");
    for (int j = 0; j < m.k_; ++j) m.a_[static_cast<size_t>(i) * m.k_ + j] = rows[i][j];
  }
  m.validate();
  return m;
}

double ComparisonMatrix::at(int i, int j) const {
  check_index(i, k_);
  check_index(j, k_);
  return a_[static_cast<size_t>(i) * k_ + j];
}

void ComparisonMatrix::set_pair(int i, int j, double value) {
  check_index(i, k_);
  check_index(j, k_);
  if (i == j) throw std::invalid_argument("cannot set a diagonal entry");
  if (!(value >= kSaatyMin - kRangeSlack && value <= kSaatyMax + kRangeSlack))
    throw std::invalid_argument("matrix entry outside [1/9, 9]: " +
                                std::to_string(value));
  a_[static_cast<size_t>(i) * k_ + j] = value;
  a_[static_cast<size_t>(j) * k_ + i] = 1.0 / value;
}

void ComparisonMatrix::validate() const {
  for (int i = 0; i < k_; ++i) {
    if (a_[static_cast<size_t>(i) * k_ + i] != 1.0)
      throw std::invalid_argument("diagonal entry not 1 at index " +
                                  std::to_string(i));
    for (int j = 0; j < k_; ++j) {
      double v = a_[static_cast<size_t>(i) * k_ + j];
      if (!(v >= kSaatyMin - kRangeSlack && v <= kSaatyMax + kRangeSlack))
        throw std::invalid_argument("entry (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") outside [1/9, 9]");
      double prod = v * a_[static_cast<size_t>(j) * k_ + i];
      if (std::fabs(prod - 1.0) > kReciprocitySlack)
        throw std::invalid_argument("reciprocity violated at (" + std::to_string(i) +
                                    ", " + std::to_string(j) + ")");
    }
  }
}

std::string ComparisonMatrix::to_json() const {
  nlohmann::ordered_json out;
  out["order"] = k_;
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < k_; ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int j = 0; j < k_; ++j) row.push_back(at(i, j));
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);
  return out.dump();
}

void WeightVector::validate() const {
  if (weights.empty()) throw std::invalid_argument("empty weight vector");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw std::invalid_argument("non-positive weight");
    sum += w;
  }
  if (std::fabs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("weights do not sum to 1: " + std::to_string(sum));
}

std::string to_string(RepairStatus status) {
  switch (status) {
    case RepairStatus::AlreadyConsistent: return "AlreadyConsistent";
    case RepairStatus::Repaired: return "Repaired";
    case RepairStatus::RegenerateRequired: return "RegenerateRequired";
  }
  throw std::logic_error("unreachable repair status");
}

RepairStatus repair_status_from_string(const std::string& s) {
  if (s == "AlreadyConsistent") return RepairStatus::AlreadyConsistent;
  if (s == "Repaired") return RepairStatus::Repaired;
  if (s == "RegenerateRequired") return RepairStatus::RegenerateRequired;
  throw std::invalid_argument("unknown repair status: " + s);
}

double random_index(int k) {
  static constexpr double kTable[] = {0.0,  0.0,  0.58, 0.90, 1.12,
                                      1.24, 1.32, 1.41, 1.45, 1.49};
  if (k < 1 || k > 10) throw UnknownRandomIndex(k);
  return kTable[k - 1];
}

int default_max_corrections(int k) { return (k + 1) / 2; }

ComparisonMatrix build_matrix(const std::vector<PairwiseComparison>& comparisons,
                              int k) {
  if (k < 1)
    throw std::invalid_argument("matrix order must be >= 1, got " + std::to_string(k));
  ComparisonMatrix m(k);
  std::set<std::pair<int, int>> seen;
  for (const auto& c : comparisons) {
    c.validate();
    check_index(c.i, k);
    check_index(c.j, k);
    auto key = std::minmax(c.i, c.j);
    if (!seen.insert(key).second) throw DuplicatePair(key.first, key.second);
    m.set_pair(c.i, c.j, static_cast<double>(c.score.value));
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!seen.count({i, j})) throw MissingPair(i, j);
  return m;
}

EigenResult principal_eigenvector(const ComparisonMatrix& matrix) {
  matrix.validate();
  const int k = matrix.order();
  if (k == 1) return {1.0, WeightVector{{1.0}}};

  constexpr int kMaxIterations = 10000;
  constexpr double kStepTolerance = 1e-12;
  constexpr double kResidualBound = 1e-8;

  std::vector<double> w(k, 1.0 / k), next(k), aw(k);
  for (int it = 0; it < kMaxIterations; ++it) {
    double total = 0.0;
    for (int i = 0; i < k; ++i) {
      double s = 0.0;
      for (int j = 0; j < k; ++j) s += matrix.at(i, j) * w[j];
      next[i] = s;
      total += s;
    }
    double diff = 0.0;
    for (int i = 0; i < k; ++i) {
      next[i] /= total;
      diff = std::max(diff, std::fabs(next[i] - w[i]));
    }
    w.swap(next);
    if (diff < kStepTolerance) {
      double lambda = 0.0;
      for (int i = 0; i < k; ++i) {
        double s = 0.0;
        for (int j = 0; j < k; ++j) s += matrix.at(i, j) * w[j];
        aw[i] = s;
        lambda += s;  // sum of A*w equals lambda because sum of w is 1
      }
      for (int i = 0; i < k; ++i)
        if (std::fabs(aw[i] - lambda * w[i]) > kResidualBound)
          throw ConvergenceFailure("residual above bound after convergence");
      WeightVector wv{w};
      wv.validate();
      return {lambda, std::move(wv)};
    }
  }
  throw ConvergenceFailure("no fixed point within " +
                           std::to_string(kMaxIterations) + " iterations");
}

ConsistencyReport consistency_report(const ComparisonMatrix& matrix,
                                     double lambda_max, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
  const int k = matrix.order();
  ConsistencyReport r;
  r.k = k;
  // Perron root of a positive reciprocal matrix is >= k; anything below is
  // eigensolver noise, so clamp to keep CI and CR non-negative.
  r.lambda_max = std::max(lambda_max, static_cast<double>(k));
  if (k <= 2) {
    r.ci = 0.0;
    r.cr = 0.0;
  } else {
    r.ci = (r.lambda_max - k) / (k - 1);
    r.cr = r.ci / random_index(k);
  }
  r.acceptable = r.cr <= tau;
  return r;
}

RepairOutcome repair_matrix(const ComparisonMatrix& matrix, double tau,
                            int max_corrections) {
  if (max_corrections < 1)
    throw std::invalid_argument("max_corrections must be >= 1");
  matrix.validate();
  const int k = matrix.order();

  EigenResult input_eig = principal_eigenvector(matrix);
  ConsistencyReport input_report =
      consistency_report(matrix, input_eig.lambda_max, tau);
  if (input_report.acceptable)
    return {RepairStatus::AlreadyConsistent, matrix, {}, input_report, ""};

  // Candidate corrections, ranked once from the input matrix. Estimates are
  // not refreshed as corrections apply (single phase).
  struct Candidate {
    double deviation;
    int i, j;
    double estimate;
  };
  std::vector<Candidate> candidates;
  const double kDeviationThreshold = std::log(2.0);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      double log_sum = 0.0;
      int n = 0;
      for (int t = 0; t < k; ++t) {
        if (t == i || t == j) continue;
        log_sum += std::log(matrix.at(i, t) * matrix.at(t, j));
        ++n;
      }
      if (n == 0) continue;
      double estimate = std::exp(log_sum / n);
      double deviation = std::fabs(std::log(matrix.at(i, j)) - std::log(estimate));
      if (deviation > kDeviationThreshold)
        candidates.push_back({deviation, i, j, estimate});
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.deviation != b.deviation) return a.deviation > b.deviation;
              if (a.i != b.i) return a.i < b.i;
              return a.j < b.j;
            });
  if (static_cast<int>(candidates.size()) > max_corrections)
    candidates.resize(static_cast<size_t>(max_corrections));

  // A geometric mean of products of in-range entries stays in [1/81, 81];
  // anything outside signals numeric breakdown rather than a judgment to fix.
  for (const auto& c : candidates) {
    if (!(c.estimate >= 1.0 / 81.0 - 1e-9 && c.estimate <= 81.0 + 1e-9))
      return {RepairStatus::RegenerateRequired, matrix, {}, input_report,
              "extreme comparison ratio at (" + std::to_string(c.i) + ", " +
                  std::to_string(c.j) + ")"};
  }

  ComparisonMatrix repaired = matrix;
  std::vector<Correction> corrections;
  corrections.reserve(candidates.size());
  for (const auto& c : candidates) {
    double clamped = std::clamp(c.estimate, kSaatyMin, kSaatyMax);
    corrections.push_back({c.i, c.j, repaired.at(c.i, c.j), clamped});
    repaired.set_pair(c.i, c.j, clamped);
  }

  EigenResult repaired_eig = principal_eigenvector(repaired);
  ConsistencyReport repaired_report =
      consistency_report(repaired, repaired_eig.lambda_max, tau);
  if (repaired_eig.lambda_max > input_eig.lambda_max * 1.05)
    return {RepairStatus::RegenerateRequired, repaired, corrections,
            repaired_report, "eigenvalue grew beyond the 1.05x stability guard"};
  if (repaired_report.acceptable)
    return {RepairStatus::Repaired, repaired, corrections, repaired_report, ""};
  return {RepairStatus::RegenerateRequired, repaired, corrections, repaired_report,
          corrections.empty()
              ? "no correction candidate exceeds the log 2 deviation threshold"
              : "consistency ratio still above threshold after one repair phase"};
}

}  // namespace mcjudge
