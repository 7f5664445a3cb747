#include "mcjudge/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace mcjudge {

namespace {

constexpr double kOrderSlack = 1e-12;

SaatyScore round_to_saaty(double v) {
  long s = std::lround(std::clamp(v, 1.0, 9.0));
  return SaatyScore{static_cast<int>(s)};
}

}  // namespace

void TriangularFuzzyNumber::validate() const {
  if (!(l > 0.0) || l > m + kOrderSlack || m > u + kOrderSlack)
    throw std::invalid_argument("fuzzy number violates 0 < l <= m <= u");
}

FuzzyComparisonMatrix::FuzzyComparisonMatrix(int order) : k_(order) {
  if (order < 1)
    throw std::invalid_argument("matrix order must be >= 1, got " +
                                std::to_string(order));
  e_.assign(static_cast<size_t>(k_) * k_, TriangularFuzzyNumber{});
}

const TriangularFuzzyNumber& FuzzyComparisonMatrix::at(int i, int j) const {
  if (i < 0 || i >= k_) throw IndexOutOfRange(i, k_);
  if (j < 0 || j >= k_) throw IndexOutOfRange(j, k_);
  return e_[static_cast<size_t>(i) * k_ + j];
}

void FuzzyComparisonMatrix::set_pair(int i, int j, const TriangularFuzzyNumber& t) {
  if (i < 0 || i >= k_) throw IndexOutOfRange(i, k_);
  if (j < 0 || j >= k_) throw IndexOutOfRange(j, k_);
  if (i == j) throw std::invalid_argument("cannot set a diagonal entry");
  t.validate();
  e_[static_cast<size_t>(i) * k_ + j] = t;
  e_[static_cast<size_t>(j) * k_ + i] = fuzzy_reciprocal(t);
}

void FuzzyComparisonMatrix::validate() const {
  const TriangularFuzzyNumber one{1.0, 1.0, 1.0};
  for (int i = 0; i < k_; ++i) {
    if (!(at(i, i) == one))
      throw std::invalid_argument("diagonal fuzzy entry not (1,1,1)");
    for (int j = 0; j < k_; ++j) {
      at(i, j).validate();
      auto r = fuzzy_reciprocal(at(i, j));
      const auto& m = at(j, i);
      if (std::fabs(r.l - m.l) > 1e-12 || std::fabs(r.m - m.m) > 1e-12 ||
          std::fabs(r.u - m.u) > 1e-12)
        throw std::invalid_argument("fuzzy reciprocity violated at (" +
                                    std::to_string(i) + ", " + std::to_string(j) +
                                    ")");
    }
  }
}

TriangularFuzzyNumber tfn_from_score(SaatyScore score, double confidence) {
  score.validate();
  if (!(confidence >= 0.0 && confidence <= 1.0))
    throw std::invalid_argument("confidence outside [0,1]: " +
                                std::to_string(confidence));
  double s = static_cast<double>(score.value);
  double l = std::max(1.0, s - 1.0);
  double u = std::min(9.0, s + 1.0);
  TriangularFuzzyNumber t{l + (s - l) * confidence, s, u - (u - s) * confidence};
  t.validate();
  return t;
}

TriangularFuzzyNumber fuzzy_reciprocal(const TriangularFuzzyNumber& t) {
  t.validate();
  return {1.0 / t.u, 1.0 / t.m, 1.0 / t.l};
}

FuzzyComparisonMatrix build_fuzzy_matrix(
    const ComparisonMatrix& repaired,
    const std::vector<PairwiseComparison>& comparisons) {
  repaired.validate();
  const int k = repaired.order();
  std::map<std::pair<int, int>, double> gamma;
  for (const auto& c : comparisons) {
    c.validate();
    gamma[std::minmax(c.i, c.j)] = c.confidence;
  }
  FuzzyComparisonMatrix fm(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      auto it = gamma.find({i, j});
      if (it == gamma.end()) throw MissingConfidence(i, j);
      if (repaired.at(i, j) >= 1.0)
        fm.set_pair(i, j, tfn_from_score(round_to_saaty(repaired.at(i, j)),
                                         it->second));
      else
        fm.set_pair(j, i, tfn_from_score(round_to_saaty(repaired.at(j, i)),
                                         it->second));
    }
  }
  return fm;
}

TriangularFuzzyNumber fuzzy_geometric_mean(
    const std::vector<TriangularFuzzyNumber>& row) {
  if (row.empty()) throw std::invalid_argument("empty fuzzy row");
  double log_l = 0.0, log_m = 0.0, log_u = 0.0;
  for (const auto& t : row) {
    t.validate();
    log_l += std::log(t.l);
    log_m += std::log(t.m);
    log_u += std::log(t.u);
  }
  double n = static_cast<double>(row.size());
  TriangularFuzzyNumber g{std::exp(log_l / n), std::exp(log_m / n),
                          std::exp(log_u / n)};
  g.validate();
  return g;
}

std::vector<FuzzyWeight> fuzzy_weights(const FuzzyComparisonMatrix& fm) {
  fm.validate();
  const int k = fm.order();
  std::vector<TriangularFuzzyNumber> means(k);
  double modal_sum = 0.0;
  for (int i = 0; i < k; ++i) {
    std::vector<TriangularFuzzyNumber> row;
    row.reserve(k);
    for (int j = 0; j < k; ++j) row.push_back(fm.at(i, j));
    means[i] = fuzzy_geometric_mean(row);
    modal_sum += means[i].m;
  }
  std::vector<FuzzyWeight> out(k);
  for (int i = 0; i < k; ++i) {
    out[i].tfn = {means[i].l / modal_sum, means[i].m / modal_sum,
                  means[i].u / modal_sum};
    out[i].tfn.validate();
  }
  return out;
}

WeightVector defuzzify_weights(const std::vector<FuzzyWeight>& fws) {
  if (fws.empty()) throw std::invalid_argument("empty fuzzy weight list");
  WeightVector w;
  w.weights.reserve(fws.size());
  double total = 0.0;
  for (const auto& fw : fws) {
    fw.tfn.validate();
    double centroid = (fw.tfn.l + fw.tfn.m + fw.tfn.u) / 3.0;
    w.weights.push_back(centroid);
    total += centroid;
  }
  for (double& v : w.weights) v /= total;
  w.validate();
  return w;
}

}  // namespace mcjudge
