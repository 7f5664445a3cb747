#pragma once

#include <random>
#include <vector>

#include "mcjudge/ahp.hpp"

namespace testsupport {

struct DensePrincipal {
  double lambda_max;
  std::vector<double> weights;
};

// Brute-force dense eigendecomposition (Eigen::EigenSolver). Independent of
// the library's power iteration; used only to cross-check it.
DensePrincipal dense_principal(const mcjudge::ComparisonMatrix& m);

// Row geometric means, normalized. The fuzzy collapse property compares
// against these, not the eigenvector weights.
std::vector<double> geometric_mean_weights(const mcjudge::ComparisonMatrix& m);

// Uniform Saaty intensities with random orientation per pair.
mcjudge::ComparisonMatrix random_saaty_matrix(std::mt19937_64& rng, int k);

// Strictly positive weights with pairwise ratio below 9 so the ratio matrix
// stays inside the Saaty range.
std::vector<double> random_weights(std::mt19937_64& rng, int k);

// Perfectly transitive matrix a_ij = w_i / w_j.
mcjudge::ComparisonMatrix ratio_matrix_from_weights(const std::vector<double>& w);

// Multiplies one random off-diagonal pair by a factor in
// [min_factor, max_factor] (random direction), clamped to the Saaty range.
mcjudge::ComparisonMatrix perturb_one_entry(std::mt19937_64& rng,
                                            const mcjudge::ComparisonMatrix& m,
                                            double min_factor, double max_factor);

}  // namespace testsupport
