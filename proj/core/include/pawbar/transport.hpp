#pragma once

#include <cstddef>
#include <vector>

#include "pawbar/measures.hpp"

namespace pawbar {

/// A bijection on {0..N-1}; perm[k] is the image of k.
using Permutation = std::vector<std::size_t>;

bool is_permutation(const Permutation& p) noexcept;

struct Assignment {
  Permutation col_of_row;
  double cost = 0.0;  // sum of cost(r, col_of_row[r]), recomputed from the matching
};

/// Exact minimum-cost perfect matching of a square cost matrix by shortest
/// augmenting paths with dual potentials (Jonker-Volgenant style), O(N^3).
/// Ties are resolved towards the lowest column index, so output is deterministic.
Assignment solve_assignment(const Matrix& cost);

/// Squared Euclidean cost matrix between the supports of mu (rows) and nu (columns).
Matrix squared_distance_matrix(const DiscreteUniform& mu, const DiscreteUniform& nu);

struct DiscreteTransport {
  double distance = 0.0;
  Permutation sigma;  // point k of mu is sent to point sigma[k] of nu
};

DiscreteTransport w2_discrete(const DiscreteUniform& mu, const DiscreteUniform& nu);
double w2_quantile1d(const Quantile1D& mu, const Quantile1D& nu);
double w2_gaussian(const Gaussian& mu, const Gaussian& nu);

/// Dispatches on the measure class; MixedClass if the classes differ.
double w2(const Measure& mu, const Measure& nu);

/// Symmetric PD matrix T with T Sigma_mu T = Sigma_nu: the linear part of the
/// optimal map between two centred Gaussians.
Matrix gaussian_transport_map(const Matrix& cov_from, const Matrix& cov_to);

}  // namespace pawbar
