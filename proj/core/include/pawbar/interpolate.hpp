#pragma once

#include "pawbar/measures.hpp"
#include "pawbar/transport.hpp"

namespace pawbar {

// Displacement interpolation: the point at fraction lambda along the W2
// geodesic from mu to nu. lambda = 0 and lambda = 1 return exact copies of
// the endpoints without solving for a coupling.

struct DiscreteDisplacement {
  DiscreteUniform measure;
  Permutation sigma;  // coupling used; empty at the endpoints lambda = 0, 1
};

/// Point k of the result is (1 - lambda) x_k + lambda y_{sigma(k)}.
/// Throws DegenerateOutput if two interpolated points coincide.
DiscreteDisplacement displace_discrete_with_plan(const DiscreteUniform& mu, const DiscreteUniform& nu,
                                                 double lambda);
DiscreteUniform displace_discrete(const DiscreteUniform& mu, const DiscreteUniform& nu, double lambda);

Quantile1D displace_quantile1d(const Quantile1D& mu, const Quantile1D& nu, double lambda);

/// mean (1-l) m_i + l m_j; covariance
/// (1-l)^2 S_i + l^2 S_j + l(1-l) ((S_i S_j)^{1/2} + (S_j S_i)^{1/2}).
Gaussian displace_gaussian(const Gaussian& mu, const Gaussian& nu, double lambda);

Measure displace(const Measure& mu, const Measure& nu, double lambda);

}  // namespace pawbar
