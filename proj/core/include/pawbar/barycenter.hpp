#pragma once

#include <cstddef>
#include <vector>

#include "pawbar/measures.hpp"
#include "pawbar/transport.hpp"

namespace pawbar {

/// min over nu of sum_i lambda_i W2^2(nu, mu_i)
struct BarycenterProblem {
  std::vector<Measure> measures;
  std::vector<double> lambda;
};

/// Non-negative weights summing to one within 1e-12, one per measure, all of
/// the same class. Throws InvalidArgument / MixedClass.
void validate_problem(const BarycenterProblem& prob);

/// sum_i lambda_i w2(nu, mu_i)^2
double functional(const Measure& nu, const BarycenterProblem& prob);

/// Pointwise weighted mean of the quantile vectors.
Quantile1D barycenter_quantile1d(const BarycenterProblem& prob);

struct GaussianBarycenter {
  Gaussian measure;
  double residual = 0.0;  // |S - sum_j l_j (S^{1/2} S_j S^{1/2})^{1/2}|_F
  std::size_t iterations = 0;
};

/// Fixed-point residual of a candidate barycenter covariance.
double gaussian_fixed_point_residual(const Matrix& cov, const BarycenterProblem& prob);

/// Mean sum_j l_j m_j; covariance from the fixed-point map
/// S <- S^{-1/2} (sum_j l_j (S^{1/2} S_j S^{1/2})^{1/2})^2 S^{-1/2}
/// started at sum_j l_j S_j. Throws DidNotConverge if the residual is still
/// above tol after max_iter iterations.
GaussianBarycenter barycenter_gaussian(const BarycenterProblem& prob, double tol = 1e-10,
                                       std::size_t max_iter = 1000);

struct AlignedBarycenter {
  DiscreteUniform measure;
  std::vector<Permutation> alignment;  // alignment[j] maps points of measure 0 to measure j
  bool consistent = false;             // all pairwise optimal plans compose
};

/// Aligns every measure to the first one with optimal permutations and
/// averages the aligned points. Only a certified barycenter when `consistent`;
/// otherwise it is returned as a candidate.
AlignedBarycenter barycenter_discrete_aligned(const BarycenterProblem& prob);

struct BruteForceBarycenter {
  DiscreteUniform measure;
  double value = 0.0;
};

/// Exact barycenter by enumerating permutation tuples relative to the first
/// measure. Limited to N <= 4, n <= 3 (at most 576 tuples); TooLarge otherwise.
BruteForceBarycenter barycenter_discrete_bruteforce(const BarycenterProblem& prob);

/// Oracle picked by measure class: quantile closed form, Gaussian fixed point,
/// discrete brute force when small enough and alignment otherwise.
struct BarycenterResult {
  Measure measure;
  double functional_value = 0.0;
  const char* oracle = "";
  double residual = 0.0;         // Gaussian only
  bool alignment_consistent = true;  // discrete aligned oracle only
};
BarycenterResult compute_barycenter(const BarycenterProblem& prob);

}  // namespace pawbar
