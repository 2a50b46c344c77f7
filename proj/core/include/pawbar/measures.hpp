#pragma once

#include <cstddef>
#include <string_view>
#include <variant>
#include <vector>

#include "pawbar/linalg.hpp"

namespace pawbar {

using linalg::Matrix;

/// Uniform measure (1/N) sum_k delta_{x_k} on N distinct points of R^d.
/// Points are stored as the rows of an N x d matrix.
struct DiscreteUniform {
  Matrix points;

  std::size_t size() const noexcept { return points.rows(); }
  std::size_t dim() const noexcept { return points.cols(); }

  friend bool operator==(const DiscreteUniform&, const DiscreteUniform&) = default;
};

/// A 1-D measure represented by its quantile function sampled on the
/// midpoint grid u_k = (k - 1/2) / M, k = 1..M.
struct Quantile1D {
  std::vector<double> quantiles;

  std::size_t size() const noexcept { return quantiles.size(); }

  friend bool operator==(const Quantile1D&, const Quantile1D&) = default;
};

struct Gaussian {
  std::vector<double> mean;
  Matrix cov;

  std::size_t dim() const noexcept { return mean.size(); }

  friend bool operator==(const Gaussian&, const Gaussian&) = default;
};

using Measure = std::variant<DiscreteUniform, Quantile1D, Gaussian>;

enum class MeasureClass { Discrete, Quantile1D, Gaussian };

MeasureClass measure_class(const Measure& m) noexcept;
std::string_view to_string(MeasureClass c) noexcept;

/// Minimum Euclidean separation between points of a DiscreteUniform.
inline constexpr double kDistinctnessTol = 1e-12;

/// Throws pawbar::Error naming the violated invariant
/// (DuplicatePoints, NonMonotoneQuantiles, NotPD, DimensionMismatch).
void validate(const DiscreteUniform& m);
void validate(const Quantile1D& m);
void validate(const Gaussian& m);
void validate(const Measure& m);

/// Whether any two points of the measure are closer than kDistinctnessTol.
bool has_duplicate_points(const Matrix& points) noexcept;

/// Standard normal quantile function. Acklam's rational approximation
/// refined with one Halley step against erfc; absolute error well below 1e-12
/// on (0, 1).
double standard_normal_quantile(double p);

/// Quantile1D of N(mean, sd^2) on the midpoint grid with M levels.
Quantile1D gaussian1d_to_quantile1d(double mean, double sd, std::size_t levels);

/// The quantile vector of a 1-D discrete uniform measure (its sorted points).
Quantile1D to_quantile1d(const DiscreteUniform& m);

}  // namespace pawbar
