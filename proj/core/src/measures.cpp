#include "pawbar/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pawbar/error.hpp"

namespace pawbar {

namespace {

constexpr double kPdRatio = 1e-12;

}  // namespace

MeasureClass measure_class(const Measure& m) noexcept {
  return static_cast<MeasureClass>(m.index());
}

std::string_view to_string(MeasureClass c) noexcept {
  switch (c) {
    case MeasureClass::Discrete: return "discrete";
    case MeasureClass::Quantile1D: return "quantile1d";
    case MeasureClass::Gaussian: return "gaussian";
  }
  return "unknown";
}

bool has_duplicate_points(const Matrix& points) noexcept {
  const double tol2 = kDistinctnessTol * kDistinctnessTol;
  for (std::size_t a = 0; a < points.rows(); ++a) {
    for (std::size_t b = a + 1; b < points.rows(); ++b) {
      double d2 = 0.0;
      for (std::size_t c = 0; c < points.cols(); ++c) {
        const double diff = points(a, c) - points(b, c);
        d2 += diff * diff;
      }
      if (d2 <= tol2) return true;
    }
  }
  return false;
}

void validate(const DiscreteUniform& m) {
  if (m.size() == 0) throw Error(ErrorCode::DimensionMismatch, "discrete measure has no points");
  if (m.dim() == 0) throw Error(ErrorCode::DimensionMismatch, "discrete points have dimension 0");
  for (double v : m.points.data()) {
    if (!std::isfinite(v)) throw Error(ErrorCode::SchemaError, "discrete point coordinate is not finite");
  }
  if (has_duplicate_points(m.points)) {
    throw Error(ErrorCode::DuplicatePoints, "support points must be pairwise distinct");
  }
}

void validate(const Quantile1D& m) {
  if (m.quantiles.empty()) throw Error(ErrorCode::DimensionMismatch, "quantile vector is empty");
  for (double v : m.quantiles) {
    if (!std::isfinite(v)) throw Error(ErrorCode::SchemaError, "quantile value is not finite");
  }
  for (std::size_t k = 0; k + 1 < m.quantiles.size(); ++k) {
    if (m.quantiles[k] > m.quantiles[k + 1]) {
      throw Error(ErrorCode::NonMonotoneQuantiles,
                  "quantiles[" + std::to_string(k) + "] > quantiles[" + std::to_string(k + 1) + "]");
    }
  }
}

void validate(const Gaussian& m) {
  const std::size_t d = m.dim();
  if (d == 0) throw Error(ErrorCode::DimensionMismatch, "gaussian mean is empty");
  if (m.cov.rows() != d || m.cov.cols() != d) {
    throw Error(ErrorCode::DimensionMismatch, "covariance is " + std::to_string(m.cov.rows()) + "x" +
                                                  std::to_string(m.cov.cols()) + ", mean has dimension " +
                                                  std::to_string(d));
  }
  for (double v : m.mean) {
    if (!std::isfinite(v)) throw Error(ErrorCode::SchemaError, "mean entry is not finite");
  }
  for (double v : m.cov.data()) {
    if (!std::isfinite(v)) throw Error(ErrorCode::SchemaError, "covariance entry is not finite");
  }
  if (!linalg::is_symmetric(m.cov)) throw Error(ErrorCode::NotPD, "covariance is not symmetric");
  const auto range = linalg::eigen_range(m.cov);
  if (!(range.max > 0.0) || !(range.min > kPdRatio * range.max)) {
    throw Error(ErrorCode::NotPD, "covariance is not strictly positive definite (smallest eigenvalue " +
                                      std::to_string(range.min) + ")");
  }
}

void validate(const Measure& m) {
  std::visit([](const auto& v) { validate(v); }, m);
}

double standard_normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "normal quantile requires p in (0, 1)");
  }
  // Acklam's coefficients.
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }

  // Halley refinement on Phi(x) - p.
  const double e = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  x = x - u / (1.0 + 0.5 * x * u);
  return x;
}

Quantile1D gaussian1d_to_quantile1d(double mean, double sd, std::size_t levels) {
  if (!(sd > 0.0)) throw Error(ErrorCode::InvalidArgument, "standard deviation must be positive");
  if (levels < 2) throw Error(ErrorCode::InvalidArgument, "need at least 2 quantile levels");
  Quantile1D out;
  out.quantiles.resize(levels);
  const double m = static_cast<double>(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    const double u = (static_cast<double>(k) + 0.5) / m;
    out.quantiles[k] = mean + sd * standard_normal_quantile(u);
  }
  return out;
}

Quantile1D to_quantile1d(const DiscreteUniform& m) {
  if (m.dim() != 1) throw Error(ErrorCode::DimensionMismatch, "quantile view needs 1-D points");
  Quantile1D out{{m.points.data().begin(), m.points.data().end()}};
  std::sort(out.quantiles.begin(), out.quantiles.end());
  return out;
}

}  // namespace pawbar
