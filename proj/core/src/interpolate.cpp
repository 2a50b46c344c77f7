#include "pawbar/interpolate.hpp"

#include <string>

#include "pawbar/error.hpp"

namespace pawbar {

namespace {

constexpr double kPdRatio = 1e-12;

void check_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "interpolation weight " + std::to_string(lambda) +
                                                " is outside [0, 1]");
  }
}

}  // namespace

DiscreteDisplacement displace_discrete_with_plan(const DiscreteUniform& mu, const DiscreteUniform& nu,
                                                 double lambda) {
  check_lambda(lambda);
  if (mu.size() != nu.size() || mu.dim() != nu.dim()) {
    throw Error(ErrorCode::SizeMismatch, "discrete interpolation needs equal support size and dimension");
  }
  if (lambda == 0.0) return {mu, {}};
  if (lambda == 1.0) return {nu, {}};

  auto plan = w2_discrete(mu, nu);
  DiscreteUniform out{Matrix(mu.size(), mu.dim())};
  for (std::size_t k = 0; k < mu.size(); ++k) {
    const auto x = mu.points.row(k);
    const auto y = nu.points.row(plan.sigma[k]);
    auto z = out.points.row(k);
    for (std::size_t c = 0; c < mu.dim(); ++c) z[c] = (1.0 - lambda) * x[c] + lambda * y[c];
  }
  if (has_duplicate_points(out.points)) {
    throw Error(ErrorCode::DegenerateOutput,
                "interpolated support points coincide (tie in the optimal assignment?)");
  }
  return {std::move(out), std::move(plan.sigma)};
}

DiscreteUniform displace_discrete(const DiscreteUniform& mu, const DiscreteUniform& nu, double lambda) {
  return displace_discrete_with_plan(mu, nu, lambda).measure;
}

Quantile1D displace_quantile1d(const Quantile1D& mu, const Quantile1D& nu, double lambda) {
  check_lambda(lambda);
  if (mu.size() != nu.size()) throw Error(ErrorCode::SizeMismatch, "quantile grids differ in size");
  if (lambda == 0.0) return mu;
  if (lambda == 1.0) return nu;
  Quantile1D out;
  out.quantiles.resize(mu.size());
  for (std::size_t k = 0; k < mu.size(); ++k) {
    out.quantiles[k] = (1.0 - lambda) * mu.quantiles[k] + lambda * nu.quantiles[k];
  }
  return out;
}

Gaussian displace_gaussian(const Gaussian& mu, const Gaussian& nu, double lambda) {
  check_lambda(lambda);
  if (mu.dim() != nu.dim()) throw Error(ErrorCode::DimensionMismatch, "gaussians differ in dimension");
  if (lambda == 0.0) return mu;
  if (lambda == 1.0) return nu;

  Gaussian out;
  out.mean.resize(mu.dim());
  for (std::size_t k = 0; k < mu.dim(); ++k) out.mean[k] = (1.0 - lambda) * mu.mean[k] + lambda * nu.mean[k];

  const Matrix forward = linalg::cross_sqrt(mu.cov, nu.cov);
  const Matrix backward = linalg::cross_sqrt(nu.cov, mu.cov);
  Matrix cov = (1.0 - lambda) * (1.0 - lambda) * mu.cov;
  cov += lambda * lambda * nu.cov;
  cov += lambda * (1.0 - lambda) * (forward + backward);
  out.cov = linalg::symmetrize(cov);

  const auto range = linalg::eigen_range(out.cov);
  if (!(range.max > 0.0) || !(range.min > kPdRatio * range.max)) {
    throw Error(ErrorCode::NotPD, "interpolated covariance lost positive definiteness");
  }
  return out;
}

Measure displace(const Measure& mu, const Measure& nu, double lambda) {
  if (mu.index() != nu.index()) {
    throw Error(ErrorCode::MixedClass, std::string("cannot interpolate ") +
                                           std::string(to_string(measure_class(mu))) + " towards " +
                                           std::string(to_string(measure_class(nu))));
  }
  return std::visit(
      [&](const auto& a) -> Measure {
        using T = std::decay_t<decltype(a)>;
        const auto& b = std::get<T>(nu);
        if constexpr (std::is_same_v<T, DiscreteUniform>) {
          return displace_discrete(a, b, lambda);
        } else if constexpr (std::is_same_v<T, Quantile1D>) {
          return displace_quantile1d(a, b, lambda);
        } else {
          return displace_gaussian(a, b, lambda);
        }
      },
      mu);
}

}  // namespace pawbar
