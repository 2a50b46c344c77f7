#include "pawbar/transport.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pawbar/error.hpp"

namespace pawbar {

bool is_permutation(const Permutation& p) noexcept {
  std::vector<bool> seen(p.size(), false);
  for (std::size_t v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Assignment solve_assignment(const Matrix& cost) {
  if (!cost.square()) throw Error(ErrorCode::SizeMismatch, "assignment needs a square cost matrix");
  const std::size_t n = cost.rows();
  constexpr double inf = std::numeric_limits<double>::infinity();

  // 1-based arrays; index 0 is the virtual source column.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> row_of_col(n + 1, 0), way(n + 1, 0);

  for (std::size_t i = 1; i <= n; ++i) {
    row_of_col[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = row_of_col[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double reduced = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (reduced < minv[j]) {
          minv[j] = reduced;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of_col[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of_col[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      row_of_col[j0] = row_of_col[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment out{Permutation(n), 0.0};
  for (std::size_t j = 1; j <= n; ++j) out.col_of_row[row_of_col[j] - 1] = j - 1;
  for (std::size_t r = 0; r < n; ++r) out.cost += cost(r, out.col_of_row[r]);
  return out;
}

Matrix squared_distance_matrix(const DiscreteUniform& mu, const DiscreteUniform& nu) {
  Matrix c(mu.size(), nu.size());
  for (std::size_t a = 0; a < mu.size(); ++a) {
    for (std::size_t b = 0; b < nu.size(); ++b) {
      double d2 = 0.0;
      for (std::size_t k = 0; k < mu.dim(); ++k) {
        const double diff = mu.points(a, k) - nu.points(b, k);
        d2 += diff * diff;
      }
      c(a, b) = d2;
    }
  }
  return c;
}

DiscreteTransport w2_discrete(const DiscreteUniform& mu, const DiscreteUniform& nu) {
  if (mu.size() != nu.size()) {
    throw Error(ErrorCode::SizeMismatch, "discrete measures have " + std::to_string(mu.size()) + " and " +
                                             std::to_string(nu.size()) + " points");
  }
  if (mu.dim() != nu.dim()) throw Error(ErrorCode::SizeMismatch, "discrete measures differ in dimension");
  auto plan = solve_assignment(squared_distance_matrix(mu, nu));
  const double mean_cost = plan.cost / static_cast<double>(mu.size());
  return {std::sqrt(std::max(mean_cost, 0.0)), std::move(plan.col_of_row)};
}

double w2_quantile1d(const Quantile1D& mu, const Quantile1D& nu) {
  if (mu.size() != nu.size()) {
    throw Error(ErrorCode::SizeMismatch, "quantile grids have " + std::to_string(mu.size()) + " and " +
                                             std::to_string(nu.size()) + " levels");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    const double diff = mu.quantiles[k] - nu.quantiles[k];
    sum += diff * diff;
  }
  return std::sqrt(sum / static_cast<double>(mu.size()));
}

Matrix gaussian_transport_map(const Matrix& cov_from, const Matrix& cov_to) {
  const Matrix root = linalg::sqrt_spd(cov_from);
  const Matrix inv_root = linalg::inv_sqrt_spd(cov_from);
  const Matrix middle = linalg::sqrt_spd(linalg::symmetrize(root * cov_to * root));
  return linalg::symmetrize(inv_root * middle * inv_root);
}

double w2_gaussian(const Gaussian& mu, const Gaussian& nu) {
  if (mu.dim() != nu.dim() || mu.cov.rows() != nu.cov.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "gaussians differ in dimension");
  }
  double mean_term = 0.0;
  for (std::size_t k = 0; k < mu.dim(); ++k) {
    const double diff = mu.mean[k] - nu.mean[k];
    mean_term += diff * diff;
  }
  // Bures term tr(S1 + S2 - 2 (S1^{1/2} S2 S1^{1/2})^{1/2}) written as the
  // sum of squares |S1^{-1/2} C - S1^{1/2}|_F^2 with C the middle square
  // root. Same value, but no cancellation when S1 and S2 are close.
  const Matrix root = linalg::sqrt_spd(mu.cov);
  const Matrix inv_root = linalg::inv_sqrt_spd(mu.cov);
  const Matrix middle = linalg::sqrt_spd(linalg::symmetrize(root * nu.cov * root));
  const double bures = linalg::frobenius_norm(inv_root * middle - root);
  return std::sqrt(std::max(mean_term + bures * bures, 0.0));
}

double w2(const Measure& mu, const Measure& nu) {
  if (mu.index() != nu.index()) {
    throw Error(ErrorCode::MixedClass, std::string("cannot couple ") +
                                           std::string(to_string(measure_class(mu))) + " with " +
                                           std::string(to_string(measure_class(nu))));
  }
  return std::visit(
      [&](const auto& a) -> double {
        using T = std::decay_t<decltype(a)>;
        const auto& b = std::get<T>(nu);
        if constexpr (std::is_same_v<T, DiscreteUniform>) {
          return w2_discrete(a, b).distance;
        } else if constexpr (std::is_same_v<T, Quantile1D>) {
          return w2_quantile1d(a, b);
        } else {
          return w2_gaussian(a, b);
        }
      },
      mu);
}

}  // namespace pawbar
