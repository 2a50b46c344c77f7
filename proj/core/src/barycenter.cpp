#include "pawbar/barycenter.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pawbar/error.hpp"

namespace pawbar {

namespace {

constexpr std::size_t kMaxBruteForcePoints = 4;
constexpr std::size_t kMaxBruteForceMeasures = 3;
constexpr std::size_t kMaxBruteForceTuples = 576;

template <typename T>
std::vector<const T*> members(const BarycenterProblem& prob, const char* what) {
  std::vector<const T*> out;
  out.reserve(prob.measures.size());
  for (const auto& m : prob.measures) {
    const T* p = std::get_if<T>(&m);
    if (p == nullptr) throw Error(ErrorCode::MixedClass, std::string(what) + " needs every measure of the same class");
    out.push_back(p);
  }
  return out;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

void check_discrete_shapes(const std::vector<const DiscreteUniform*>& ms) {
  for (const auto* m : ms) {
    if (m->size() != ms.front()->size() || m->dim() != ms.front()->dim()) {
      throw Error(ErrorCode::SizeMismatch, "discrete barycenter needs equal support sizes and dimensions");
    }
  }
}

}  // namespace

void validate_problem(const BarycenterProblem& prob) {
  if (prob.measures.empty()) throw Error(ErrorCode::InvalidArgument, "barycenter problem has no measures");
  if (prob.lambda.size() != prob.measures.size()) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(prob.measures.size()) +
                                                " weights, got " + std::to_string(prob.lambda.size()));
  }
  double sum = 0.0;
  for (double l : prob.lambda) {
    if (!(l >= 0.0) || !std::isfinite(l)) throw Error(ErrorCode::InvalidArgument, "weights must be non-negative");
    sum += l;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw Error(ErrorCode::InvalidArgument, "weights sum to " + std::to_string(sum) + ", not 1");
  }
  for (const auto& m : prob.measures) {
    if (m.index() != prob.measures.front().index()) {
      throw Error(ErrorCode::MixedClass, "barycenter measures mix classes");
    }
  }
}

double functional(const Measure& nu, const BarycenterProblem& prob) {
  double value = 0.0;
  for (std::size_t k = 0; k < prob.measures.size(); ++k) {
    const double d = w2(nu, prob.measures[k]);
    value += prob.lambda[k] * d * d;
  }
  return value;
}

Quantile1D barycenter_quantile1d(const BarycenterProblem& prob) {
  validate_problem(prob);
  const auto ms = members<Quantile1D>(prob, "quantile barycenter");
  const std::size_t levels = ms.front()->size();
  for (const auto* m : ms) {
    if (m->size() != levels) throw Error(ErrorCode::SizeMismatch, "quantile grids differ in size");
  }
  Quantile1D out{std::vector<double>(levels, 0.0)};
  for (std::size_t j = 0; j < ms.size(); ++j) {
    for (std::size_t k = 0; k < levels; ++k) out.quantiles[k] += prob.lambda[j] * ms[j]->quantiles[k];
  }
  return out;
}

namespace {

/// sum_j l_j (R S_j R)^{1/2} for R = S^{1/2}
Matrix fixed_point_image(const Matrix& root, const std::vector<const Gaussian*>& ms,
                         const std::vector<double>& lambda) {
  Matrix acc(root.rows(), root.cols());
  for (std::size_t j = 0; j < ms.size(); ++j) {
    if (lambda[j] == 0.0) continue;
    acc += lambda[j] * linalg::sqrt_spd(linalg::symmetrize(root * ms[j]->cov * root));
  }
  return acc;
}

}  // namespace

double gaussian_fixed_point_residual(const Matrix& cov, const BarycenterProblem& prob) {
  const auto ms = members<Gaussian>(prob, "gaussian barycenter");
  const Matrix image = fixed_point_image(linalg::sqrt_spd(cov), ms, prob.lambda);
  return linalg::frobenius_norm(cov - image);
}

GaussianBarycenter barycenter_gaussian(const BarycenterProblem& prob, double tol, std::size_t max_iter) {
  validate_problem(prob);
  const auto ms = members<Gaussian>(prob, "gaussian barycenter");
  const std::size_t d = ms.front()->dim();
  for (const auto* m : ms) {
    if (m->dim() != d) throw Error(ErrorCode::DimensionMismatch, "gaussians differ in dimension");
  }

  GaussianBarycenter out;
  out.measure.mean.assign(d, 0.0);
  out.measure.cov = Matrix(d, d);
  for (std::size_t j = 0; j < ms.size(); ++j) {
    for (std::size_t k = 0; k < d; ++k) out.measure.mean[k] += prob.lambda[j] * ms[j]->mean[k];
    out.measure.cov += prob.lambda[j] * ms[j]->cov;
  }

  Matrix& s = out.measure.cov;
  for (std::size_t it = 0;; ++it) {
    const Matrix root = linalg::sqrt_spd(s);
    const Matrix image = fixed_point_image(root, ms, prob.lambda);
    out.residual = linalg::frobenius_norm(s - image);
    out.iterations = it;
    if (out.residual <= tol) return out;
    if (it == max_iter) {
      throw Error(ErrorCode::DidNotConverge, "gaussian barycenter: residual " + std::to_string(out.residual) +
                                                 " after " + std::to_string(max_iter) + " iterations");
    }
    const Matrix inv_root = linalg::inv_sqrt_spd(s);
    s = linalg::symmetrize(inv_root * image * image * inv_root);
  }
}

AlignedBarycenter barycenter_discrete_aligned(const BarycenterProblem& prob) {
  validate_problem(prob);
  const auto ms = members<DiscreteUniform>(prob, "discrete barycenter");
  check_discrete_shapes(ms);
  const std::size_t n = ms.size();
  const std::size_t points = ms.front()->size();
  const std::size_t d = ms.front()->dim();

  AlignedBarycenter out;
  out.alignment.resize(n);
  out.alignment[0].resize(points);
  std::iota(out.alignment[0].begin(), out.alignment[0].end(), std::size_t{0});
  for (std::size_t j = 1; j < n; ++j) out.alignment[j] = w2_discrete(*ms[0], *ms[j]).sigma;

  // sigma_{0k} must equal sigma_{jk} o sigma_{0j} for every pair (j, k).
  out.consistent = true;
  for (std::size_t j = 1; j < n && out.consistent; ++j) {
    for (std::size_t k = 1; k < n && out.consistent; ++k) {
      if (j == k) continue;
      const auto sigma_jk = w2_discrete(*ms[j], *ms[k]).sigma;
      for (std::size_t p = 0; p < points; ++p) {
        if (sigma_jk[out.alignment[j][p]] != out.alignment[k][p]) {
          out.consistent = false;
          break;
        }
      }
    }
  }

  out.measure.points = Matrix(points, d);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t p = 0; p < points; ++p) {
      const auto x = ms[j]->points.row(out.alignment[j][p]);
      auto z = out.measure.points.row(p);
      for (std::size_t c = 0; c < d; ++c) z[c] += prob.lambda[j] * x[c];
    }
  }
  return out;
}

BruteForceBarycenter barycenter_discrete_bruteforce(const BarycenterProblem& prob) {
  validate_problem(prob);
  const auto ms = members<DiscreteUniform>(prob, "discrete barycenter");
  check_discrete_shapes(ms);
  const std::size_t n = ms.size();
  const std::size_t points = ms.front()->size();
  const std::size_t d = ms.front()->dim();

  std::size_t tuples = 1;
  for (std::size_t j = 1; j < n; ++j) tuples *= factorial(points);
  if (points > kMaxBruteForcePoints || n > kMaxBruteForceMeasures || tuples > kMaxBruteForceTuples) {
    throw Error(ErrorCode::TooLarge, "brute force limited to N <= 4 points and n <= 3 measures");
  }

  std::vector<Permutation> perms;
  Permutation p(points);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  Permutation identity(points);
  std::iota(identity.begin(), identity.end(), std::size_t{0});

  // Odometer over (perm index for measure 1, ..., perm index for measure n-1).
  std::vector<std::size_t> counter(n, 0);
  std::vector<const Permutation*> sigma(n, &identity);
  Matrix z(points, d);

  BruteForceBarycenter best;
  bool have_best = false;
  while (true) {
    for (std::size_t j = 1; j < n; ++j) sigma[j] = &perms[counter[j]];

    // First-order optimal support for this coupling tuple.
    for (std::size_t k = 0; k < points; ++k) {
      auto zk = z.row(k);
      std::fill(zk.begin(), zk.end(), 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        const auto x = ms[j]->points.row((*sigma[j])[k]);
        for (std::size_t c = 0; c < d; ++c) zk[c] += prob.lambda[j] * x[c];
      }
    }
    double value = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double cost = 0.0;
      for (std::size_t k = 0; k < points; ++k) {
        const auto x = ms[j]->points.row((*sigma[j])[k]);
        for (std::size_t c = 0; c < d; ++c) {
          const double diff = z(k, c) - x[c];
          cost += diff * diff;
        }
      }
      value += prob.lambda[j] * cost / static_cast<double>(points);
    }
    if (!have_best || value < best.value) {
      best.value = value;
      best.measure.points = z;
      have_best = true;
    }

    std::size_t j = 1;
    while (j < n && ++counter[j] == perms.size()) counter[j++] = 0;
    if (j >= n) break;
  }
  return best;
}

BarycenterResult compute_barycenter(const BarycenterProblem& prob) {
  validate_problem(prob);
  BarycenterResult out{prob.measures.front(), 0.0, "", 0.0, true};
  switch (measure_class(prob.measures.front())) {
    case MeasureClass::Quantile1D:
      out.measure = barycenter_quantile1d(prob);
      out.oracle = "quantile1d";
      break;
    case MeasureClass::Gaussian: {
      auto g = barycenter_gaussian(prob);
      out.residual = g.residual;
      out.measure = std::move(g.measure);
      out.oracle = "gaussian_fixed_point";
      break;
    }
    case MeasureClass::Discrete: {
      const auto& first = std::get<DiscreteUniform>(prob.measures.front());
      std::size_t tuples = 1;
      for (std::size_t j = 1; j < prob.measures.size(); ++j) tuples *= factorial(first.size());
      if (first.size() <= kMaxBruteForcePoints && prob.measures.size() <= kMaxBruteForceMeasures &&
          tuples <= kMaxBruteForceTuples) {
        out.measure = barycenter_discrete_bruteforce(prob).measure;
        out.oracle = "discrete_bruteforce";
      } else {
        auto a = barycenter_discrete_aligned(prob);
        out.alignment_consistent = a.consistent;
        out.measure = std::move(a.measure);
        out.oracle = "discrete_aligned";
      }
      break;
    }
  }
  out.functional_value = functional(out.measure, prob);
  return out;
}

}  // namespace pawbar
