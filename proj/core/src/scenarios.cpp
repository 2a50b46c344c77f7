#include "pawbar/scenarios.hpp"

#include <cmath>

#include "pawbar/error.hpp"

namespace pawbar::scenarios {

namespace {

// Measures are drawn from a stream decorrelated from the edge-selection stream.
constexpr std::uint64_t kMeasureStreamSalt = 0xD1B54A32D192ED03ULL;

void uniform_probs(InteractionGraph& g) {
  for (auto& e : g.edges) e.prob = 1.0 / static_cast<double>(g.edges.size());
}

}  // namespace

InteractionGraph directed_cycle(std::size_t n, double weight) {
  InteractionGraph g{n, GraphMode::Directed, {}};
  for (std::size_t k = 0; k < n; ++k) g.edges.push_back({k, (k + 1) % n, weight, 0.0});
  uniform_probs(g);
  return g;
}

InteractionGraph symmetric_line(std::size_t n) {
  InteractionGraph g{n, GraphMode::Symmetric, {}};
  for (std::size_t k = 0; k + 1 < n; ++k) g.edges.push_back({k, k + 1, 0.5, 0.0});
  uniform_probs(g);
  return g;
}

InteractionGraph directed_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs,
                                double weight) {
  InteractionGraph g{n, GraphMode::Directed, {}};
  for (const auto& [i, j] : arcs) g.edges.push_back({i, j, weight, 0.0});
  uniform_probs(g);
  return g;
}

std::vector<double> random_normal_vector(std::size_t dim, RngState& rng) {
  std::vector<double> v(dim);
  for (double& x : v) x = next_normal(rng);
  return v;
}

Matrix random_spd(std::size_t dim, RngState& rng, double lo, double hi) {
  // Modified Gram-Schmidt on the columns of a Gaussian matrix.
  Matrix q(dim, dim);
  for (double& x : q.data()) x = next_normal(rng);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      double dot = 0.0;
      for (std::size_t r = 0; r < dim; ++r) dot += q(r, c) * q(r, prev);
      for (std::size_t r = 0; r < dim; ++r) q(r, c) -= dot * q(r, prev);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < dim; ++r) norm += q(r, c) * q(r, c);
    norm = std::sqrt(norm);
    if (!(norm > 0.0)) throw Error(ErrorCode::DidNotConverge, "random_spd drew a rank-deficient matrix");
    for (std::size_t r = 0; r < dim; ++r) q(r, c) /= norm;
  }
  std::vector<double> eig(dim);
  for (double& w : eig) w = lo + (hi - lo) * next_uniform(rng);
  return linalg::symmetrize(q * Matrix::diagonal(eig) * q.transpose());
}

std::vector<std::pair<std::size_t, std::size_t>> figure_digraph_arcs() {
  return {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {2, 4}, {3, 1}};
}

SimulationConfig gaussian_figure_config(bool strongly_connected, std::uint64_t seed) {
  constexpr std::size_t n = 5;
  constexpr std::size_t dim = 5;
  constexpr double weight = 0.75;

  SimulationConfig config;
  config.graph = strongly_connected ? directed_graph(n, figure_digraph_arcs(), weight) : directed_cycle(n, weight);
  RngState rng{seed ^ kMeasureStreamSalt};
  for (std::size_t a = 0; a < n; ++a) {
    Gaussian g;
    g.mean = random_normal_vector(dim, rng);
    g.cov = random_spd(dim, rng);
    config.initial.emplace_back(std::move(g));
  }
  config.seed = seed;
  config.max_steps = 5000;
  config.stop_tol = 0.0;
  config.reference_kind = ReferenceKind::Barycenter;
  config.error_metric = ErrorMetric::CovFrobenius;
  config.record_every = 1;
  return config;
}

}  // namespace pawbar::scenarios
