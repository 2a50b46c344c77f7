#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pawbar/linalg.hpp"
#include "pawbar/rng.hpp"

namespace pawbar {

using linalg::Matrix;

enum class GraphMode { Directed, Symmetric };

struct Edge {
  std::size_t i = 0;  // 0-based; directed edges update agent i towards j
  std::size_t j = 0;
  double weight = 0.5;  // a_ij in (0,1); fixed at 1/2 in symmetric mode
  double prob = 0.0;    // selection probability p_e > 0

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct InteractionGraph {
  std::size_t n = 0;
  GraphMode mode = GraphMode::Directed;
  std::vector<Edge> edges;

  friend bool operator==(const InteractionGraph&, const InteractionGraph&) = default;
};

/// Checks weights, probabilities, self-loops, duplicates and connectivity
/// (strong connectivity for directed graphs). Throws pawbar::Error.
void validate_graph(const InteractionGraph& g);

/// Reachability-based connectivity tests; exposed for tests and diagnostics.
bool is_strongly_connected(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs);
bool is_connected(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

struct EdgeEvent {
  std::size_t step = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  double weight = 0.5;
  std::size_t edge_index = 0;

  friend bool operator==(const EdgeEvent&, const EdgeEvent&) = default;
};

/// Draws one edge with probability p_e by inverse CDF on a single uniform.
EdgeEvent sample_edge(const InteractionGraph& g, RngState& rng, std::size_t step = 0);

/// Row-stochastic matrix of one event. Directed: identity with row i set to
/// (1-a) at column i and a at column j. Symmetric: rows i and j both set to
/// 1/2 at columns i and j (doubly stochastic).
Matrix evolution_matrix(const EdgeEvent& ev, std::size_t n, GraphMode mode);

/// A * P: the running product A(t) ... A(0) after one more event.
Matrix product_update(const Matrix& product, const Matrix& event_matrix);

/// Same result as product_update(product, evolution_matrix(ev, n, mode)) but in
/// O(n) by touching only the rows the event changes.
void apply_event_to_product(Matrix& product, const EdgeEvent& ev, GraphMode mode);

struct LambdaEstimate {
  std::optional<std::vector<double>> lambda;  // empty when not converged
  double spread = 0.0;  // max over columns of (max - min) row entry

  bool converged() const noexcept { return lambda.has_value(); }
};

/// If every column of the row-stochastic product is constant to within tol,
/// returns the column means as the convex vector lambda.
LambdaEstimate extract_lambda(const Matrix& product, double tol = 1e-12);

bool is_row_stochastic(const Matrix& m, double tol = 1e-12) noexcept;

/// sum_e p_e A_e
Matrix expected_evolution_matrix(const InteractionGraph& g);

}  // namespace pawbar
