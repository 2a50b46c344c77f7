#include "pawbar/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "pawbar/error.hpp"

namespace pawbar {

double next_normal(RngState& rng) noexcept {
  // 1 - u keeps the log argument in (0, 1].
  const double u1 = 1.0 - next_uniform(rng);
  const double u2 = next_uniform(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

using Adjacency = std::vector<std::vector<std::size_t>>;

std::size_t count_reachable(const Adjacency& adj, std::size_t start) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count;
}

std::string edge_name(const Edge& e) {
  return "(" + std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) + ")";
}

}  // namespace

bool is_strongly_connected(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
  if (n == 0) return false;
  Adjacency forward(n), reverse(n);
  for (const auto& [a, b] : arcs) {
    forward[a].push_back(b);
    reverse[b].push_back(a);
  }
  return count_reachable(forward, 0) == n && count_reachable(reverse, 0) == n;
}

bool is_connected(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (n == 0) return false;
  Adjacency adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return count_reachable(adj, 0) == n;
}

void validate_graph(const InteractionGraph& g) {
  if (g.n < 2) throw Error(ErrorCode::BadEdge, "graph needs at least 2 agents");
  if (g.edges.empty()) throw Error(ErrorCode::BadEdge, "graph has no edges");

  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  double total_prob = 0.0;
  for (const auto& e : g.edges) {
    if (e.i >= g.n || e.j >= g.n) throw Error(ErrorCode::BadEdge, "edge " + edge_name(e) + " references an unknown agent");
    if (e.i == e.j) throw Error(ErrorCode::BadEdge, "self-loop " + edge_name(e));
    std::pair<std::size_t, std::size_t> key{e.i, e.j};
    if (g.mode == GraphMode::Symmetric && key.first > key.second) std::swap(key.first, key.second);
    if (!seen.insert(key).second) throw Error(ErrorCode::BadEdge, "duplicate edge " + edge_name(e));

    if (g.mode == GraphMode::Symmetric) {
      if (e.weight != 0.5) throw Error(ErrorCode::BadWeight, "symmetric edge " + edge_name(e) + " must have weight 1/2");
    } else if (!(e.weight > 0.0 && e.weight < 1.0)) {
      throw Error(ErrorCode::BadWeight, "edge " + edge_name(e) + " weight " + std::to_string(e.weight) +
                                            " is outside (0,1)");
    }
    if (!(e.prob > 0.0) || !std::isfinite(e.prob)) {
      throw Error(ErrorCode::BadProbability, "edge " + edge_name(e) + " has non-positive selection probability");
    }
    total_prob += e.prob;
    arcs.emplace_back(e.i, e.j);
  }
  if (std::abs(total_prob - 1.0) > 1e-12) {
    throw Error(ErrorCode::BadProbability, "selection probabilities sum to " + std::to_string(total_prob));
  }

  if (g.mode == GraphMode::Directed) {
    if (!is_strongly_connected(g.n, arcs)) throw Error(ErrorCode::NotStronglyConnected, "digraph is not strongly connected");
  } else if (!is_connected(g.n, arcs)) {
    throw Error(ErrorCode::NotConnected, "graph is not connected");
  }
}

EdgeEvent sample_edge(const InteractionGraph& g, RngState& rng, std::size_t step) {
  const double u = next_uniform(rng);
  double cumulative = 0.0;
  std::size_t chosen = g.edges.size() - 1;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    cumulative += g.edges[e].prob;
    if (u < cumulative) {
      chosen = e;
      break;
    }
  }
  const Edge& edge = g.edges[chosen];
  return {step, edge.i, edge.j, g.mode == GraphMode::Symmetric ? 0.5 : edge.weight, chosen};
}

Matrix evolution_matrix(const EdgeEvent& ev, std::size_t n, GraphMode mode) {
  Matrix a = Matrix::identity(n);
  if (mode == GraphMode::Directed) {
    a(ev.i, ev.i) = 1.0 - ev.weight;
    a(ev.i, ev.j) = ev.weight;
  } else {
    a(ev.i, ev.i) = 0.5;
    a(ev.i, ev.j) = 0.5;
    a(ev.j, ev.i) = 0.5;
    a(ev.j, ev.j) = 0.5;
  }
  return a;
}

Matrix product_update(const Matrix& product, const Matrix& event_matrix) { return event_matrix * product; }

void apply_event_to_product(Matrix& product, const EdgeEvent& ev, GraphMode mode) {
  auto row_i = product.row(ev.i);
  auto row_j = product.row(ev.j);
  if (mode == GraphMode::Directed) {
    const double a = ev.weight;
    for (std::size_t c = 0; c < row_i.size(); ++c) row_i[c] = (1.0 - a) * row_i[c] + a * row_j[c];
  } else {
    for (std::size_t c = 0; c < row_i.size(); ++c) {
      const double mid = 0.5 * row_i[c] + 0.5 * row_j[c];
      row_i[c] = mid;
      row_j[c] = mid;
    }
  }
}

LambdaEstimate extract_lambda(const Matrix& product, double tol) {
  LambdaEstimate out;
  const std::size_t n = product.rows();
  std::vector<double> lambda(product.cols(), 0.0);
  for (std::size_t c = 0; c < product.cols(); ++c) {
    double lo = product(0, c), hi = product(0, c), sum = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      lo = std::min(lo, product(r, c));
      hi = std::max(hi, product(r, c));
      sum += product(r, c);
    }
    out.spread = std::max(out.spread, hi - lo);
    lambda[c] = sum / static_cast<double>(n);
  }
  if (out.spread <= tol) out.lambda = std::move(lambda);
  return out;
}

bool is_row_stochastic(const Matrix& m, double tol) noexcept {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double sum = 0.0;
    for (double v : m.row(r)) {
      if (v < 0.0) return false;
      sum += v;
    }
    if (std::abs(sum - 1.0) > tol) return false;
  }
  return true;
}

Matrix expected_evolution_matrix(const InteractionGraph& g) {
  Matrix expected(g.n, g.n);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    EdgeEvent ev{0, edge.i, edge.j, g.mode == GraphMode::Symmetric ? 0.5 : edge.weight, e};
    expected += edge.prob * evolution_matrix(ev, g.n, g.mode);
  }
  return expected;
}

}  // namespace pawbar
