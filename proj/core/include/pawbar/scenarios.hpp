#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "pawbar/graph.hpp"
#include "pawbar/measures.hpp"
#include "pawbar/rng.hpp"
#include "pawbar/simulate.hpp"

namespace pawbar::scenarios {

/// Directed cycle 1 -> 2 -> ... -> n -> 1, uniform selection.
InteractionGraph directed_cycle(std::size_t n, double weight);

/// Undirected path {1,2}, {2,3}, ..., {n-1,n}, uniform selection.
InteractionGraph symmetric_line(std::size_t n);

/// Directed graph from 0-based arcs, one shared weight, uniform selection.
InteractionGraph directed_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs,
                                double weight);

/// Q diag(w) Q^T with Q Haar-distributed (Gram-Schmidt on a Gaussian matrix)
/// and eigenvalues w uniform in [lo, hi].
Matrix random_spd(std::size_t dim, RngState& rng, double lo = 0.5, double hi = 3.0);

/// Standard-normal vector.
std::vector<double> random_normal_vector(std::size_t dim, RngState& rng);

/// The 5-agent, 5-dimensional Gaussian experiments with all edge weights 0.75:
/// `strongly_connected` picks the 8-arc strongly connected digraph, otherwise
/// the directed 5-cycle. Initial means and covariances are drawn from `seed`;
/// the same seed drives edge selection.
SimulationConfig gaussian_figure_config(bool strongly_connected, std::uint64_t seed);

/// Arcs of the strongly connected digraph used by gaussian_figure_config (0-based).
std::vector<std::pair<std::size_t, std::size_t>> figure_digraph_arcs();

}  // namespace pawbar::scenarios
