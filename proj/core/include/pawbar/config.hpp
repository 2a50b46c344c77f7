#pragma once

#include <string>
#include <string_view>

#include "pawbar/graph.hpp"
#include "pawbar/simulate.hpp"

namespace pawbar {

// Simulation config JSON:
// {
//   "graph": {"n": int, "mode": "directed"|"symmetric",
//             "edges": [{"i": int, "j": int, "weight": f64?, "prob": f64?}, ...]},
//   "measures": [measure, ...],
//   "seed": u64, "max_steps": int, "stop_tol": f64,
//   "reference": measure | "barycenter",      (optional)
//   "error_metric": "w2" | "cov_frobenius",   (optional, default w2)
//   "record_every": int,                      (optional, default 1)
//   "lambda_tol": f64                         (optional, default 1e-12)
// }
// Agent indices are 1-based. "weight" is forbidden in symmetric mode and
// defaults to 1/2 in directed mode. Omitting "prob" on every edge selects
// edges uniformly; giving it on only some edges is an error.

/// Structural parse only; SchemaError with a JSON-pointer path on failure.
/// Run validate_config() for the graph and measure invariants.
SimulationConfig parse_config(std::string_view text);
std::string serialize_config(const SimulationConfig& config);

InteractionGraph parse_graph(std::string_view text);

}  // namespace pawbar
