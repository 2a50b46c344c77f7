#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pawbar/graph.hpp"
#include "pawbar/measures.hpp"
#include "pawbar/rng.hpp"
#include "pawbar/transport.hpp"

namespace pawbar {

/// What the per-agent error columns of a trace measure.
enum class ErrorMetric {
  W2,            // w2(mu_i, reference)
  CovFrobenius,  // |Sigma_i - Sigma_ref|_F, Gaussian class only
};

enum class ReferenceKind {
  None,
  Fixed,       // the measure in SimulationConfig::reference
  Barycenter,  // barycenter of the initial measures under the extracted lambda
};

struct SimulationConfig {
  InteractionGraph graph;
  std::vector<Measure> initial;
  std::uint64_t seed = 0;
  std::size_t max_steps = 10000;
  double stop_tol = 1e-8;
  ReferenceKind reference_kind = ReferenceKind::None;
  std::optional<Measure> reference;
  ErrorMetric error_metric = ErrorMetric::W2;
  std::size_t record_every = 1;
  double lambda_tol = 1e-12;
};

/// Throws pawbar::Error on the first violated invariant: graph checks,
/// NonHomogeneous for mixed classes, SizeMismatch / DimensionMismatch for
/// incompatible sizes, and the per-measure invariants.
void validate_config(const SimulationConfig& config);

struct SimulationState {
  std::size_t t = 0;
  std::vector<Measure> measures;
  Matrix product;  // A(t-1) ... A(0)
  RngState rng;
  /// Discrete class only. provenance[i] is N x (n N); row k holds the convex
  /// weights expressing point k of agent i over all initial support points
  /// (agent-major: column a N + m is point m of agent a at time 0).
  std::vector<Matrix> provenance;
};

SimulationState initial_state(const SimulationConfig& config);

/// Applies one edge event: directed mode moves mu_i a fraction a_ij towards
/// mu_j; symmetric mode sets both agents to their geodesic midpoint.
void step(SimulationState& state, const EdgeEvent& ev, GraphMode mode);

/// max over agent pairs of w2(mu_i, mu_j)
double pairwise_spread(const std::vector<Measure>& measures);

/// Sum of w2 over the graph's edges.
double u_metric(const std::vector<Measure>& measures, const InteractionGraph& g);

struct ProvenanceCheck {
  double max_row_sum_error = 0.0;
  double min_entry = 0.0;
  double max_reconstruction_error = 0.0;
};

/// Measures how far the provenance weights of a discrete-class state are from
/// being convex and from reproducing the current support points.
ProvenanceCheck check_provenance(const SimulationState& state, const std::vector<Measure>& initial);

struct TraceRecord {
  std::size_t t = 0;
  std::size_t i = 0;  // 0-based
  std::size_t j = 0;
  double spread = 0.0;
  double u_metric = 0.0;
  std::vector<double> errors;  // per agent; empty without a reference
};

enum class StopReason { Converged, MaxSteps };

struct Trace {
  std::vector<TraceRecord> records;
  std::vector<Measure> final_measures;
  Matrix product;
  LambdaEstimate lambda;
  StopReason stop_reason = StopReason::MaxSteps;
  std::size_t steps = 0;
  std::optional<Measure> reference;  // the reference actually used for the errors
};

/// Step-by-step driver around SimulationState. Construction validates the config.
class Simulator {
 public:
  explicit Simulator(SimulationConfig config);

  const SimulationConfig& config() const noexcept { return config_; }
  const SimulationState& state() const noexcept { return state_; }

  EdgeEvent next_event();
  EdgeEvent advance();
  void apply(const EdgeEvent& ev);

 private:
  SimulationConfig config_;
  SimulationState state_;
};

/// Runs until pairwise_spread <= stop_tol or max_steps events. Deterministic
/// in (config, seed). Records every record_every-th step plus the last one.
Trace run(const SimulationConfig& config);

struct DiracReductionResult {
  bool ok = false;
  double max_deviation = 0.0;
  std::size_t steps = 0;
};

/// Runs the measure simulation for max_steps events next to the plain
/// recursion x_i <- (1-a) x_i + a x_j on the same event stream and compares
/// them after every step. Requires every initial measure to be a single Dirac.
DiracReductionResult dirac_reduction_check(const SimulationConfig& config, double tol = 1e-12);

}  // namespace pawbar
