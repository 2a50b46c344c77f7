#include "pawbar/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pawbar/barycenter.hpp"
#include "pawbar/error.hpp"
#include "pawbar/interpolate.hpp"

namespace pawbar {

namespace {

void check_compatible(const Measure& a, const Measure& b, const std::string& where) {
  if (a.index() != b.index()) {
    throw Error(ErrorCode::NonHomogeneous, where + " is " + std::string(to_string(measure_class(b))) +
                                               ", expected " + std::string(to_string(measure_class(a))));
  }
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, DiscreteUniform>) {
          if (x.size() != y.size()) throw Error(ErrorCode::SizeMismatch, where + " has a different number of points");
          if (x.dim() != y.dim()) throw Error(ErrorCode::DimensionMismatch, where + " has a different dimension");
        } else if constexpr (std::is_same_v<T, Quantile1D>) {
          if (x.size() != y.size()) throw Error(ErrorCode::SizeMismatch, where + " has a different number of quantiles");
        } else {
          if (x.dim() != y.dim()) throw Error(ErrorCode::DimensionMismatch, where + " has a different dimension");
        }
      },
      a);
}

double error_to_reference(const Measure& m, const Measure& reference, ErrorMetric metric) {
  if (metric == ErrorMetric::CovFrobenius) {
    return linalg::frobenius_norm(std::get<Gaussian>(m).cov - std::get<Gaussian>(reference).cov);
  }
  return w2(m, reference);
}

// Upper bound on events replayed to pin down lambda for a barycenter reference.
constexpr std::size_t kLambdaProbeSteps = 1000000;

Measure barycenter_reference(const SimulationConfig& config) {
  // Edge selection depends only on the seed, so the event stream can be
  // replayed on the product alone. The measure spread may reach stop_tol well
  // before the product columns are flat, hence the separate loop.
  RngState rng{config.seed};
  Matrix product = Matrix::identity(config.graph.n);
  LambdaEstimate est = extract_lambda(product, config.lambda_tol);
  const std::size_t cap = std::max(config.max_steps, kLambdaProbeSteps);
  for (std::size_t t = 0; !est.converged() && t < cap; ++t) {
    apply_event_to_product(product, sample_edge(config.graph, rng, t), config.graph.mode);
    est = extract_lambda(product, config.lambda_tol);
  }
  if (!est.converged()) {
    throw Error(ErrorCode::DidNotConverge, "evolution product spread " + std::to_string(est.spread) +
                                               " too large to extract lambda for the barycenter reference");
  }
  BarycenterProblem prob{config.initial, *est.lambda};
  // Guard against round-off in the column means.
  double sum = 0.0;
  for (double l : prob.lambda) sum += l;
  for (double& l : prob.lambda) l /= sum;
  return compute_barycenter(prob).measure;
}

}  // namespace

void validate_config(const SimulationConfig& config) {
  validate_graph(config.graph);
  if (config.initial.size() != config.graph.n) {
    throw Error(ErrorCode::SizeMismatch, "graph has " + std::to_string(config.graph.n) + " agents but " +
                                             std::to_string(config.initial.size()) + " measures were given");
  }
  for (std::size_t k = 0; k < config.initial.size(); ++k) {
    if (k > 0) check_compatible(config.initial.front(), config.initial[k], "measure " + std::to_string(k + 1));
    validate(config.initial[k]);
  }
  if (!(config.stop_tol >= 0.0)) throw Error(ErrorCode::InvalidArgument, "stop_tol must be non-negative");
  if (config.max_steps == 0) throw Error(ErrorCode::InvalidArgument, "max_steps must be positive");
  if (config.record_every == 0) throw Error(ErrorCode::InvalidArgument, "record_every must be positive");
  if (!(config.lambda_tol >= 0.0)) throw Error(ErrorCode::InvalidArgument, "lambda tolerance must be non-negative");

  if (config.reference_kind == ReferenceKind::Fixed) {
    if (!config.reference) throw Error(ErrorCode::InvalidArgument, "fixed reference requested but none given");
    check_compatible(config.initial.front(), *config.reference, "reference measure");
    validate(*config.reference);
  }
  if (config.error_metric == ErrorMetric::CovFrobenius &&
      measure_class(config.initial.front()) != MeasureClass::Gaussian) {
    throw Error(ErrorCode::InvalidArgument, "covariance error metric needs gaussian measures");
  }
}

SimulationState initial_state(const SimulationConfig& config) {
  SimulationState state;
  state.measures = config.initial;
  state.product = Matrix::identity(config.graph.n);
  state.rng = RngState{config.seed};

  if (!config.initial.empty() && measure_class(config.initial.front()) == MeasureClass::Discrete) {
    const std::size_t n = config.initial.size();
    const std::size_t points = std::get<DiscreteUniform>(config.initial.front()).size();
    state.provenance.reserve(n);
    for (std::size_t a = 0; a < n; ++a) {
      Matrix weights(points, n * points);
      for (std::size_t k = 0; k < points; ++k) weights(k, a * points + k) = 1.0;
      state.provenance.push_back(std::move(weights));
    }
  }
  return state;
}

void step(SimulationState& state, const EdgeEvent& ev, GraphMode mode) {
  const double a = mode == GraphMode::Symmetric ? 0.5 : ev.weight;
  auto& mi = state.measures[ev.i];
  const auto& mj = state.measures[ev.j];

  if (auto* di = std::get_if<DiscreteUniform>(&mi)) {
    const auto& dj = std::get<DiscreteUniform>(mj);
    auto moved = displace_discrete_with_plan(*di, dj, a);

    if (!state.provenance.empty()) {
      const Matrix& pi = state.provenance[ev.i];
      const Matrix& pj = state.provenance[ev.j];
      Matrix updated(pi.rows(), pi.cols());
      for (std::size_t k = 0; k < pi.rows(); ++k) {
        const auto src_i = pi.row(k);
        const auto src_j = pj.row(moved.sigma[k]);
        auto dst = updated.row(k);
        for (std::size_t c = 0; c < dst.size(); ++c) dst[c] = (1.0 - a) * src_i[c] + a * src_j[c];
      }
      if (mode == GraphMode::Symmetric) state.provenance[ev.j] = updated;
      state.provenance[ev.i] = std::move(updated);
    }
    if (mode == GraphMode::Symmetric) state.measures[ev.j] = moved.measure;
    mi = std::move(moved.measure);
  } else {
    Measure moved = displace(mi, mj, a);
    if (mode == GraphMode::Symmetric) state.measures[ev.j] = moved;
    mi = std::move(moved);
  }

  apply_event_to_product(state.product, ev, mode);
  ++state.t;
}

double pairwise_spread(const std::vector<Measure>& measures) {
  double spread = 0.0;
  for (std::size_t a = 0; a < measures.size(); ++a)
    for (std::size_t b = a + 1; b < measures.size(); ++b) spread = std::max(spread, w2(measures[a], measures[b]));
  return spread;
}

double u_metric(const std::vector<Measure>& measures, const InteractionGraph& g) {
  double total = 0.0;
  for (const auto& e : g.edges) total += w2(measures[e.i], measures[e.j]);
  return total;
}

ProvenanceCheck check_provenance(const SimulationState& state, const std::vector<Measure>& initial) {
  ProvenanceCheck out;
  if (state.provenance.empty()) return out;
  const std::size_t points = std::get<DiscreteUniform>(initial.front()).size();
  const std::size_t d = std::get<DiscreteUniform>(initial.front()).dim();
  out.min_entry = 1.0;

  for (std::size_t a = 0; a < state.provenance.size(); ++a) {
    const Matrix& weights = state.provenance[a];
    const auto& current = std::get<DiscreteUniform>(state.measures[a]);
    for (std::size_t k = 0; k < weights.rows(); ++k) {
      double sum = 0.0;
      std::vector<double> rebuilt(d, 0.0);
      for (std::size_t col = 0; col < weights.cols(); ++col) {
        const double w = weights(k, col);
        sum += w;
        out.min_entry = std::min(out.min_entry, w);
        if (w == 0.0) continue;
        const auto x = std::get<DiscreteUniform>(initial[col / points]).points.row(col % points);
        for (std::size_t c = 0; c < d; ++c) rebuilt[c] += w * x[c];
      }
      out.max_row_sum_error = std::max(out.max_row_sum_error, std::abs(sum - 1.0));
      for (std::size_t c = 0; c < d; ++c) {
        out.max_reconstruction_error =
            std::max(out.max_reconstruction_error, std::abs(rebuilt[c] - current.points(k, c)));
      }
    }
  }
  return out;
}

Simulator::Simulator(SimulationConfig config) : config_(std::move(config)) {
  validate_config(config_);
  state_ = initial_state(config_);
}

EdgeEvent Simulator::next_event() { return sample_edge(config_.graph, state_.rng, state_.t); }

void Simulator::apply(const EdgeEvent& ev) { step(state_, ev, config_.graph.mode); }

EdgeEvent Simulator::advance() {
  const EdgeEvent ev = next_event();
  apply(ev);
  return ev;
}

Trace run(const SimulationConfig& config) {
  Simulator sim(config);
  Trace trace;

  switch (config.reference_kind) {
    case ReferenceKind::None: break;
    case ReferenceKind::Fixed: trace.reference = config.reference; break;
    case ReferenceKind::Barycenter: trace.reference = barycenter_reference(config); break;
  }

  double spread = pairwise_spread(sim.state().measures);
  bool converged = spread <= config.stop_tol;
  while (!converged && sim.state().t < config.max_steps) {
    const EdgeEvent ev = sim.advance();
    const auto& state = sim.state();
    spread = pairwise_spread(state.measures);
    converged = spread <= config.stop_tol;

    const bool last = converged || state.t == config.max_steps;
    if (state.t % config.record_every == 0 || last) {
      TraceRecord rec{state.t, ev.i, ev.j, spread, u_metric(state.measures, config.graph), {}};
      if (trace.reference) {
        rec.errors.reserve(state.measures.size());
        for (const auto& m : state.measures) rec.errors.push_back(error_to_reference(m, *trace.reference, config.error_metric));
      }
      trace.records.push_back(std::move(rec));
    }
  }

  const auto& state = sim.state();
  trace.final_measures = state.measures;
  trace.product = state.product;
  trace.lambda = extract_lambda(state.product, config.lambda_tol);
  trace.stop_reason = converged ? StopReason::Converged : StopReason::MaxSteps;
  trace.steps = state.t;
  return trace;
}

DiracReductionResult dirac_reduction_check(const SimulationConfig& config, double tol) {
  std::vector<std::vector<double>> scalar;
  for (const auto& m : config.initial) {
    const auto* dirac = std::get_if<DiscreteUniform>(&m);
    if (dirac == nullptr || dirac->size() != 1) {
      throw Error(ErrorCode::InvalidArgument, "Dirac reduction needs every initial measure to be a single point");
    }
    const auto x = dirac->points.row(0);
    scalar.emplace_back(x.begin(), x.end());
  }

  Simulator sim(config);
  DiracReductionResult out{true, 0.0, 0};
  const bool symmetric = config.graph.mode == GraphMode::Symmetric;
  for (std::size_t t = 0; t < config.max_steps; ++t) {
    const EdgeEvent ev = sim.advance();
    const double a = symmetric ? 0.5 : ev.weight;
    for (std::size_t c = 0; c < scalar[ev.i].size(); ++c) {
      const double next = (1.0 - a) * scalar[ev.i][c] + a * scalar[ev.j][c];
      scalar[ev.i][c] = next;
      if (symmetric) scalar[ev.j][c] = next;
    }
    for (std::size_t agent = 0; agent < scalar.size(); ++agent) {
      const auto& point = std::get<DiscreteUniform>(sim.state().measures[agent]).points;
      for (std::size_t c = 0; c < scalar[agent].size(); ++c) {
        out.max_deviation = std::max(out.max_deviation, std::abs(point(0, c) - scalar[agent][c]));
      }
    }
    ++out.steps;
  }
  out.ok = out.max_deviation <= tol;
  return out;
}

}  // namespace pawbar
