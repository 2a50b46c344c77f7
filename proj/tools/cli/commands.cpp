#include "commands.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "pawbar/barycenter.hpp"
#include "pawbar/config.hpp"
#include "pawbar/error.hpp"
#include "pawbar/measure_io.hpp"
#include "pawbar/simulate.hpp"
#include "pawbar/trace_io.hpp"
#include "pawbar/transport.hpp"

namespace pawbar::cli {

namespace {

using nlohmann::json;

int report(const Error& e, std::ostream& err, int code) {
  err << "error: " << e.what() << '\n';
  return code;
}

std::vector<double> parse_lambda_csv(const std::string& csv) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', start), csv.size());
    const std::string_view token(csv.data() + start, comma - start);
    double v = 0.0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
      throw Error(ErrorCode::InvalidArgument, "cannot parse weight \"" + std::string(token) + "\"");
    }
    out.push_back(v);
    start = comma + 1;
  }
  return out;
}

SimulationConfig load_config(const std::string& path) { return parse_config(read_file(path)); }

}  // namespace

int cmd_simulate(const SimulateOptions& opts, std::ostream& out, std::ostream& err) {
  SimulationConfig config;
  try {
    config = load_config(opts.config_path);
    if (opts.seed) config.seed = *opts.seed;
    if (opts.max_steps) config.max_steps = *opts.max_steps;
    if (opts.stop_tol) config.stop_tol = *opts.stop_tol;
    validate_config(config);
  } catch (const Error& e) {
    return report(e, err, kInputError);
  }

  Trace trace;
  try {
    trace = run(config);
  } catch (const Error& e) {
    return report(e, err, kNumericalError);
  }

  try {
    write_file(opts.out_path, trace_to_csv(trace));
    const std::string summary = trace_summary_json(trace);
    if (opts.summary_path) {
      write_file(*opts.summary_path, summary);
    } else {
      out << summary;
    }
  } catch (const Error& e) {
    return report(e, err, kInputError);
  }
  return kOk;
}

int cmd_barycenter(const std::string& measures_path, const std::string& lambda_csv, const std::string& out_path,
                   std::ostream& out, std::ostream& err) {
  BarycenterProblem prob;
  try {
    prob.measures = parse_measure_list(read_file(measures_path));
    for (const auto& m : prob.measures) validate(m);
    prob.lambda = parse_lambda_csv(lambda_csv);
    validate_problem(prob);
  } catch (const Error& e) {
    return report(e, err, kInputError);
  }

  BarycenterResult result{prob.measures.front(), 0.0, "", 0.0, true};
  try {
    result = compute_barycenter(prob);
  } catch (const Error& e) {
    return report(e, err, is_numerical(e.code()) ? kNumericalError : kInputError);
  }

  json doc;
  doc["barycenter"] = json::parse(serialize_measure(result.measure));
  doc["functional"] = result.functional_value;
  doc["oracle"] = result.oracle;
  if (measure_class(result.measure) == MeasureClass::Gaussian) doc["residual"] = result.residual;
  if (std::string_view(result.oracle) == "discrete_aligned") doc["alignment_consistent"] = result.alignment_consistent;
  const std::string text = doc.dump(2) + "\n";

  try {
    if (out_path.empty() || out_path == "-") {
      out << text;
    } else {
      write_file(out_path, text);
    }
  } catch (const Error& e) {
    return report(e, err, kInputError);
  }
  return kOk;
}

int cmd_distance(const std::string& a_path, const std::string& b_path, std::ostream& out, std::ostream& err) {
  try {
    const Measure a = parse_measure(read_file(a_path));
    const Measure b = parse_measure(read_file(b_path));
    validate(a);
    validate(b);
    out << format_double(w2(a, b)) << '\n';
    return kOk;
  } catch (const Error& e) {
    return report(e, err, is_numerical(e.code()) ? kNumericalError : kInputError);
  }
}

int cmd_validate(const std::string& config_path, std::ostream& out, std::ostream& err) {
  try {
    validate_config(load_config(config_path));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    out << to_string(e.code()) << '\n';
    return kInputError;
  }
  out << "ok\n";
  return kOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"pawbar: pairwise Wasserstein barycenter simulator"};
  app.require_subcommand(1);

  SimulateOptions sim;
  std::string summary_path;
  std::uint64_t seed = 0;
  std::size_t max_steps = 0;
  double stop_tol = 0.0;
  auto* simulate = app.add_subcommand("simulate", "Run the pairwise interpolation dynamics and write a trace");
  simulate->add_option("-c,--config", sim.config_path, "Simulation config JSON")->required();
  simulate->add_option("-o,--out", sim.out_path, "Trace CSV output")->required();
  auto* summary_opt = simulate->add_option("-s,--summary", summary_path, "Summary JSON output (default: stdout)");
  auto* seed_opt = simulate->add_option("--seed", seed, "Override the config seed");
  auto* steps_opt = simulate->add_option("--max-steps", max_steps, "Override max_steps")->check(CLI::PositiveNumber);
  auto* tol_opt = simulate->add_option("--stop-tol", stop_tol, "Override stop_tol")->check(CLI::NonNegativeNumber);

  std::string measures_path, lambda_csv, bary_out;
  auto* bary = app.add_subcommand("barycenter", "Centralized barycenter oracle");
  bary->add_option("-m,--measures", measures_path, "JSON array of measures")->required();
  bary->add_option("-l,--lambda", lambda_csv, "Comma-separated convex weights")->required();
  bary->add_option("-o,--out", bary_out, "Output JSON (default: stdout)");

  std::string a_path, b_path;
  auto* distance = app.add_subcommand("distance", "2-Wasserstein distance between two measure files");
  distance->add_option("a", a_path, "First measure JSON")->required();
  distance->add_option("b", b_path, "Second measure JSON")->required();

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check a simulation config");
  validate_cmd->add_option("-c,--config", validate_path, "Simulation config JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  if (simulate->parsed()) {
    if (const char* env = std::getenv("PAWBAR_SEED"); env != nullptr && *env != '\0') {
      std::uint64_t env_seed = 0;
      const char* end = env + std::char_traits<char>::length(env);
      const auto res = std::from_chars(env, end, env_seed);
      if (res.ec != std::errc{} || res.ptr != end) {
        err << "error: PAWBAR_SEED is not an unsigned 64-bit integer\n";
        return kInputError;
      }
      sim.seed = env_seed;
    }
    if (*seed_opt) sim.seed = seed;
    if (*steps_opt) sim.max_steps = max_steps;
    if (*tol_opt) sim.stop_tol = stop_tol;
    if (*summary_opt) sim.summary_path = summary_path;
    return cmd_simulate(sim, out, err);
  }
  if (bary->parsed()) return cmd_barycenter(measures_path, lambda_csv, bary_out, out, err);
  if (distance->parsed()) return cmd_distance(a_path, b_path, out, err);
  return cmd_validate(validate_path, out, err);
}

}  // namespace pawbar::cli
