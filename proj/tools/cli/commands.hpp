#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace pawbar::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kNumericalError = 2 };

struct SimulateOptions {
  std::string config_path;
  std::string out_path;                     // trace CSV
  std::optional<std::string> summary_path;  // JSON summary; stdout when absent
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_steps;
  std::optional<double> stop_tol;
};

int cmd_simulate(const SimulateOptions& opts, std::ostream& out, std::ostream& err);
int cmd_barycenter(const std::string& measures_path, const std::string& lambda_csv, const std::string& out_path,
                   std::ostream& out, std::ostream& err);
int cmd_distance(const std::string& a_path, const std::string& b_path, std::ostream& out, std::ostream& err);
int cmd_validate(const std::string& config_path, std::ostream& out, std::ostream& err);

/// Full command line: subcommand parsing plus the PAWBAR_SEED override
/// (an explicit --seed wins over the environment, which wins over the config).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pawbar::cli
