#pragma once

#include <string>

#include "pawbar/simulate.hpp"

namespace pawbar {

/// Locale-independent shortest form with 17 significant digits at most
/// (std::to_chars), e.g. "2.2360679774997898".
std::string format_double(double v);

/// CSV with header t,i,j,spread,u_metric[,err_1..err_n]; agents are 1-based.
/// Error columns are present only when the trace carries a reference.
std::string trace_to_csv(const Trace& trace);

/// {"steps", "stop_reason", "lambda" (array or "not_converged"),
///  "lambda_spread", "final_measures"}
std::string trace_summary_json(const Trace& trace);

}  // namespace pawbar
