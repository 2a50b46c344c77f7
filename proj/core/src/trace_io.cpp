#include "pawbar/trace_io.hpp"

#include <array>
#include <charconv>

#include "json_detail.hpp"

namespace pawbar {

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

std::string trace_to_csv(const Trace& trace) {
  const std::size_t n = trace.final_measures.size();
  std::string out = "t,i,j,spread,u_metric";
  if (trace.reference) {
    for (std::size_t a = 1; a <= n; ++a) out += ",err_" + std::to_string(a);
  }
  out += '\n';
  for (const auto& rec : trace.records) {
    out += std::to_string(rec.t);
    out += ',' + std::to_string(rec.i + 1);
    out += ',' + std::to_string(rec.j + 1);
    out += ',' + format_double(rec.spread);
    out += ',' + format_double(rec.u_metric);
    for (double e : rec.errors) out += ',' + format_double(e);
    out += '\n';
  }
  return out;
}

std::string trace_summary_json(const Trace& trace) {
  detail::json j;
  j["steps"] = trace.steps;
  j["stop_reason"] = trace.stop_reason == StopReason::Converged ? "converged" : "max_steps";
  if (trace.lambda.converged()) {
    j["lambda"] = *trace.lambda.lambda;
  } else {
    j["lambda"] = "not_converged";
  }
  j["lambda_spread"] = trace.lambda.spread;
  detail::json finals = detail::json::array();
  for (const auto& m : trace.final_measures) finals.push_back(detail::measure_to_json(m));
  j["final_measures"] = std::move(finals);
  return j.dump(2) + "\n";
}

}  // namespace pawbar
