#pragma once

// Internal JSON helpers shared by measure_io, config and trace_io.

#include <nlohmann/json.hpp>
#include <string>

#include "pawbar/error.hpp"
#include "pawbar/measures.hpp"

namespace pawbar::detail {

using nlohmann::json;

[[noreturn]] inline void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::SchemaError, (path.empty() ? std::string("/") : path) + ": " + what);
}

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, std::string("malformed JSON: ") + e.what());
  }
}

double number_at(const json& j, const std::string& path);
std::vector<double> vector_at(const json& j, const std::string& path);
Matrix matrix_at(const json& j, const std::string& path);

Measure measure_from_json(const json& j, const std::string& path);
json measure_to_json(const Measure& m);

}  // namespace pawbar::detail
