#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pawbar/measures.hpp"

namespace pawbar {

// Measure JSON schema:
//   {"type":"discrete","points":[[x, ...], ...]}
//   {"type":"quantile1d","quantiles":[q, ...]}
//   {"type":"gaussian","mean":[m, ...],"cov":[[c, ...], ...]}
// Doubles are written in shortest round-trip form, so parse(serialize(m)) == m
// bit for bit. Parsing checks structure only; call validate() for invariants.

/// Throws Error(SchemaError) with a JSON-pointer path to the offending field.
Measure parse_measure(std::string_view text);
std::string serialize_measure(const Measure& m);

/// A JSON array of measures.
std::vector<Measure> parse_measure_list(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace pawbar
