#include "pawbar/config.hpp"

#include <cmath>

#include "json_detail.hpp"

namespace pawbar {

namespace {

using detail::json;
using detail::schema_error;

std::size_t index_at(const json& j, const std::string& path, std::size_t lo) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
    schema_error(path, "expected a non-negative integer");
  }
  const auto v = j.get<std::uint64_t>();
  if (v < lo) schema_error(path, "must be at least " + std::to_string(lo));
  return static_cast<std::size_t>(v);
}

InteractionGraph graph_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected a graph object");
  InteractionGraph g;
  const auto n_it = j.find("n");
  if (n_it == j.end()) schema_error(path, "missing field \"n\"");
  g.n = index_at(*n_it, path + "/n", 0);

  const auto mode_it = j.find("mode");
  if (mode_it == j.end()) schema_error(path, "missing field \"mode\"");
  if (*mode_it == "directed") {
    g.mode = GraphMode::Directed;
  } else if (*mode_it == "symmetric") {
    g.mode = GraphMode::Symmetric;
  } else {
    schema_error(path + "/mode", "expected \"directed\" or \"symmetric\"");
  }

  const auto edges_it = j.find("edges");
  if (edges_it == j.end() || !edges_it->is_array()) schema_error(path + "/edges", "expected an array of edges");
  const json& edges = *edges_it;

  std::size_t with_prob = 0;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string ep = path + "/edges/" + std::to_string(k);
    const json& e = edges[k];
    if (!e.is_object()) schema_error(ep, "expected an edge object");
    if (!e.contains("i") || !e.contains("j")) schema_error(ep, "edge needs \"i\" and \"j\"");
    Edge edge;
    edge.i = index_at(e["i"], ep + "/i", 1) - 1;
    edge.j = index_at(e["j"], ep + "/j", 1) - 1;
    if (e.contains("weight")) {
      if (g.mode == GraphMode::Symmetric) schema_error(ep + "/weight", "weight is not allowed in symmetric mode");
      edge.weight = detail::number_at(e["weight"], ep + "/weight");
    }
    if (e.contains("prob")) {
      edge.prob = detail::number_at(e["prob"], ep + "/prob");
      ++with_prob;
    }
    g.edges.push_back(edge);
  }
  if (with_prob == 0) {
    for (auto& e : g.edges) e.prob = 1.0 / static_cast<double>(g.edges.size());
  } else if (with_prob != g.edges.size()) {
    schema_error(path + "/edges", "\"prob\" must be given on every edge or on none");
  }
  return g;
}

json graph_to_json(const InteractionGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges) {
    json je{{"i", e.i + 1}, {"j", e.j + 1}, {"prob", e.prob}};
    if (g.mode == GraphMode::Directed) je["weight"] = e.weight;
    edges.push_back(std::move(je));
  }
  return json{{"n", g.n}, {"mode", g.mode == GraphMode::Directed ? "directed" : "symmetric"}, {"edges", edges}};
}

}  // namespace

InteractionGraph parse_graph(std::string_view text) { return graph_from_json(detail::parse_json(text), ""); }

SimulationConfig parse_config(std::string_view text) {
  const json j = detail::parse_json(text);
  if (!j.is_object()) schema_error("", "expected a config object");

  SimulationConfig config;
  if (!j.contains("graph")) schema_error("", "missing field \"graph\"");
  config.graph = graph_from_json(j["graph"], "/graph");

  if (!j.contains("measures") || !j["measures"].is_array()) schema_error("/measures", "expected an array of measures");
  const json& measures = j["measures"];
  for (std::size_t k = 0; k < measures.size(); ++k) {
    config.initial.push_back(detail::measure_from_json(measures[k], "/measures/" + std::to_string(k)));
  }

  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) schema_error("/seed", "expected an unsigned 64-bit integer");
    config.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("max_steps")) config.max_steps = index_at(j["max_steps"], "/max_steps", 1);
  if (j.contains("stop_tol")) {
    config.stop_tol = detail::number_at(j["stop_tol"], "/stop_tol");
    if (!(config.stop_tol >= 0.0)) schema_error("/stop_tol", "must be non-negative");
  }
  if (j.contains("record_every")) config.record_every = index_at(j["record_every"], "/record_every", 1);
  if (j.contains("lambda_tol")) config.lambda_tol = detail::number_at(j["lambda_tol"], "/lambda_tol");

  if (j.contains("reference")) {
    const json& ref = j["reference"];
    if (ref.is_string()) {
      if (ref != "barycenter") schema_error("/reference", "expected a measure or \"barycenter\"");
      config.reference_kind = ReferenceKind::Barycenter;
    } else {
      config.reference_kind = ReferenceKind::Fixed;
      config.reference = detail::measure_from_json(ref, "/reference");
    }
  }
  if (j.contains("error_metric")) {
    const json& metric = j["error_metric"];
    if (metric == "w2") {
      config.error_metric = ErrorMetric::W2;
    } else if (metric == "cov_frobenius") {
      config.error_metric = ErrorMetric::CovFrobenius;
    } else {
      schema_error("/error_metric", "expected \"w2\" or \"cov_frobenius\"");
    }
  }
  return config;
}

std::string serialize_config(const SimulationConfig& config) {
  json measures = json::array();
  for (const auto& m : config.initial) measures.push_back(detail::measure_to_json(m));
  json j{{"graph", graph_to_json(config.graph)},
         {"measures", measures},
         {"seed", config.seed},
         {"max_steps", config.max_steps},
         {"stop_tol", config.stop_tol},
         {"record_every", config.record_every},
         {"lambda_tol", config.lambda_tol},
         {"error_metric", config.error_metric == ErrorMetric::W2 ? "w2" : "cov_frobenius"}};
  if (config.reference_kind == ReferenceKind::Barycenter) {
    j["reference"] = "barycenter";
  } else if (config.reference_kind == ReferenceKind::Fixed && config.reference) {
    j["reference"] = detail::measure_to_json(*config.reference);
  }
  return j.dump(2) + "\n";
}

}  // namespace pawbar
