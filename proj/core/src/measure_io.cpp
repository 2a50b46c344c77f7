#include "pawbar/measure_io.hpp"

#include <fstream>
#include <sstream>

#include "json_detail.hpp"

namespace pawbar {

namespace detail {

double number_at(const json& j, const std::string& path) {
  if (!j.is_number()) schema_error(path, "expected a number");
  return j.get<double>();
}

std::vector<double> vector_at(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(number_at(j[k], path + "/" + std::to_string(k)));
  return out;
}

Matrix matrix_at(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) schema_error(path, "expected a non-empty array of rows");
  const auto first = vector_at(j[0], path + "/0");
  Matrix out(j.size(), first.size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string row_path = path + "/" + std::to_string(r);
    const auto row = r == 0 ? first : vector_at(j[r], row_path);
    if (row.size() != first.size()) {
      schema_error(row_path, "row has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(first.size()));
    }
    std::copy(row.begin(), row.end(), out.row(r).begin());
  }
  return out;
}

namespace {

const json& field(const json& j, const char* key, const std::string& path) {
  const auto it = j.find(key);
  if (it == j.end()) schema_error(path, std::string("missing field \"") + key + "\"");
  return *it;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    rows.push_back(json(std::vector<double>(row.begin(), row.end())));
  }
  return rows;
}

}  // namespace

Measure measure_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected a measure object");
  const json& type = field(j, "type", path);
  if (!type.is_string()) schema_error(path + "/type", "expected a string");
  const auto kind = type.get<std::string>();

  if (kind == "discrete") {
    return DiscreteUniform{matrix_at(field(j, "points", path), path + "/points")};
  }
  if (kind == "quantile1d") {
    auto q = vector_at(field(j, "quantiles", path), path + "/quantiles");
    if (q.empty()) schema_error(path + "/quantiles", "expected at least one quantile");
    return Quantile1D{std::move(q)};
  }
  if (kind == "gaussian") {
    auto mean = vector_at(field(j, "mean", path), path + "/mean");
    auto cov = matrix_at(field(j, "cov", path), path + "/cov");
    if (cov.rows() != mean.size() || cov.cols() != mean.size()) {
      schema_error(path + "/cov", "covariance shape does not match mean dimension " +
                                      std::to_string(mean.size()));
    }
    return Gaussian{std::move(mean), std::move(cov)};
  }
  schema_error(path + "/type", "unknown measure type \"" + kind + "\"");
}

json measure_to_json(const Measure& m) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, DiscreteUniform>) {
          return json{{"type", "discrete"}, {"points", matrix_to_json(v.points)}};
        } else if constexpr (std::is_same_v<T, Quantile1D>) {
          return json{{"type", "quantile1d"}, {"quantiles", v.quantiles}};
        } else {
          return json{{"type", "gaussian"}, {"mean", v.mean}, {"cov", matrix_to_json(v.cov)}};
        }
      },
      m);
}

}  // namespace detail

Measure parse_measure(std::string_view text) {
  return detail::measure_from_json(detail::parse_json(text), "");
}

std::string serialize_measure(const Measure& m) { return detail::measure_to_json(m).dump(); }

std::vector<Measure> parse_measure_list(std::string_view text) {
  const auto j = detail::parse_json(text);
  if (!j.is_array() || j.empty()) detail::schema_error("", "expected a non-empty array of measures");
  std::vector<Measure> out;
  out.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(detail::measure_from_json(j[k], "/" + std::to_string(k)));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path);
}

}  // namespace pawbar
