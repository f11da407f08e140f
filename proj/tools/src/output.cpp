#include "weylq_cli/output.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#ifndef WEYLQ_VERSION
#define WEYLQ_VERSION "0.0.0"
#endif

namespace weylq::cli {

namespace {

void read_env(const char* name, double& target) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return;
  char* end = nullptr;
  const double parsed = std::strtod(value, &end);
  if (end == value || *end != '\0') {
    throw std::invalid_argument(std::string("malformed value for ") + name + ": '" + value + "'");
  }
  target = parsed;
}

}  // namespace

Tolerances Tolerances::from_environment() {
  Tolerances tol;
  read_env("WEYLQ_SERIES_TOL", tol.series_tol);
  read_env("WEYLQ_REFINE_TOL", tol.quad_tol);
  read_env("WEYLQ_QUAD_TOL", tol.quad_tol);
  read_env("WEYLQ_RANK_TOL", tol.rank_tol);
  return tol;
}

void Tolerances::validate() const {
  auto in_range = [](double v) { return v > 0.0 && v < 1.0; };
  if (!in_range(series_tol)) throw std::invalid_argument("series tolerance must lie in (0, 1)");
  if (!in_range(quad_tol)) throw std::invalid_argument("quadrature tolerance must lie in (0, 1)");
  if (!in_range(rank_tol)) throw std::invalid_argument("rank tolerance must lie in (0, 1)");
}

const char* tool_version() { return WEYLQ_VERSION; }

json metadata_for(const Tolerances& tol) {
  return {{"tool_version", tool_version()},
          {"tolerances",
           {{"series_tol", tol.series_tol}, {"quad_tol", tol.quad_tol}, {"rank_tol", tol.rank_tol}}}};
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const CVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument("complex value must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw std::invalid_argument("matrix rows must have equal length");
    }
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

json to_json(const OutputRecord& rec) {
  return {{"command", rec.command},
          {"level", rec.level},
          {"payload", rec.payload},
          {"metadata", rec.metadata}};
}

OutputRecord record_from_json(const json& j) {
  OutputRecord rec;
  rec.command = j.at("command").get<std::string>();
  rec.level = j.at("level").get<int>();
  rec.payload = j.at("payload");
  rec.metadata = j.at("metadata");
  return rec;
}

std::string format_json(const OutputRecord& rec) { return to_json(rec).dump(2) + "\n"; }

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string pointer_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::string number_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void flatten(const json& node, const std::string& pointer, std::string& out) {
  if (node.is_object() || node.is_array()) {
    if (node.empty()) {
      out += csv_field(pointer) + "," + (node.is_object() ? "{}" : "[]") + "\n";
      return;
    }
    if (node.is_object()) {
      for (const auto& [key, value] : node.items()) {
        flatten(value, pointer + "/" + pointer_token(key), out);
      }
    } else {
      for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], pointer + "/" + std::to_string(i), out);
    }
    return;
  }
  std::string value;
  if (node.is_number_float()) {
    value = number_text(node.get<double>());
  } else if (node.is_string()) {
    value = csv_field(node.get<std::string>());
  } else {
    value = node.dump();
  }
  out += csv_field(pointer) + "," + value + "\n";
}

}  // namespace

std::string format_csv(const OutputRecord& rec) {
  std::string out = "path,value\n";
  flatten(to_json(rec), "", out);
  return out;
}

}  // namespace weylq::cli
