#pragma once

// Structured command output. Complex numbers serialize as [re, im],
// matrices as row-major arrays of rows.

#include <string>

#include <json.hpp>

#include "weylq/qarith.hpp"

namespace weylq::cli {

using json = nlohmann::ordered_json;

struct Tolerances {
  double series_tol = 1e-16;
  double quad_tol = 1e-10;
  double rank_tol = 1e-8;

  /// Defaults overridden by WEYLQ_SERIES_TOL, WEYLQ_QUAD_TOL (or
  /// WEYLQ_REFINE_TOL) and WEYLQ_RANK_TOL when set.
  static Tolerances from_environment();
  void validate() const;
};

struct OutputRecord {
  std::string command;
  int level = 0;
  json payload;
  json metadata;
};

const char* tool_version();

json metadata_for(const Tolerances& tol);

json to_json(cplx z);
json to_json(const CMatrix& m);
json to_json(const CVector& v);
cplx complex_from_json(const json& j);
CMatrix matrix_from_json(const json& j);

json to_json(const OutputRecord& rec);
OutputRecord record_from_json(const json& j);

/// Pretty JSON text with a trailing newline.
std::string format_json(const OutputRecord& rec);

/// One "pointer,value" line per leaf, where pointer is the JSON pointer of
/// the leaf. Numbers use 17 significant digits, strings are quoted when they
/// contain a comma or quote.
std::string format_csv(const OutputRecord& rec);

}  // namespace weylq::cli
