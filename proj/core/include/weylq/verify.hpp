#pragma once

// Named property suites run across levels. Each property reports the
// measured quantity and the bound it is held to.

#include <string>
#include <string_view>
#include <vector>

#include "weylq/qarith.hpp"
#include "weylq/theta.hpp"

namespace weylq {

struct PropertyResult {
  std::string suite;
  std::string name;
  int r = 0;
  double value = 0.0;
  double bound = 0.0;
  /// true: value must stay below bound; false: value must exceed it.
  bool upper = true;
  bool passed = false;
};

struct VerifyOptions {
  /// Overrides QuadratureSpec::defaults(lvl) fields when set (> 0).
  double series_tol = 0.0;
  double refine_tol = 0.0;
  int grid_n = 0;
  double rank_tol = 1e-8;

  QuadratureSpec spec_for(Level lvl) const;
};

/// "theta", "weyl", "mcg", "invariants", "basis".
const std::vector<std::string>& suite_names();

/// Runs one suite ("all" runs every suite) at one level. Throws
/// std::invalid_argument for an unknown suite name.
std::vector<PropertyResult> run_suite(std::string_view suite, Level lvl, const VerifyOptions& opts);

/// The n x n nodes (a/n, b/n), a, b = 0..n-1, of the periodic grid on the
/// unit square. For odd n the only half period among them is 0, where the
/// lattice sums have O(1) terms; at the other half periods (and at y = 1)
/// terms of size exp(2 pi r y^2) cancel to zero and no double-precision
/// evaluation can meet an absolute bound.
std::vector<cplx> periodic_grid(int n);

/// Ten points in the fundamental square away from the half periods, where
/// every odd theta function vanishes.
const std::vector<cplx>& sample_points();

}  // namespace weylq
