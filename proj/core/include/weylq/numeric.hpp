#pragma once

// Small numerical helpers shared by the modules: truncation windows for
// Gaussian lattice sums and single-constant proportionality fits.

#include <span>

#include "weylq/qarith.hpp"

namespace weylq {

/// Inclusive integer range [lo, hi].
struct IndexWindow {
  long long lo = 0;
  long long hi = -1;

  long long size() const noexcept { return hi >= lo ? hi - lo + 1 : 0; }
};

/// Integers n with |n - center| <= sqrt(ln(1/tol) / alpha) + pad. Terms
/// bounded by exp(-alpha (n - center)^2) outside this window are below tol
/// relative to the peak term.
IndexWindow gaussian_window(double center, double alpha, double tol, double pad);

/// Window for sums of exp(-2 pi r (x - n/2r)^2) * bounded, using the bound
/// |n/2r - x| <= sqrt(ln(1/tol) / (2 pi r)) + 1.
IndexWindow half_lattice_window(double x, Level lvl, double tol);

/// Result of fitting a ~= c * b with one complex constant.
struct ScalarFit {
  cplx scale{0.0, 0.0};
  /// max_i |a_i - c b_i| / |a_i|.
  double residual = 0.0;
};

/// Least-squares constant with each sample weighted by 1/|a_i|, so samples
/// of very different magnitude contribute equally. Samples with a_i == 0
/// must not be passed. Throws std::invalid_argument on size mismatch or
/// empty input.
ScalarFit fit_scalar(std::span<const cplx> a, std::span<const cplx> b);

/// max |m_ij|.
double max_abs(const CMatrix& m);

}  // namespace weylq
