#pragma once

// The Hilbert space H_r of odd theta functions:
//
//   f(z + m + i n) = exp(2 r pi (n^2 - 2 i n z)) f(z),   f(-z) = -f(z).
//
// Basis functions zeta_j (j = 1..r-1) are evaluated by two independent
// series, inner products by the doubly periodic trapezoid rule on the unit
// square with weight exp(-4 pi r y^2), and the reproducing kernel by a
// closed lattice sum and by its spectral expansion.

#include <functional>
#include <span>
#include <stdexcept>
#include <string>

#include "weylq/qarith.hpp"

namespace weylq {

/// Canonical representative of an extended theta index: zeta_j == sign *
/// zeta_index with index in [0, r]. sign is 0 exactly when index is 0 or r.
struct FoldedIndex {
  int index = 0;
  int sign = 0;

  friend bool operator==(const FoldedIndex&, const FoldedIndex&) = default;
};

/// Applies zeta_{-j} = -zeta_j, zeta_{r+j} = -zeta_{r-j} and 2r-periodicity.
FoldedIndex fold_index(long long j, Level lvl);

/// Resolution and tolerances for series truncation and quadrature.
struct QuadratureSpec {
  int grid_n = 64;            ///< points per axis, >= 16
  double refine_tol = 1e-10;  ///< relative change accepted between grid doublings
  double series_tol = 1e-16;  ///< relative truncation tolerance of lattice sums
  int max_doublings = 3;

  /// grid_n = max(64, 8r), refine_tol = 1e-10, series_tol = 1e-16.
  static QuadratureSpec defaults(Level lvl);

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// Raised when grid doubling fails to reach refine_tol.
class AccuracyError : public std::runtime_error {
 public:
  explicit AccuracyError(const std::string& what) : std::runtime_error(what) {}
};

/// zeta_j(z) from the defining theta series
///   r^{1/4} e^{-pi j^2/2r} (theta_j(z) - theta_{-j}(z)).
/// Valid for every integer j; the series itself realizes the extension
/// relations, so zeta_j == s * zeta_{j0} for (j0, s) = fold_index(j).
cplx zeta_defn(long long j, cplx z, Level lvl, const QuadratureSpec& spec);

/// zeta_j(z) from the Gaussian-sum form
///   2i r^{1/4} sin(pi/r) / sqrt(2r) * sum_n exp(-2 pi r (z - n/2r)^2) [nj].
/// The 1/sqrt(2r) factor comes from Poisson summation; with it both series
/// agree to rounding.
cplx zeta_gauss(long long j, cplx z, Level lvl, const QuadratureSpec& spec);

/// exp(-2 pi r (z - n/2r)^2), the building block of every Gaussian form.
cplx half_lattice_gaussian(long long n, cplx z, Level lvl);

/// All basis values (zeta_1(z), ..., zeta_{r-1}(z)) via the defining series.
CVector zeta_vector(cplx z, Level lvl, const QuadratureSpec& spec);

using HoloFn = std::function<cplx(cplx)>;

/// Section sum_j coeffs(j-1) zeta_j as a callable.
HoloFn section_function(const CVector& coeffs, Level lvl, const QuadratureSpec& spec);

struct QuadratureResult {
  CMatrix gram;  ///< gram(a, b) = <f_a, f_b>
  int grid_n = 0;
  double last_change = 0.0;
};

/// <f_a, f_b> = int_{[0,1]^2} f_a conj(f_b) exp(-4 pi r y^2) dx dy for all
/// pairs, refining the grid by doubling until the largest entry change is
/// below refine_tol times the largest diagonal entry. Throws AccuracyError
/// after max_doublings unsuccessful doublings.
QuadratureResult quadrature_gram(std::span<const HoloFn> fs, Level lvl,
                                 const QuadratureSpec& spec);

cplx inner_product(const HoloFn& f, const HoloFn& g, Level lvl, const QuadratureSpec& spec);

/// Inner product of two coefficient vectors in the zeta basis, computed by
/// quadrature of the sampled sections (not by the coefficient dot product).
cplx inner_product(const CVector& f, const CVector& g, Level lvl, const QuadratureSpec& spec);

/// Gram matrix of zeta_1..zeta_{r-1} under the quadrature inner product.
CMatrix gram_matrix(Level lvl, const QuadratureSpec& spec);

/// Reproducing kernel in its closed sinh form
///   4 r^{3/2} sum_{k,m} exp(-2 r pi [(z+k)^2 + m^2/4r^2 + (conj(w) - m/2r)^2])
///             * sinh(2 m pi (z+k)).
/// Equals 2r * reproducing_kernel_spectral.
cplx reproducing_kernel(cplx z, cplx w, Level lvl, const QuadratureSpec& spec);

/// sum_j zeta_j(z) conj(zeta_j(w)).
cplx reproducing_kernel_spectral(cplx z, cplx w, Level lvl, const QuadratureSpec& spec);

}  // namespace weylq
