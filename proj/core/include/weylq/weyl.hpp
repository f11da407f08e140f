#pragma once

// Quantum observables on H_r. C(p,q) is the Weyl quantization of the
// symbol 2 cos 2 pi (p x + q y); in the zeta basis it acts by
//
//   C(p,q) zeta_m = t^{-pq} (t^{2qm} zeta_{m-p} + t^{-2qm} zeta_{m+p}).
//
// Matrices here act on coefficient vectors: column m holds the
// coefficients of C zeta_m.

#include <optional>
#include <utility>
#include <vector>

#include "weylq/qarith.hpp"
#include "weylq/theta.hpp"

namespace weylq {

struct Observable {
  Level lvl;
  CMatrix mat;
  std::optional<std::pair<int, int>> provenance;
};

/// gcd with gcd(0, n) = |n| and gcd(0, 0) = 0.
long long gcd2(long long a, long long b);

/// gcd(p, q, 2r); equals 2r when p = q = 0.
long long spectral_gcd(long long p, long long q, Level lvl);

Observable c_matrix(long long p, long long q, Level lvl);

/// V^k(p', q') = S_{k-1}(C(p', q')) for k >= 1 and 0 for k = 0: the curve
/// of slope p'/q' colored by the k-dimensional irreducible representation.
/// Throws std::invalid_argument unless gcd(p', q') == 1 and k >= 0.
Observable colored_curve(int k, long long p, long long q, Level lvl);

/// Kernel of C(p,q) from its definition sum_j (C zeta_j)(z) conj(zeta_j(w)).
cplx c_kernel(long long p, long long q, cplx z, cplx w, Level lvl, const QuadratureSpec& spec);

/// Closed double Gaussian sum for the same kernel:
///
///   2 r^{3/2} t^{-pq} [ sum_{2r | q +- (n-m)} - sum_{2r | q +- (n+m)} ]
///       exp(-2 r pi [(z - n/2r)^2 + (conj(w) - m/2r)^2] -+ i pi n p / r)
///
/// The upper signs go together. Equals 2r * c_kernel.
cplx c_kernel_closed_form(long long p, long long q, cplx z, cplx w, Level lvl,
                          const QuadratureSpec& spec);

/// Eigenvalues of C(p,q), ascending. Uses the Hermitian solver when the
/// matrix is Hermitian to rounding, otherwise the general complex solver
/// and throws std::runtime_error if any eigenvalue is not real.
std::vector<double> spectrum(long long p, long long q, Level lvl);

/// {2 cos(g k pi / r) : k = 1..r-1} with g = gcd(p, q, 2r), ascending.
std::vector<double> predicted_spectrum(long long p, long long q, Level lvl);

}  // namespace weylq
