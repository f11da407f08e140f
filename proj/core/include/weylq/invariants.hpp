#pragma once

// Quantum invariants of knots and links in the solid torus, realized as
// holomorphic sections: Z(K) = (1/X) sum_j J(K, j) zeta_j.

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "weylq/qarith.hpp"
#include "weylq/theta.hpp"

namespace weylq {

/// Coefficients of a section in the zeta basis. Knots have rank 1 (an
/// (r-1) x 1 column); two-component links have rank 2 (an (r-1) x (r-1)
/// tensor, entry (j-1, m-1) multiplying zeta_j(z) zeta_m(w)).
struct StateVector {
  Level lvl;
  int rank = 1;
  CMatrix coeffs;

  /// Throws std::invalid_argument if the extents do not match r - 1 or an
  /// entry is not finite.
  void validate() const;
};

struct KnotSpec {
  enum class Kind { Unknot, Torus, Hopf };

  Kind kind = Kind::Unknot;
  int p = 0;
  int q = 0;

  static KnotSpec unknot() { return {}; }
  static KnotSpec torus(int p, int q);
  static KnotSpec hopf() { return {Kind::Hopf, 0, 0}; }

  /// "unknot", "torus:p,q" or "hopf". Throws std::invalid_argument.
  static KnotSpec parse(std::string_view text);

  /// Torus knots with |p| == 1 or |q| == 1 are unknots in disguise; they
  /// are accepted and flagged here.
  bool degenerate() const;

  std::string str() const;
};

/// J(K_{p,q}, j) = sum_{0 <= k <= j, k = j mod 2}
///                   t^{-pqk^2} ([kp+kq+1] - [kp-kq+1]) / (t^2 - t^{-2}).
/// Throws std::invalid_argument unless gcd(p, q) == 1.
cplx jones_torus(int p, int q, int j, Level lvl);

/// Colored Jones value J(K, j) for a knot spec (J(unknot, j) = [j]).
/// Throws for the Hopf link, which has two colors.
cplx jones(const KnotSpec& knot, int j, Level lvl);

/// Knots: coefficient j is J(K, j) / X. Hopf link: [jm] / X.
StateVector z_invariant(const KnotSpec& knot, Level lvl);

/// sum_j v_j zeta_j(z), or sum_{j,m} v_{jm} zeta_j(z) zeta_m(w) for rank 2,
/// using the Gaussian-sum form of zeta. Throws std::invalid_argument when
/// the point count differs from the rank.
cplx eval_section(const StateVector& v, std::span<const cplx> points, const QuadratureSpec& spec);

/// sum_{j=1}^{r-1} [nj] J(K_{p,q}, j).
cplx torus_direct_sum(long long n, int p, int q, Level lvl);

/// Coefficient of exp(-2 pi r (z - n/2r)^2) in the Gaussian form of Z(K):
///   2 sqrt(2) i r^{-1/4} sin^2(pi/r) sum_j [nj] J(K, j).
cplx gaussian_coefficient(const KnotSpec& knot, long long n, Level lvl);

/// Z(K)(z) in the Gaussian-sum form, summing gaussian_coefficient over n.
cplx section_gaussian_form(const KnotSpec& knot, cplx z, Level lvl, const QuadratureSpec& spec);

struct TorusCoefficient {
  long long n = 0;
  /// Sine-difference closed form C_n; empty when r | n (the formula is 0/0).
  std::optional<cplx> closed_form;
  /// -(1/sqrt 2) r^{-1/4} sin(pi/r) C_n, the closed form's Gaussian coefficient.
  std::optional<cplx> closed_form_coefficient;
  /// gaussian_coefficient(torus(p,q), n): the authoritative value.
  cplx direct{0.0, 0.0};
  /// |closed_form_coefficient - direct| / |direct| (0 when both vanish).
  std::optional<double> residual;

  /// Closed form of sum_j [nj] J(K,j) from the geometric series summed
  /// with the conjugate series added, which gives cosine differences.
  std::optional<cplx> corrected_sum;
  /// |corrected_sum - torus_direct_sum| / max(1, |torus_direct_sum|).
  std::optional<double> corrected_residual;
};

/// Evaluates the sine-difference coefficient C_n of the (p,q)-torus knot and the
/// direct coefficient. When r | n only the direct coefficient (zero) is
/// returned.
TorusCoefficient torus_coeff_Cn(long long n, int p, int q, Level lvl);

/// Unknot section closed form
///   2i sqrt(2) r^{3/4} e^{-pi/2r} sum_n e^{-2 pi r (z-n)^2} sinh 2 pi (z-n).
cplx unknot_closed_form(cplx z, Level lvl, const QuadratureSpec& spec);

/// Hopf link closed form
///   -r sqrt(2) sin(pi/r) sum_{n,k} [nk] e^{-2r pi [(z - n/2r)^2 + (w - k/2r)^2]}.
cplx hopf_closed_form(cplx z, cplx w, Level lvl, const QuadratureSpec& spec);

}  // namespace weylq
