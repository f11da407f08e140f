#pragma once

// Projective representation of the mapping class group of the torus on
// H_r, generated by S = ([jk]) and T = diag(t^{j^2 - 1}). S is left
// unnormalized (S^2 = X^2 Id), so comparisons between words are projective.

#include <string>
#include <string_view>
#include <vector>

#include "weylq/qarith.hpp"
#include "weylq/theta.hpp"

namespace weylq {

enum class Generator { S, SInv, T, TInv };

/// Word over {S, S^-1, T, T^-1}; the empty word is the identity.
struct MCGWord {
  std::vector<Generator> letters;

  /// Letters S/s and T/t, each optionally followed by '-' for the inverse.
  /// Whitespace, '*' and '.' are ignored. Throws std::invalid_argument on
  /// any other character.
  static MCGWord parse(std::string_view text);

  std::string str() const;
};

CMatrix s_matrix(Level lvl);
CMatrix t_matrix(Level lvl);

/// rho(g_1 g_2 ... g_n) = rho(g_1) rho(g_2) ... rho(g_n).
CMatrix rho(const MCGWord& word, Level lvl);

/// S recovered from the compatibility recursions
///   a_{1,j+1} = (t^2 + t^-2) a_{1,j} - a_{1,j-1},  a_{1,0} = 0, a_{1,1} = 1,
///   a_{k+1,j} = (t^{2j} + t^{-2j}) a_{k,j} - a_{k-1,j},  a_{0,j} = 0.
CMatrix reconstruct_S(Level lvl);

/// T recovered from b_{1,1} = 1, b_{j,j} = t^{2j-1} b_{j-1,j-1}.
CMatrix reconstruct_T(Level lvl);

/// Closed form of (S zeta_m)(z):
///   2i sqrt(2) r^{3/4} e^{-pi m^2 / 2r} sum_k e^{-2 pi r (z-k)^2} sinh 2 pi m (z-k).
/// Proportional to sum_j [jm] zeta_j(z) with an m- and z-independent
/// constant.
cplx s_action_closed_form(int m, cplx z, Level lvl, const QuadratureSpec& spec);

struct CompatibilityReport {
  double s_residual = 0.0;  ///< max |S^-1 C(p,q) S - C(-q,p)|
  double t_residual = 0.0;  ///< max |T^-1 C(p,q) T - C(p,q+p)|

  double max() const { return s_residual > t_residual ? s_residual : t_residual; }
};

CompatibilityReport compatibility_check(long long p, long long q, Level lvl);

/// a ~= mu b with mu taken from the largest-magnitude entry of b.
struct ProjectiveMatch {
  cplx scale{0.0, 0.0};
  /// max |a - mu b| / max |a|.
  double residual = 0.0;
};

ProjectiveMatch projective_match(const CMatrix& a, const CMatrix& b);

}  // namespace weylq
