#include "weylq/mcg.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "weylq/numeric.hpp"
#include "weylq/weyl.hpp"

namespace weylq {

MCGWord MCGWord::parse(std::string_view text) {
  MCGWord word;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') continue;
    if (c != 'S' && c != 'T') {
      throw std::invalid_argument(std::string("MCG word: unexpected character '") + text[i] + "'");
    }
    const bool inverse = i + 1 < text.size() && text[i + 1] == '-';
    if (inverse) ++i;
    if (c == 'S') {
      word.letters.push_back(inverse ? Generator::SInv : Generator::S);
    } else {
      word.letters.push_back(inverse ? Generator::TInv : Generator::T);
    }
  }
  return word;
}

std::string MCGWord::str() const {
  std::string out;
  for (Generator g : letters) {
    switch (g) {
      case Generator::S: out += "S"; break;
      case Generator::SInv: out += "S-"; break;
      case Generator::T: out += "T"; break;
      case Generator::TInv: out += "T-"; break;
    }
  }
  return out;
}

CMatrix s_matrix(Level lvl) {
  const int d = lvl.dim();
  CMatrix s(d, d);
  for (int j = 1; j < lvl.r(); ++j) {
    for (int k = 1; k < lvl.r(); ++k) {
      s(j - 1, k - 1) = quantum_integer(static_cast<long long>(j) * k, lvl);
    }
  }
  return s;
}

CMatrix t_matrix(Level lvl) {
  const int d = lvl.dim();
  CMatrix t = CMatrix::Zero(d, d);
  for (int j = 1; j < lvl.r(); ++j) t(j - 1, j - 1) = lvl.t_pow(static_cast<long long>(j) * j - 1);
  return t;
}

CMatrix rho(const MCGWord& word, Level lvl) {
  const CMatrix s = s_matrix(lvl);
  const CMatrix t = t_matrix(lvl);
  const double x2 = std::pow(normalization_X(lvl), 2);
  CMatrix out = CMatrix::Identity(lvl.dim(), lvl.dim());
  for (Generator g : word.letters) {
    switch (g) {
      case Generator::S: out = out * s; break;
      case Generator::SInv: out = out * (s / x2); break;
      case Generator::T: out = out * t; break;
      case Generator::TInv: out = out * t.adjoint(); break;
    }
  }
  return out;
}

CMatrix reconstruct_S(Level lvl) {
  const int r = lvl.r();
  // a(k, j) for 0 <= k, j <= r - 1; row and column 0 stay zero.
  CMatrix a = CMatrix::Zero(r, r);
  const cplx two_cos = lvl.t_pow(2) + lvl.t_pow(-2);
  a(1, 1) = 1.0;
  for (int j = 1; j + 1 < r; ++j) a(1, j + 1) = two_cos * a(1, j) - a(1, j - 1);
  for (int j = 1; j < r; ++j) {
    const cplx coeff = lvl.t_pow(2 * j) + lvl.t_pow(-2 * j);
    for (int k = 1; k + 1 < r; ++k) a(k + 1, j) = coeff * a(k, j) - a(k - 1, j);
  }
  return a.bottomRightCorner(r - 1, r - 1);
}

CMatrix reconstruct_T(Level lvl) {
  const int d = lvl.dim();
  CMatrix b = CMatrix::Zero(d, d);
  b(0, 0) = 1.0;
  for (int j = 2; j < lvl.r(); ++j) b(j - 1, j - 1) = lvl.t_pow(2 * j - 1) * b(j - 2, j - 2);
  return b;
}

cplx s_action_closed_form(int m, cplx z, Level lvl, const QuadratureSpec& spec) {
  const double r = lvl.r();
  // e^{-2 pi r (z-k)^2} sinh(2 pi m (z-k)) e^{-pi m^2/2r}
  //   = (g_{2rk+m}(z) - g_{2rk-m}(z)) / 2 with g_n = e^{-2 pi r (z - n/2r)^2}.
  const IndexWindow win = gaussian_window(z.real(), 2.0 * kPi * r, spec.series_tol,
                                          1.0 + std::abs(m) / (2.0 * r));
  cplx sum{0.0, 0.0};
  for (long long k = win.lo; k <= win.hi; ++k) {
    const long long base = 2LL * lvl.r() * k;
    sum += half_lattice_gaussian(base + m, z, lvl) - half_lattice_gaussian(base - m, z, lvl);
  }
  return cplx{0.0, std::sqrt(2.0) * std::pow(r, 0.75)} * sum;
}

CompatibilityReport compatibility_check(long long p, long long q, Level lvl) {
  const CMatrix s = s_matrix(lvl);
  const CMatrix t = t_matrix(lvl);
  Eigen::PartialPivLU<CMatrix> s_lu(s);
  Eigen::PartialPivLU<CMatrix> t_lu(t);
  if (std::abs(s_lu.determinant()) < 1e-12 || std::abs(t_lu.determinant()) < 1e-12) {
    throw std::runtime_error("compatibility_check: S or T is singular");
  }
  const CMatrix c = c_matrix(p, q, lvl).mat;
  CompatibilityReport report;
  report.s_residual = max_abs(s_lu.solve(c * s) - c_matrix(-q, p, lvl).mat);
  report.t_residual = max_abs(t_lu.solve(c * t) - c_matrix(p, q + p, lvl).mat);
  return report;
}

ProjectiveMatch projective_match(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("projective_match: shape mismatch");
  }
  Eigen::Index row = 0;
  Eigen::Index col = 0;
  b.cwiseAbs().maxCoeff(&row, &col);
  ProjectiveMatch match;
  if (b(row, col) == cplx{0.0, 0.0}) {
    match.residual = max_abs(a) == 0.0 ? 0.0 : 1.0;
    return match;
  }
  match.scale = a(row, col) / b(row, col);
  const double norm = max_abs(a);
  match.residual = norm == 0.0 ? max_abs(match.scale * b) : max_abs(a - match.scale * b) / norm;
  return match;
}

}  // namespace weylq
