#include "weylq/weyl.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "weylq/numeric.hpp"

namespace weylq {

long long gcd2(long long a, long long b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

long long spectral_gcd(long long p, long long q, Level lvl) {
  return gcd2(gcd2(p, q), lvl.period());
}

Observable c_matrix(long long p, long long q, Level lvl) {
  const int d = lvl.dim();
  CMatrix mat = CMatrix::Zero(d, d);
  for (int m = 1; m < lvl.r(); ++m) {
    const FoldedIndex lower = fold_index(m - p, lvl);
    const FoldedIndex upper = fold_index(m + p, lvl);
    if (lower.sign != 0) {
      mat(lower.index - 1, m - 1) += static_cast<double>(lower.sign) * lvl.t_pow(-p * q + 2 * q * m);
    }
    if (upper.sign != 0) {
      mat(upper.index - 1, m - 1) += static_cast<double>(upper.sign) * lvl.t_pow(-p * q - 2 * q * m);
    }
  }
  return {lvl, std::move(mat), std::make_pair(static_cast<int>(p), static_cast<int>(q))};
}

Observable colored_curve(int k, long long p, long long q, Level lvl) {
  if (k < 0) throw std::invalid_argument("colored_curve: color must be >= 0");
  if (gcd2(p, q) != 1) {
    throw std::invalid_argument("colored_curve: (" + std::to_string(p) + ", " +
                                std::to_string(q) + ") is not a primitive curve");
  }
  if (k == 0) return {lvl, CMatrix::Zero(lvl.dim(), lvl.dim()), std::nullopt};
  return {lvl, chebyshev_S(k - 1, c_matrix(p, q, lvl).mat), std::nullopt};
}

cplx c_kernel(long long p, long long q, cplx z, cplx w, Level lvl, const QuadratureSpec& spec) {
  const CMatrix& m = c_matrix(p, q, lvl).mat;
  const CVector zz = zeta_vector(z, lvl, spec);
  const CVector zw = zeta_vector(w, lvl, spec);
  // sum_{k,j} M_kj zeta_k(z) conj(zeta_j(w))
  return (zz.transpose() * m * zw.conjugate())(0, 0);
}

cplx c_kernel_closed_form(long long p, long long q, cplx z, cplx w, Level lvl,
                          const QuadratureSpec& spec) {
  const double r = lvl.r();
  const long long period = lvl.period();
  const cplx wb = std::conj(w);
  struct Family {
    long long n_coeff;  // m == n_coeff * n + q_coeff * q  (mod 2r)
    long long q_coeff;
    int phase_sign;  // exp(phase_sign * i pi n p / r)
    double weight;
  };
  // 2r | q + (n - m), 2r | q - (n - m), 2r | q + (n + m), 2r | q - (n + m)
  constexpr std::array<Family, 4> families{{
      {+1, +1, -1, +1.0},
      {+1, -1, +1, +1.0},
      {-1, -1, -1, -1.0},
      {-1, +1, +1, -1.0},
  }};
  const IndexWindow nwin = half_lattice_window(z.real(), lvl, spec.series_tol);
  const IndexWindow mwin = half_lattice_window(wb.real(), lvl, spec.series_tol);
  cplx sum{0.0, 0.0};
  for (long long n = nwin.lo; n <= nwin.hi; ++n) {
    const cplx gz = half_lattice_gaussian(n, z, lvl);
    for (const Family& fam : families) {
      const long long residue = mod_floor(fam.n_coeff * n + fam.q_coeff * q, period);
      // first m >= mwin.lo in the residue class
      const long long m0 = mwin.lo + mod_floor(residue - mwin.lo, period);
      cplx inner{0.0, 0.0};
      for (long long m = m0; m <= mwin.hi; m += period) {
        inner += half_lattice_gaussian(m, wb, lvl);
      }
      // exp(-+ i pi n p / r) = t^{-+ 2np}
      sum += fam.weight * lvl.t_pow(fam.phase_sign * 2 * n * p) * gz * inner;
    }
  }
  return 2.0 * std::pow(r, 1.5) * lvl.t_pow(-p * q) * sum;
}

std::vector<double> spectrum(long long p, long long q, Level lvl) {
  const CMatrix m = c_matrix(p, q, lvl).mat;
  std::vector<double> eig;
  const double scale = std::max(1.0, max_abs(m));
  if (max_abs(m - m.adjoint()) <= 1e-13 * scale) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("spectrum: eigen-solver failure");
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
      eig.push_back(solver.eigenvalues()(i));
    }
  } else {
    Eigen::ComplexEigenSolver<CMatrix> solver(m, false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("spectrum: eigen-solver failure");
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
      const cplx ev = solver.eigenvalues()(i);
      if (std::abs(ev.imag()) > 1e-9 * scale) {
        throw std::runtime_error("spectrum: non-real eigenvalue for C(" + std::to_string(p) +
                                 ", " + std::to_string(q) + ")");
      }
      eig.push_back(ev.real());
    }
  }
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::vector<double> predicted_spectrum(long long p, long long q, Level lvl) {
  const double g = static_cast<double>(spectral_gcd(p, q, lvl));
  std::vector<double> eig;
  for (int k = 1; k < lvl.r(); ++k) {
    eig.push_back(2.0 * std::cos(g * k * kPi / lvl.r()));
  }
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace weylq
