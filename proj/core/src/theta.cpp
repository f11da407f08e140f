#include "weylq/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "weylq/numeric.hpp"

namespace weylq {

FoldedIndex fold_index(long long j, Level lvl) {
  const long long period = lvl.period();
  long long res = mod_floor(j, period);
  int sign = 1;
  if (res > lvl.r()) {
    res = period - res;
    sign = -1;
  }
  if (res == 0 || res == lvl.r()) sign = 0;
  return {static_cast<int>(res), sign};
}

QuadratureSpec QuadratureSpec::defaults(Level lvl) {
  QuadratureSpec spec;
  spec.grid_n = std::max(64, 8 * lvl.r());
  return spec;
}

void QuadratureSpec::validate() const {
  if (grid_n < 16) throw std::invalid_argument("QuadratureSpec: grid_n must be >= 16");
  if (!(refine_tol > 0.0 && refine_tol < 1.0)) {
    throw std::invalid_argument("QuadratureSpec: refine_tol must lie in (0, 1)");
  }
  if (!(series_tol > 0.0 && series_tol < 1.0)) {
    throw std::invalid_argument("QuadratureSpec: series_tol must lie in (0, 1)");
  }
  if (max_doublings < 1) throw std::invalid_argument("QuadratureSpec: max_doublings must be >= 1");
}

namespace {

// sum over nu = j0 + 2r n of exp(-pi nu^2 / 2r + 2 pi i z nu).
cplx theta_family(long long j0, cplx z, Level lvl, double tol) {
  const double r = lvl.r();
  const double x = z.real();
  const double y = z.imag();
  // Re exponent = -(pi/2r)(nu + 2ry)^2 + const, peak at nu = -2ry.
  const double center = (-2.0 * r * y - static_cast<double>(j0)) / (2.0 * r);
  const IndexWindow win = gaussian_window(center, 2.0 * kPi * r, tol, 1.0);
  cplx sum{0.0, 0.0};
  for (long long n = win.lo; n <= win.hi; ++n) {
    const double nu = static_cast<double>(j0 + 2 * lvl.r() * n);
    const double re = -kPi * nu * nu / (2.0 * r) - 2.0 * kPi * y * nu;
    sum += std::polar(std::exp(re), 2.0 * kPi * x * nu);
  }
  return sum;
}

}  // namespace

cplx zeta_defn(long long j, cplx z, Level lvl, const QuadratureSpec& spec) {
  const double scale = std::pow(static_cast<double>(lvl.r()), 0.25);
  return scale * (theta_family(j, z, lvl, spec.series_tol) -
                  theta_family(-j, z, lvl, spec.series_tol));
}

cplx half_lattice_gaussian(long long n, cplx z, Level lvl) {
  const double r = lvl.r();
  const double d = z.real() - static_cast<double>(n) / (2.0 * r);
  const double y = z.imag();
  return std::polar(std::exp(-2.0 * kPi * r * (d * d - y * y)), -4.0 * kPi * r * d * y);
}

cplx zeta_gauss(long long j, cplx z, Level lvl, const QuadratureSpec& spec) {
  const double r = lvl.r();
  const IndexWindow win = half_lattice_window(z.real(), lvl, spec.series_tol);
  cplx sum{0.0, 0.0};
  for (long long n = win.lo; n <= win.hi; ++n) {
    const double qn = quantum_integer(n * j, lvl);
    if (qn == 0.0) continue;
    sum += qn * half_lattice_gaussian(n, z, lvl);
  }
  const double amp = 2.0 * std::pow(r, 0.25) * std::sin(kPi / r) / std::sqrt(2.0 * r);
  return cplx{0.0, amp} * sum;
}

CVector zeta_vector(cplx z, Level lvl, const QuadratureSpec& spec) {
  CVector v(lvl.dim());
  for (int j = 1; j < lvl.r(); ++j) v(j - 1) = zeta_defn(j, z, lvl, spec);
  return v;
}

HoloFn section_function(const CVector& coeffs, Level lvl, const QuadratureSpec& spec) {
  if (coeffs.size() != lvl.dim()) {
    throw std::invalid_argument("section_function: coefficient count must equal r - 1");
  }
  return [coeffs, lvl, spec](cplx z) {
    return (coeffs.array() * zeta_vector(z, lvl, spec).array()).sum();
  };
}

namespace {

// Rows: functions; columns: grid points, each value premultiplied by
// sqrt(weight) so that gram = F F^H / N^2.
CMatrix sample_weighted(std::span<const HoloFn> fs, Level lvl, int n) {
  CMatrix samples(static_cast<Eigen::Index>(fs.size()), static_cast<Eigen::Index>(n) * n);
  const double r = lvl.r();
  for (int b = 0; b < n; ++b) {
    const double y = static_cast<double>(b) / n;
    const double root_weight = std::exp(-2.0 * kPi * r * y * y);
    for (int a = 0; a < n; ++a) {
      const cplx z{static_cast<double>(a) / n, y};
      const Eigen::Index col = static_cast<Eigen::Index>(b) * n + a;
      for (std::size_t f = 0; f < fs.size(); ++f) {
        samples(static_cast<Eigen::Index>(f), col) = fs[f](z) * root_weight;
      }
    }
  }
  return samples;
}

CMatrix trapezoid_gram(std::span<const HoloFn> fs, Level lvl, int n) {
  const CMatrix s = sample_weighted(fs, lvl, n);
  return (s * s.adjoint()) / (static_cast<double>(n) * n);
}

}  // namespace

QuadratureResult quadrature_gram(std::span<const HoloFn> fs, Level lvl,
                                 const QuadratureSpec& spec) {
  spec.validate();
  if (fs.empty()) throw std::invalid_argument("quadrature_gram: no functions given");
  int n = spec.grid_n;
  CMatrix coarse = trapezoid_gram(fs, lvl, n);
  double change = 0.0;
  for (int d = 0; d < spec.max_doublings; ++d) {
    n *= 2;
    CMatrix fine = trapezoid_gram(fs, lvl, n);
    const double scale = std::max(fine.diagonal().cwiseAbs().maxCoeff(),
                                  std::numeric_limits<double>::min());
    change = max_abs(fine - coarse) / scale;
    if (change < spec.refine_tol) return {std::move(fine), n, change};
    coarse = std::move(fine);
  }
  std::ostringstream msg;
  msg << "quadrature did not converge: relative change " << change << " after "
      << spec.max_doublings << " doublings (grid " << n << ", r = " << lvl.r() << ")";
  throw AccuracyError(msg.str());
}

cplx inner_product(const HoloFn& f, const HoloFn& g, Level lvl, const QuadratureSpec& spec) {
  const HoloFn fs[] = {f, g};
  return quadrature_gram(fs, lvl, spec).gram(0, 1);
}

cplx inner_product(const CVector& f, const CVector& g, Level lvl, const QuadratureSpec& spec) {
  return inner_product(section_function(f, lvl, spec), section_function(g, lvl, spec), lvl,
                       spec);
}

CMatrix gram_matrix(Level lvl, const QuadratureSpec& spec) {
  std::vector<HoloFn> fs;
  for (int j = 1; j < lvl.r(); ++j) {
    fs.emplace_back([j, lvl, spec](cplx z) { return zeta_defn(j, z, lvl, spec); });
  }
  return quadrature_gram(fs, lvl, spec).gram;
}

cplx reproducing_kernel(cplx z, cplx w, Level lvl, const QuadratureSpec& spec) {
  const double r = lvl.r();
  const cplx wb = std::conj(w);
  // sinh(a) = (e^a - e^-a) / 2 with each exponential folded into the
  // Gaussian: -2 pi r (z + k)^2 +- 2 pi m (z + k) - pi m^2 / 2r
  //           = -2 pi r (z + k -+ m/2r)^2.
  const IndexWindow mwin =
      gaussian_window(2.0 * r * wb.real(), kPi / (2.0 * r), spec.series_tol, 2.0 * r);
  cplx sum{0.0, 0.0};
  for (long long m = mwin.lo; m <= mwin.hi; ++m) {
    if (m == 0) continue;
    const cplx gw = half_lattice_gaussian(m, wb, lvl);
    const double shift = static_cast<double>(m) / (2.0 * r);
    for (int sign : {+1, -1}) {
      const IndexWindow kwin =
          gaussian_window(-z.real() + sign * shift, 2.0 * kPi * r, spec.series_tol, 1.0);
      cplx inner{0.0, 0.0};
      for (long long k = kwin.lo; k <= kwin.hi; ++k) {
        // exp(-2 pi r (z + k - sign*m/2r)^2) = g_{sign*m - 2rk}(z)
        inner += half_lattice_gaussian(sign * m - 2LL * lvl.r() * k, z, lvl);
      }
      sum += static_cast<double>(sign) * gw * inner;
    }
  }
  return 2.0 * std::pow(r, 1.5) * sum;
}

cplx reproducing_kernel_spectral(cplx z, cplx w, Level lvl, const QuadratureSpec& spec) {
  return zeta_vector(w, lvl, spec).dot(zeta_vector(z, lvl, spec));
}

}  // namespace weylq
