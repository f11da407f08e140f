#include "weylq/invariants.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "weylq/mcg.hpp"
#include "weylq/numeric.hpp"
#include "weylq/weyl.hpp"

namespace weylq {

void StateVector::validate() const {
  if (rank != 1 && rank != 2) throw std::invalid_argument("StateVector: rank must be 1 or 2");
  const Eigen::Index cols = rank == 1 ? 1 : lvl.dim();
  if (coeffs.rows() != lvl.dim() || coeffs.cols() != cols) {
    throw std::invalid_argument("StateVector: extents must equal r - 1 on every axis");
  }
  if (!coeffs.allFinite()) throw std::invalid_argument("StateVector: non-finite coefficient");
}

KnotSpec KnotSpec::torus(int p, int q) {
  if (std::abs(p) < 1 || std::abs(q) < 1) {
    throw std::invalid_argument("torus knot needs |p|, |q| >= 1");
  }
  if (gcd2(p, q) != 1) throw std::invalid_argument("torus knot needs gcd(p, q) = 1");
  return {Kind::Torus, p, q};
}

namespace {

int parse_int(std::string_view s) {
  int value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

KnotSpec KnotSpec::parse(std::string_view text) {
  if (text == "unknot") return unknot();
  if (text == "hopf") return hopf();
  constexpr std::string_view prefix = "torus:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string_view args = text.substr(prefix.size());
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) {
      throw std::invalid_argument("knot spec: expected torus:p,q");
    }
    return torus(parse_int(args.substr(0, comma)), parse_int(args.substr(comma + 1)));
  }
  throw std::invalid_argument("knot spec: expected 'unknot', 'torus:p,q' or 'hopf', got '" +
                              std::string(text) + "'");
}

bool KnotSpec::degenerate() const {
  return kind == Kind::Torus && (std::abs(p) == 1 || std::abs(q) == 1);
}

std::string KnotSpec::str() const {
  switch (kind) {
    case Kind::Unknot: return "unknot";
    case Kind::Hopf: return "hopf";
    case Kind::Torus: return "torus:" + std::to_string(p) + "," + std::to_string(q);
  }
  return {};
}

cplx jones_torus(int p, int q, int j, Level lvl) {
  if (gcd2(p, q) != 1) throw std::invalid_argument("jones_torus: gcd(p, q) must be 1");
  if (j < 1 || j >= lvl.r()) throw std::invalid_argument("jones_torus: color must lie in [1, r-1]");
  const cplx denom = lvl.t_pow(2) - lvl.t_pow(-2);
  const long long pp = p;
  const long long qq = q;
  cplx sum{0.0, 0.0};
  for (long long k = j % 2; k <= j; k += 2) {
    const double bracket =
        quantum_integer(k * pp + k * qq + 1, lvl) - quantum_integer(k * pp - k * qq + 1, lvl);
    sum += lvl.t_pow(-pp * qq * k * k) * bracket / denom;
  }
  return sum;
}

cplx jones(const KnotSpec& knot, int j, Level lvl) {
  switch (knot.kind) {
    case KnotSpec::Kind::Unknot: return quantum_integer(j, lvl);
    case KnotSpec::Kind::Torus: return jones_torus(knot.p, knot.q, j, lvl);
    case KnotSpec::Kind::Hopf: break;
  }
  throw std::invalid_argument("jones: the Hopf link carries two colors");
}

StateVector z_invariant(const KnotSpec& knot, Level lvl) {
  const double x = normalization_X(lvl);
  const int d = lvl.dim();
  if (knot.kind == KnotSpec::Kind::Hopf) {
    return {lvl, 2, s_matrix(lvl) / x};
  }
  CMatrix coeffs(d, 1);
  for (int j = 1; j < lvl.r(); ++j) coeffs(j - 1, 0) = jones(knot, j, lvl) / x;
  return {lvl, 1, std::move(coeffs)};
}

cplx eval_section(const StateVector& v, std::span<const cplx> points, const QuadratureSpec& spec) {
  v.validate();
  if (static_cast<int>(points.size()) != v.rank) {
    throw std::invalid_argument("eval_section: expected " + std::to_string(v.rank) +
                                " point(s), got " + std::to_string(points.size()));
  }
  const int d = v.lvl.dim();
  CVector zz(d);
  for (int j = 1; j <= d; ++j) zz(j - 1) = zeta_gauss(j, points[0], v.lvl, spec);
  if (v.rank == 1) return (zz.array() * v.coeffs.col(0).array()).sum();
  CVector zw(d);
  for (int m = 1; m <= d; ++m) zw(m - 1) = zeta_gauss(m, points[1], v.lvl, spec);
  return (zz.transpose() * v.coeffs * zw)(0, 0);
}

cplx torus_direct_sum(long long n, int p, int q, Level lvl) {
  cplx sum{0.0, 0.0};
  for (int j = 1; j < lvl.r(); ++j) sum += quantum_integer(n * j, lvl) * jones_torus(p, q, j, lvl);
  return sum;
}

namespace {

cplx gaussian_prefactor(Level lvl) {
  const double r = lvl.r();
  const double s = std::sin(kPi / r);
  return cplx{0.0, 2.0 * std::sqrt(2.0) * std::pow(r, -0.25) * s * s};
}

}  // namespace

cplx gaussian_coefficient(const KnotSpec& knot, long long n, Level lvl) {
  cplx sum{0.0, 0.0};
  for (int j = 1; j < lvl.r(); ++j) sum += quantum_integer(n * j, lvl) * jones(knot, j, lvl);
  return gaussian_prefactor(lvl) * sum;
}

cplx section_gaussian_form(const KnotSpec& knot, cplx z, Level lvl, const QuadratureSpec& spec) {
  // Coefficients depend on n only through n mod 2r.
  std::vector<cplx> by_residue(static_cast<std::size_t>(lvl.period()));
  for (int n = 0; n < lvl.period(); ++n) by_residue[n] = gaussian_coefficient(knot, n, lvl);
  const IndexWindow win = half_lattice_window(z.real(), lvl, spec.series_tol);
  cplx sum{0.0, 0.0};
  for (long long n = win.lo; n <= win.hi; ++n) {
    sum += by_residue[mod_floor(n, lvl.period())] * half_lattice_gaussian(n, z, lvl);
  }
  return sum;
}

namespace {

double relative_gap(cplx a, cplx b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale < 1e-12) return 0.0;
  return std::abs(a - b) / scale;
}

}  // namespace

TorusCoefficient torus_coeff_Cn(long long n, int p, int q, Level lvl) {
  if (gcd2(p, q) != 1) throw std::invalid_argument("torus_coeff_Cn: gcd(p, q) must be 1");
  TorusCoefficient out;
  out.n = n;
  out.direct = gaussian_coefficient(KnotSpec{KnotSpec::Kind::Torus, p, q}, n, lvl);
  if (mod_floor(n, lvl.r()) == 0) return out;

  const int r = lvl.r();
  const double s = std::sin(kPi / r);
  const double theta = kPi * static_cast<double>(n) / r;
  const long long pp = p;
  const long long qq = q;
  cplx sine_form{0.0, 0.0};
  cplx corrected{0.0, 0.0};
  for (long long k = 1; k < r; ++k) {
    const long long half = (r - 1 - k) / 2;
    const cplx phase = lvl.t_pow(-pp * qq * k * k);
    const double jones_bracket =
        quantum_integer(k * pp + k * qq + 1, lvl) - quantum_integer(k * pp - k * qq + 1, lvl);
    const double sine_diff =
        quantum_integer(2 * n * half + k * n + n, lvl) - quantum_integer(k * n - n, lvl);
    sine_form += phase * sine_diff * jones_bracket;
    // sum_{m=0}^{half} [n(2m+k)] = (cos((k-1)theta) - cos((2 half + k + 1) theta)) / (2 s sin theta)
    const double cosine_sum =
        (std::cos(static_cast<double>(k - 1) * theta) -
         std::cos(static_cast<double>(2 * half + k + 1) * theta)) /
        (2.0 * s * std::sin(theta));
    corrected += phase * jones_bracket * cosine_sum;
  }
  sine_form /= std::sin(theta);
  corrected /= lvl.t_pow(2) - lvl.t_pow(-2);

  out.closed_form = sine_form;
  out.closed_form_coefficient = -std::pow(static_cast<double>(r), -0.25) * s / std::sqrt(2.0) * sine_form;
  out.residual = relative_gap(*out.closed_form_coefficient, out.direct);
  out.corrected_sum = corrected;
  const cplx direct_sum = torus_direct_sum(n, p, q, lvl);
  out.corrected_residual = std::abs(corrected - direct_sum) / std::max(1.0, std::abs(direct_sum));
  return out;
}

cplx unknot_closed_form(cplx z, Level lvl, const QuadratureSpec& spec) {
  return s_action_closed_form(1, z, lvl, spec);
}

cplx hopf_closed_form(cplx z, cplx w, Level lvl, const QuadratureSpec& spec) {
  const double r = lvl.r();
  const IndexWindow nwin = half_lattice_window(z.real(), lvl, spec.series_tol);
  const IndexWindow kwin = half_lattice_window(w.real(), lvl, spec.series_tol);
  std::vector<cplx> gw;
  gw.reserve(static_cast<std::size_t>(kwin.size()));
  for (long long k = kwin.lo; k <= kwin.hi; ++k) gw.push_back(half_lattice_gaussian(k, w, lvl));
  cplx sum{0.0, 0.0};
  for (long long n = nwin.lo; n <= nwin.hi; ++n) {
    cplx inner{0.0, 0.0};
    for (long long k = kwin.lo; k <= kwin.hi; ++k) {
      const double qnk = quantum_integer(n * k, lvl);
      if (qnk != 0.0) inner += qnk * gw[static_cast<std::size_t>(k - kwin.lo)];
    }
    sum += inner * half_lattice_gaussian(n, z, lvl);
  }
  return -r * std::sqrt(2.0) * std::sin(kPi / r) * sum;
}

}  // namespace weylq
