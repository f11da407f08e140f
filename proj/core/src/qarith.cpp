#include "weylq/qarith.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace weylq {

Level::Level(int r) : r_(r) {
  if (r < 2) {
    throw std::invalid_argument("level r must be >= 2 (got " + std::to_string(r) + ")");
  }
}

cplx Level::t_pow(long long n) const {
  const long long m = mod_floor(n, 4LL * r_);
  if (m == 0) return {1.0, 0.0};
  if (2 * m == 4LL * r_) return {-1.0, 0.0};
  const double angle = kPi * static_cast<double>(m) / (2.0 * r_);
  return std::polar(1.0, angle);
}

double quantum_integer(long long n, Level lvl) {
  long long m = mod_floor(n, lvl.period());
  if (m == 0 || m == lvl.r()) return 0.0;
  // Reduce to 0 < m < r/2 by sin(pi - a) = sin(a) and the sign flip past r,
  // so oddness and [r - m] = [m] hold exactly.
  double sign = 1.0;
  if (m > lvl.r()) {
    m = lvl.period() - m;
    sign = -1.0;
  }
  m = std::min(m, lvl.r() - m);
  const double r = lvl.r();
  return sign * std::sin(kPi * static_cast<double>(m) / r) / std::sin(kPi / r);
}

double normalization_X(Level lvl) {
  double sum = 0.0;
  for (int k = 1; k < lvl.r(); ++k) {
    const double qk = quantum_integer(k, lvl);
    sum += qk * qk;
  }
  return std::sqrt(sum);
}

namespace detail {

void require_square(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("chebyshev: matrix argument must be square");
  }
}

}  // namespace detail

CMatrix chebyshev_T(int n, const CMatrix& m) {
  detail::require_square(m);
  const CMatrix id = CMatrix::Identity(m.rows(), m.cols());
  return detail::three_term<CMatrix>(n, 2.0 * id, m, m);
}

CMatrix chebyshev_S(int n, const CMatrix& m) {
  detail::require_square(m);
  const CMatrix id = CMatrix::Identity(m.rows(), m.cols());
  return detail::three_term<CMatrix>(n, id, m, m);
}

}  // namespace weylq
