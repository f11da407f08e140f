#pragma once

// Arithmetic building blocks at level r: quantized integers, the root of
// unity t = exp(i pi / 2r), the normalization X and Chebyshev polynomials
// of both kinds for scalar and matrix arguments.

#include <complex>
#include <concepts>
#include <stdexcept>
#include <type_traits>

#include <Eigen/Dense>

namespace weylq {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Level r of the quantization. The Hilbert space has dimension r - 1 and
/// theta indices are periodic modulo 2r.
///
/// r >= 3 is the physical range; r = 2 (a one-dimensional space) is
/// accepted so the degenerate case can be exercised, and anything smaller
/// throws std::invalid_argument.
class Level {
 public:
  explicit Level(int r);

  int r() const noexcept { return r_; }
  int dim() const noexcept { return r_ - 1; }
  int period() const noexcept { return 2 * r_; }

  cplx t() const { return t_pow(1); }

  /// t^n with the exponent reduced modulo 4r before evaluation, so that
  /// t^{n + 4r} == t^n holds bit-for-bit.
  cplx t_pow(long long n) const;

  friend bool operator==(Level, Level) = default;

 private:
  int r_;
};

/// Least non-negative residue of n modulo m (m > 0).
constexpr long long mod_floor(long long n, long long m) noexcept {
  long long v = n % m;
  return v < 0 ? v + m : v;
}

/// [n] = sin(n pi / r) / sin(pi / r). The argument is reduced modulo 2r
/// first; [n] is exactly zero when r divides n.
double quantum_integer(long long n, Level lvl);

/// X = sqrt(sum_{k=1}^{r-1} [k]^2), the normalization of the S-matrix.
double normalization_X(Level lvl);

template <typename X>
concept ChebyshevScalar = std::floating_point<X> || std::same_as<X, cplx>;

namespace detail {

template <typename X>
X three_term(int n, X f0, X f1, const X& x) {
  if (n < 0) throw std::invalid_argument("chebyshev: degree must be non-negative");
  if (n == 0) return f0;
  X prev = std::move(f0);
  X cur = std::move(f1);
  for (int k = 1; k < n; ++k) {
    X next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

void require_square(const CMatrix& m);

}  // namespace detail

/// Chebyshev polynomial with T_0 = 2, T_1 = x, T_{n+1} = x T_n - T_{n-1},
/// so that T_n(2 cos a) = 2 cos(n a).
template <ChebyshevScalar X>
X chebyshev_T(int n, X x) {
  return detail::three_term<X>(n, X(2), x, x);
}

/// Chebyshev polynomial of the second kind: S_0 = 1, S_1 = x, same
/// recurrence. S_n(2 cos a) = sin((n+1) a) / sin(a).
template <ChebyshevScalar X>
X chebyshev_S(int n, X x) {
  return detail::three_term<X>(n, X(1), x, x);
}

/// Matrix Chebyshev polynomials by the same recurrence (T_0 = 2 Id).
/// Throws std::invalid_argument for a non-square argument.
CMatrix chebyshev_T(int n, const CMatrix& m);
CMatrix chebyshev_S(int n, const CMatrix& m);

}  // namespace weylq
