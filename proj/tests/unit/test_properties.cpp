// Randomized invariants. Each test draws a fixed number of cases from a
// seeded generator so failures reproduce; the seed is printed on failure.

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "weylq/invariants.hpp"
#include "weylq/mcg.hpp"
#include "weylq/numeric.hpp"
#include "weylq/weyl.hpp"

using namespace weylq;

namespace {

constexpr unsigned kSeed = 0x5eed2024u;
constexpr int kCases = 200;

struct Gen {
  std::mt19937 rng{kSeed};
  int level(int lo = 3, int hi = 9) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  long long integer(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  cplx point(double ymax = 0.6) { return {real(-1.0, 1.0), real(-ymax, ymax)}; }
  std::pair<long long, long long> coprime(long long bound) {
    while (true) {
      const long long p = integer(-bound, bound);
      const long long q = integer(-bound, bound);
      if (gcd2(p, q) == 1) return {p, q};
    }
  }
  MCGWord word(int max_len) {
    MCGWord w;
    const int len = static_cast<int>(integer(0, max_len));
    for (int i = 0; i < len; ++i) w.letters.push_back(static_cast<Generator>(integer(0, 3)));
    return w;
  }
};

// Action of a mapping class on curve coordinates (p, q), matching
// S^-1 C(p,q) S = C(-q,p) and T^-1 C(p,q) T = C(p,q+p).
std::pair<long long, long long> act(const MCGWord& w, std::pair<long long, long long> pq) {
  // rho(g1...gn)^-1 C rho(g1...gn) = gn^-1 ... g1^-1 C g1 ... gn, so apply g1 first.
  for (Generator g : w.letters) {
    auto [p, q] = pq;
    switch (g) {
      case Generator::S: pq = {-q, p}; break;
      case Generator::SInv: pq = {q, -p}; break;
      case Generator::T: pq = {p, q + p}; break;
      case Generator::TInv: pq = {p, q - p}; break;
    }
  }
  return pq;
}

}  // namespace

TEST(Property, QuantumIntegerSymmetries) {
  Gen g;
  for (int i = 0; i < kCases; ++i) {
    const Level lvl{g.level(2, 30)};
    const long long n = g.integer(-100000, 100000);
    SCOPED_TRACE(::testing::Message() << "seed " << kSeed << " r=" << lvl.r() << " n=" << n);
    EXPECT_EQ(quantum_integer(-n, lvl), -quantum_integer(n, lvl));
    EXPECT_EQ(quantum_integer(n + 2LL * lvl.r() * g.integer(-50, 50), lvl), quantum_integer(n, lvl));
    // [n+1] + [n-1] = [2][n]
    EXPECT_NEAR(quantum_integer(n + 1, lvl) + quantum_integer(n - 1, lvl),
                quantum_integer(2, lvl) * quantum_integer(n, lvl), 1e-12 * lvl.r());
  }
}

TEST(Property, ChebyshevComposition) {
  Gen g;
  for (int i = 0; i < kCases; ++i) {
    const int m = static_cast<int>(g.integer(0, 8));
    const int n = static_cast<int>(g.integer(0, 8));
    const double x = g.real(-2.0, 2.0);
    const double tn = chebyshev_T(n, x);
    EXPECT_NEAR(chebyshev_T(m, tn), chebyshev_T(m * n, x), 1e-8) << m << " " << n << " " << x;
  }
}

TEST(Property, ObservablesHermitianWithPredictedSpectrum) {
  Gen g;
  for (int i = 0; i < kCases; ++i) {
    const Level lvl{g.level()};
    const long long p = g.integer(-40, 40);
    const long long q = g.integer(-40, 40);
    const CMatrix c = c_matrix(p, q, lvl).mat;
    EXPECT_LT(max_abs(c - c.adjoint()), 1e-13);
    const auto a = spectrum(p, q, lvl);
    const auto b = predicted_spectrum(p, q, lvl);
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_NEAR(a[k], b[k], 1e-9) << p << "," << q << " r=" << lvl.r();
  }
}

TEST(Property, MultipleCurvesAreChebyshevPolynomials) {
  Gen g;
  for (int i = 0; i < kCases / 2; ++i) {
    const Level lvl{g.level()};
    const auto [p, q] = g.coprime(6);
    const int n = static_cast<int>(g.integer(0, 12));
    EXPECT_LT(max_abs(c_matrix(n * p, n * q, lvl).mat - chebyshev_T(n, c_matrix(p, q, lvl).mat)), 1e-9);
    if (n >= 1) {
      const CMatrix diff = colored_curve(n + 1, p, q, lvl).mat - colored_curve(n - 1, p, q, lvl).mat;
      EXPECT_LT(max_abs(c_matrix(n * p, n * q, lvl).mat - diff), 1e-9);
    }
  }
}

TEST(Property, ProductToSum) {
  // C(p,q) C(a,b) = t^{pb-qa} C(p+a,q+b) + t^{-(pb-qa)} C(p-a,q-b)
  Gen g;
  for (int i = 0; i < kCases; ++i) {
    const Level lvl{g.level()};
    const long long p = g.integer(-9, 9), q = g.integer(-9, 9), a = g.integer(-9, 9), b = g.integer(-9, 9);
    const long long e = p * b - q * a;
    const CMatrix lhs = c_matrix(p, q, lvl).mat * c_matrix(a, b, lvl).mat;
    const CMatrix rhs = lvl.t_pow(e) * c_matrix(p + a, q + b, lvl).mat + lvl.t_pow(-e) * c_matrix(p - a, q - b, lvl).mat;
    EXPECT_LT(max_abs(lhs - rhs), 1e-12);
  }
}

TEST(Property, MappingClassesPermuteObservables) {
  Gen g;
  for (int i = 0; i < kCases / 2; ++i) {
    const Level lvl{g.level(3, 7)};
    const MCGWord w = g.word(6);
    const long long p = g.integer(-6, 6);
    const long long q = g.integer(-6, 6);
    const CMatrix m = rho(w, lvl);
    const CMatrix conj = m.partialPivLu().solve(c_matrix(p, q, lvl).mat * m);
    const auto [p2, q2] = act(w, {p, q});
    EXPECT_LT(max_abs(conj - c_matrix(p2, q2, lvl).mat), 1e-9) << w.str() << " (" << p << "," << q << ")";
  }
}

TEST(Property, WordTimesInverseIsIdentity) {
  Gen g;
  for (int i = 0; i < kCases / 2; ++i) {
    const Level lvl{g.level(3, 8)};
    const MCGWord w = g.word(8);
    MCGWord inv;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      switch (*it) {
        case Generator::S: inv.letters.push_back(Generator::SInv); break;
        case Generator::SInv: inv.letters.push_back(Generator::S); break;
        case Generator::T: inv.letters.push_back(Generator::TInv); break;
        case Generator::TInv: inv.letters.push_back(Generator::T); break;
      }
    }
    const CMatrix prod = rho(w, lvl) * rho(inv, lvl);
    EXPECT_LT(max_abs(prod - CMatrix::Identity(lvl.dim(), lvl.dim())), 1e-10) << w.str();
  }
}

TEST(Property, ThetaSeriesAgreeAndTransformCorrectly) {
  Gen g;
  for (int i = 0; i < kCases; ++i) {
    const Level lvl{g.level(3, 8)};
    const QuadratureSpec spec = QuadratureSpec::defaults(lvl);
    const long long j = g.integer(-3 * lvl.r(), 3 * lvl.r());
    const cplx z = g.point();
    const cplx d = zeta_defn(j, z, lvl, spec);
    // Terms reach exp(2 pi r y^2); the comparison scale accounts for that.
    const double scale = std::exp(2.0 * kPi * lvl.r() * z.imag() * z.imag());
    EXPECT_LT(std::abs(d - zeta_gauss(j, z, lvl, spec)), 1e-12 * scale) << "j=" << j << " z=" << z;
    EXPECT_LT(std::abs(zeta_defn(j, -z, lvl, spec) + d), 1e-13 * scale);
    const long long m = g.integer(-3, 3);
    EXPECT_LT(std::abs(zeta_defn(j, z + static_cast<double>(m), lvl, spec) - d), 1e-12 * scale);
  }
}

TEST(Property, SectionsAreOdd) {
  Gen g;
  for (int i = 0; i < kCases / 4; ++i) {
    const Level lvl{g.level(3, 7)};
    const QuadratureSpec spec = QuadratureSpec::defaults(lvl);
    const auto [p, q] = g.coprime(7);
    if (std::abs(p) < 1 || std::abs(q) < 1) continue;
    const StateVector v = z_invariant(KnotSpec::torus(static_cast<int>(p), static_cast<int>(q)), lvl);
    const cplx z = g.point(0.4);
    const cplx plus[] = {z};
    const cplx minus[] = {-z};
    const cplx a = eval_section(v, plus, spec);
    EXPECT_LT(std::abs(eval_section(v, minus, spec) + a), 1e-12 * (1.0 + std::abs(a)));
  }
}
