#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "weylq/numeric.hpp"
#include "weylq/weyl.hpp"

using namespace weylq;

namespace {

std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void expect_multiset_near(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  ASSERT_EQ(a.size(), b.size());
  const auto sa = sorted(a);
  const auto sb = sorted(b);
  for (std::size_t i = 0; i < sa.size(); ++i) EXPECT_NEAR(sa[i], sb[i], tol) << i;
}

}  // namespace

TEST(Gcd, Conventions) {
  EXPECT_EQ(gcd2(0, 0), 0);
  EXPECT_EQ(gcd2(0, -6), 6);
  EXPECT_EQ(gcd2(-4, 6), 2);
  EXPECT_EQ(spectral_gcd(0, 0, Level{5}), 10);
  EXPECT_EQ(spectral_gcd(3, 9, Level{6}), 3);
  EXPECT_EQ(spectral_gcd(4, 8, Level{5}), 2);
}

TEST(CMatrixOp, Examples) {
  const Level r5{5};
  EXPECT_LT(max_abs(c_matrix(0, 0, r5).mat - 2.0 * CMatrix::Identity(4, 4)), 1e-15);

  const Level r4{4};
  CMatrix tri = CMatrix::Zero(3, 3);
  tri(0, 1) = tri(1, 0) = tri(1, 2) = tri(2, 1) = 1.0;
  EXPECT_LT(max_abs(c_matrix(1, 0, r4).mat - tri), 1e-15);

  for (int q = -7; q <= 7; ++q) {
    CMatrix diag = CMatrix::Zero(4, 4);
    for (int m = 1; m <= 4; ++m) diag(m - 1, m - 1) = 2.0 * std::cos(q * m * kPi / 5.0);
    EXPECT_LT(max_abs(c_matrix(0, q, r5).mat - diag), 1e-14) << q;
  }
  const Observable obs = c_matrix(2, -3, r5);
  ASSERT_TRUE(obs.provenance.has_value());
  EXPECT_EQ(*obs.provenance, std::make_pair(2, -3));
}

TEST(CMatrixOp, HermitianAndEven) {
  for (int r = 3; r <= 7; ++r) {
    const Level lvl{r};
    for (int p = -2 * r; p <= 2 * r; ++p) {
      for (int q = -2 * r; q <= 2 * r; q += 3) {
        const CMatrix c = c_matrix(p, q, lvl).mat;
        EXPECT_LT(max_abs(c - c.adjoint()), 1e-14);
        EXPECT_LT(max_abs(c - c_matrix(-p, -q, lvl).mat), 1e-14);
      }
    }
  }
}

TEST(ColoredCurve, LowColorsAndVanishing) {
  const Level lvl{5};
  EXPECT_LT(max_abs(colored_curve(1, 2, 3, lvl).mat - CMatrix::Identity(4, 4)), 1e-15);
  EXPECT_LT(max_abs(colored_curve(2, 2, 3, lvl).mat - c_matrix(2, 3, lvl).mat), 1e-15);
  EXPECT_LT(max_abs(colored_curve(0, 2, 3, lvl).mat), 1e-15);
  EXPECT_LT(max_abs(colored_curve(5, 1, 0, lvl).mat), 1e-12);
  EXPECT_THROW(colored_curve(2, 2, 4, lvl), std::invalid_argument);
  EXPECT_THROW(colored_curve(-1, 1, 0, lvl), std::invalid_argument);
  EXPECT_THROW(colored_curve(3, 0, 0, lvl), std::invalid_argument);
}

TEST(Spectrum, SpecExamples) {
  const Level r4{4};
  expect_multiset_near(spectrum(1, 0, r4), {-std::sqrt(2.0), 0.0, std::sqrt(2.0)}, 1e-12);

  const Level r5{5};
  std::vector<double> expected;
  for (int k = 1; k <= 4; ++k) expected.push_back(2.0 * std::cos(2.0 * k * kPi / 5.0));
  expect_multiset_near(spectrum(2, 4, r5), expected, 1e-12);
  expect_multiset_near(spectrum(10, 0, r5), std::vector<double>(4, 2.0), 1e-12);
  expect_multiset_near(spectrum(0, 0, r5), std::vector<double>(4, 2.0), 1e-12);

  const Level r6{6};
  std::vector<double> g3;
  for (int k = 1; k <= 5; ++k) g3.push_back(2.0 * std::cos(3.0 * k * kPi / 6.0));
  expect_multiset_near(predicted_spectrum(3, 9, r6), g3, 1e-15);
  expect_multiset_near(spectrum(3, 9, r6), g3, 1e-12);
}

TEST(Spectrum, AscendingOrder) {
  const auto s = spectrum(2, 1, Level{7});
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  const auto p = predicted_spectrum(2, 1, Level{7});
  EXPECT_TRUE(std::is_sorted(p.begin(), p.end()));
}

TEST(OperatorKernel, IdentityCaseIsTwiceReproducingKernel) {
  const Level lvl{4};
  const QuadratureSpec spec = QuadratureSpec::defaults(lvl);
  const cplx z{0.21, 0.33};
  const cplx w{0.64, 0.12};
  const cplx k = reproducing_kernel_spectral(z, w, lvl, spec);
  EXPECT_LT(std::abs(c_kernel(0, 0, z, w, lvl, spec) - 2.0 * k), 1e-13 * std::abs(k));
}

TEST(OperatorKernel, ClosedFormIsTwoRTimesDefinition) {
  for (int r = 3; r <= 6; ++r) {
    const Level lvl{r};
    const QuadratureSpec spec = QuadratureSpec::defaults(lvl);
    for (const auto& [p, q] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {2, 3}, {-3, 1}, {4, -2}}) {
      const cplx z{0.27, 0.41};
      const cplx w{0.58, 0.19};
      const cplx def = c_kernel(p, q, z, w, lvl, spec);
      const cplx closed = c_kernel_closed_form(p, q, z, w, lvl, spec);
      EXPECT_LT(std::abs(closed - 2.0 * r * def), 1e-10 * std::abs(closed)) << r << " " << p << "," << q;
    }
  }
}

TEST(OperatorKernel, HolomorphicInZ) {
  // Cauchy-Riemann by fourth-order central differences on a 1e-4 stencil.
  const Level lvl{4};
  const QuadratureSpec spec = QuadratureSpec::defaults(lvl);
  const double h = 1e-4;
  const cplx w{0.58, 0.19};
  for (const cplx z : {cplx{0.3, 0.2}, cplx{0.7, 0.45}}) {
    auto f = [&](cplx u) { return c_kernel(2, 1, u, w, lvl, spec); };
    auto derivative = [&](cplx step) {
      return (-f(z + 2.0 * step) + 8.0 * f(z + step) - 8.0 * f(z - step) + f(z - 2.0 * step)) / (12.0 * h);
    };
    const cplx dx = derivative(h);
    const cplx dy = derivative(cplx{0.0, h});
    // df/dzbar = (dx + i dy) / 2
    EXPECT_LT(std::abs(dx + cplx{0.0, 1.0} * dy) / std::abs(dx), 1e-6);
  }
}

TEST(OperatorKernel, ActsAsTheOperatorUnderQuadrature) {
  // int K(z0, w) zeta_m(w) dmu(w) = (C zeta_m)(z0), with the reproducing
  // constant of the spectral kernel (1).
  const Level lvl{3};
  const QuadratureSpec spec = QuadratureSpec::defaults(lvl);
  const cplx z0{0.23, 0.31};
  const int p = 1;
  const int q = 2;
  std::vector<HoloFn> fs;
  for (int m = 1; m < 3; ++m) fs.emplace_back([=](cplx w) { return zeta_defn(m, w, lvl, spec); });
  fs.emplace_back([=](cplx w) { return std::conj(c_kernel(p, q, z0, w, lvl, spec)); });
  const CMatrix g = quadrature_gram(fs, lvl, spec).gram;
  const CMatrix c = c_matrix(p, q, lvl).mat;
  const CVector zeta = zeta_vector(z0, lvl, spec);
  for (int m = 1; m < 3; ++m) {
    const cplx expected = (zeta.array() * c.col(m - 1).array()).sum();
    EXPECT_LT(std::abs(g(m - 1, 2) - expected), 1e-9 * std::abs(expected)) << m;
  }
}
