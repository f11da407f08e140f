#include <cmath>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include "weylq/invariants.hpp"
#include "weylq/mcg.hpp"
#include "weylq/numeric.hpp"

using namespace weylq;
using boost::multiprecision::cpp_bin_float_50;

namespace {

// J(K_{p,q}, j) re-summed in 50-digit arithmetic. t^e = exp(i e pi / 2r)
// and t^2 - t^-2 = 2i sin(pi/r).
cplx jones_oracle(int p, int q, int j, int r) {
  const cpp_bin_float_50 pi = boost::math::constants::pi<cpp_bin_float_50>();
  const cpp_bin_float_50 s1 = sin(pi / r);
  auto qint = [&](long long n) { return cpp_bin_float_50(sin(pi * n / r) / s1); };
  cpp_bin_float_50 re = 0;
  cpp_bin_float_50 im = 0;
  for (long long k = j % 2; k <= j; k += 2) {
    const cpp_bin_float_50 bracket = qint(k * p + k * q + 1) - qint(k * p - k * q + 1);
    const cpp_bin_float_50 angle = -pi * (static_cast<long long>(p) * q * k * k) / (2 * r);
    re += cos(angle) * bracket;
    im += sin(angle) * bracket;
  }
  // (re + i im) / (2 i s1) = (im - i re) / (2 s1)
  const cpp_bin_float_50 denom = 2 * s1;
  return {static_cast<double>(im / denom), static_cast<double>(-re / denom)};
}

const std::vector<cplx> kPoints{{0.13, 0.21}, {0.37, 0.05}, {0.61, 0.44}, {0.82, 0.73}, {0.27, 0.91},
                                {0.05, 0.62}, {0.93, 0.17}, {0.44, 0.33}, {0.71, 0.86}, {0.19, 0.58}};

}  // namespace

TEST(KnotSpecTest, Parse) {
  EXPECT_EQ(KnotSpec::parse("unknot").kind, KnotSpec::Kind::Unknot);
  EXPECT_EQ(KnotSpec::parse("hopf").kind, KnotSpec::Kind::Hopf);
  const KnotSpec k = KnotSpec::parse("torus:2,-3");
  EXPECT_EQ(k.kind, KnotSpec::Kind::Torus);
  EXPECT_EQ(k.p, 2);
  EXPECT_EQ(k.q, -3);
  EXPECT_EQ(k.str(), "torus:2,-3");
  EXPECT_FALSE(k.degenerate());
  EXPECT_TRUE(KnotSpec::parse("torus:1,5").degenerate());
  for (const char* bad : {"torus:2,4", "torus:0,1", "torus:2", "torus:a,3", "torus:2,3x", "trefoil", ""}) {
    EXPECT_THROW(KnotSpec::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(Jones, FrozenReferenceValues) {
  // J(K_{2,3}, j) at r = 5 (mpmath, 40 digits).
  const cplx expected[] = {{0.80901699437494742410, -0.26286555605956680301},
                           {-1.6180339887498948482, -0.52573111211913360603},
                           {1.3090169943749474241, -0.10040570794311363993},
                           {0.5, -1.2139220723547203751}};
  const Level lvl{5};
  for (int j = 1; j <= 4; ++j) EXPECT_LT(std::abs(jones_torus(2, 3, j, lvl) - expected[j - 1]), 1e-14) << j;
}

TEST(Jones, HighPrecisionResummation) {
  for (const auto& [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}, {-2, 3}, {3, 7}}) {
    for (int r = 3; r <= 9; ++r) {
      for (int j = 1; j < r; ++j) {
        EXPECT_LT(std::abs(jones_torus(p, q, j, Level{r}) - jones_oracle(p, q, j, r)), 1e-13)
            << p << "," << q << " r=" << r << " j=" << j;
      }
    }
  }
}

TEST(Jones, ColorOneIsTheSingleOddTerm) {
  const Level lvl{5};
  const cplx single = lvl.t_pow(-6) * quantum_integer(6, lvl) / (lvl.t_pow(2) - lvl.t_pow(-2));
  EXPECT_LT(std::abs(jones_torus(2, 3, 1, lvl) - single), 1e-15);
}

TEST(Jones, UnknotAndErrors) {
  const Level lvl{6};
  for (int j = 1; j < 6; ++j) EXPECT_EQ(jones(KnotSpec::unknot(), j, lvl), cplx(quantum_integer(j, lvl), 0.0));
  EXPECT_THROW(jones(KnotSpec::hopf(), 1, lvl), std::invalid_argument);
  EXPECT_THROW(jones_torus(2, 4, 1, lvl), std::invalid_argument);
  EXPECT_THROW(jones_torus(2, 3, 0, lvl), std::invalid_argument);
  EXPECT_THROW(jones_torus(2, 3, 6, lvl), std::invalid_argument);
}

TEST(ZInvariant, Coefficients) {
  const Level lvl{5};
  const double x = normalization_X(lvl);
  const CMatrix s = s_matrix(lvl);
  const StateVector u = z_invariant(KnotSpec::unknot(), lvl);
  EXPECT_EQ(u.rank, 1);
  EXPECT_LT(max_abs(u.coeffs - s.col(0) / x), 1e-15);
  const StateVector h = z_invariant(KnotSpec::hopf(), lvl);
  EXPECT_EQ(h.rank, 2);
  EXPECT_LT(max_abs(h.coeffs - s / x), 1e-15);
  const StateVector t = z_invariant(KnotSpec::torus(2, 3), lvl);
  for (int j = 1; j < 5; ++j) EXPECT_LT(std::abs(t.coeffs(j - 1, 0) - jones_torus(2, 3, j, lvl) / x), 1e-15);
}

TEST(StateVectorTest, Validation) {
  const Level lvl{4};
  EXPECT_THROW((StateVector{lvl, 1, CMatrix::Zero(2, 1)}).validate(), std::invalid_argument);
  EXPECT_THROW((StateVector{lvl, 2, CMatrix::Zero(3, 1)}).validate(), std::invalid_argument);
  EXPECT_THROW((StateVector{lvl, 3, CMatrix::Zero(3, 3)}).validate(), std::invalid_argument);
  CMatrix bad = CMatrix::Zero(3, 1);
  bad(1, 0) = std::nan("");
  EXPECT_THROW((StateVector{lvl, 1, bad}).validate(), std::invalid_argument);
  const QuadratureSpec spec = QuadratureSpec::defaults(lvl);
  const cplx two[] = {0.1, 0.2};
  EXPECT_THROW(eval_section(z_invariant(KnotSpec::unknot(), lvl), two, spec), std::invalid_argument);
  const cplx one[] = {0.1};
  EXPECT_THROW(eval_section(z_invariant(KnotSpec::hopf(), lvl), one, spec), std::invalid_argument);
}

TEST(EvalSection, VanishesAtOrigin) {
  const Level lvl{5};
  const QuadratureSpec spec = QuadratureSpec::defaults(lvl);
  const cplx origin[] = {0.0};
  for (const char* k : {"unknot", "torus:2,3", "torus:3,4"}) {
    EXPECT_LT(std::abs(eval_section(z_invariant(KnotSpec::parse(k), lvl), origin, spec)), 1e-14) << k;
  }
}

TEST(EvalSection, UnknotMatchesClosedForm) {
  for (int r = 3; r <= 6; ++r) {
    const Level lvl{r};
    const QuadratureSpec spec = QuadratureSpec::defaults(lvl);
    const StateVector v = z_invariant(KnotSpec::unknot(), lvl);
    std::vector<cplx> closed, expansion;
    for (const cplx z : kPoints) {
      const cplx at[] = {z};
      closed.push_back(unknot_closed_form(z, lvl, spec));
      expansion.push_back(eval_section(v, at, spec));
    }
    EXPECT_LT(fit_scalar(closed, expansion).residual, 1e-9) << r;
  }
}

TEST(EvalSection, HopfMatchesClosedForm) {
  for (int r = 3; r <= 5; ++r) {
    const Level lvl{r};
    const QuadratureSpec spec = QuadratureSpec::defaults(lvl);
    const StateVector v = z_invariant(KnotSpec::hopf(), lvl);
    std::vector<cplx> closed, expansion;
    for (int i = 0; i < 3; ++i) {
      for (int k = 0; k < 3; ++k) {
        const cplx zw[] = {kPoints[i], kPoints[5 + k]};
        closed.push_back(hopf_closed_form(zw[0], zw[1], lvl, spec));
        expansion.push_back(eval_section(v, zw, spec));
      }
    }
    EXPECT_LT(fit_scalar(closed, expansion).residual, 1e-9) << r;
  }
}

TEST(EvalSection, GaussianFormProportionalToExpansion) {
  for (int r = 3; r <= 7; ++r) {
    const Level lvl{r};
    const QuadratureSpec spec = QuadratureSpec::defaults(lvl);
    std::vector<cplx> gaussian, expansion;
    for (const KnotSpec& knot : {KnotSpec::unknot(), KnotSpec::torus(2, 3), KnotSpec::torus(3, 4)}) {
      const StateVector v = z_invariant(knot, lvl);
      for (const cplx z : kPoints) {
        const cplx at[] = {z};
        const cplx e = eval_section(v, at, spec);
        if (std::abs(e) < 1e-8) continue;
        gaussian.push_back(section_gaussian_form(knot, z, lvl, spec));
        expansion.push_back(e);
      }
    }
    const ScalarFit fit = fit_scalar(gaussian, expansion);
    EXPECT_LT(fit.residual, 1e-9) << r;
    EXPECT_NEAR(std::abs(fit.scale), std::sqrt(2.0 * r), 1e-9);
  }
}

TEST(TorusCoefficients, DirectCoefficientProperties) {
  const Level lvl{5};
  for (int n = -12; n <= 12; ++n) {
    const TorusCoefficient c = torus_coeff_Cn(n, 2, 3, lvl);
    EXPECT_LT(std::abs(c.direct - torus_coeff_Cn(n + 10, 2, 3, lvl).direct), 1e-13);
    if (n % 5 == 0) {
      EXPECT_EQ(c.direct, cplx{});
      EXPECT_FALSE(c.closed_form.has_value());
      EXPECT_FALSE(c.residual.has_value());
    } else {
      ASSERT_TRUE(c.residual.has_value());
      EXPECT_TRUE(std::isfinite(*c.residual));
    }
  }
}

TEST(TorusCoefficients, CosineClosedFormMatchesDirectSum) {
  for (const auto& [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}}) {
    for (int r = 4; r <= 9; ++r) {
      for (int n = 1; n < 2 * r; ++n) {
        if (n % r == 0) continue;
        const TorusCoefficient c = torus_coeff_Cn(n, p, q, Level{r});
        ASSERT_TRUE(c.corrected_residual.has_value());
        EXPECT_LT(*c.corrected_residual, 1e-12) << p << "," << q << " r=" << r << " n=" << n;
      }
    }
  }
}
