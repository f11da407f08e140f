#include "weylq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "weylq/basis.hpp"
#include "weylq/invariants.hpp"
#include "weylq/mcg.hpp"
#include "weylq/numeric.hpp"
#include "weylq/weyl.hpp"

namespace weylq {

QuadratureSpec VerifyOptions::spec_for(Level lvl) const {
  QuadratureSpec spec = QuadratureSpec::defaults(lvl);
  if (series_tol > 0.0) spec.series_tol = series_tol;
  if (refine_tol > 0.0) spec.refine_tol = refine_tol;
  if (grid_n > 0) spec.grid_n = grid_n;
  spec.validate();
  return spec;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theta", "weyl", "mcg", "invariants", "basis"};
  return names;
}

std::vector<cplx> periodic_grid(int n) {
  std::vector<cplx> grid;
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) grid.emplace_back(static_cast<double>(a) / n, static_cast<double>(b) / n);
  }
  return grid;
}

const std::vector<cplx>& sample_points() {
  static const std::vector<cplx> points{
      {0.13, 0.21}, {0.37, 0.05}, {0.61, 0.44}, {0.82, 0.73}, {0.27, 0.91},
      {0.05, 0.62}, {0.93, 0.17}, {0.44, 0.33}, {0.71, 0.86}, {0.19, 0.58}};
  return points;
}

namespace {

class Recorder {
 public:
  Recorder(std::string suite, int r) : suite_(std::move(suite)), r_(r) {}

  void below(std::string name, double value, double bound) { add(std::move(name), value, bound, true); }
  void above(std::string name, double value, double bound) { add(std::move(name), value, bound, false); }

  std::vector<PropertyResult> take() { return std::move(results_); }

 private:
  void add(std::string name, double value, double bound, bool upper) {
    const bool ok = std::isfinite(value) && (upper ? value < bound : value > bound);
    results_.push_back({suite_, std::move(name), r_, value, bound, upper, ok});
  }

  std::string suite_;
  int r_;
  std::vector<PropertyResult> results_;
};

std::vector<std::pair<int, int>> coprime_pairs(int bound) {
  std::vector<std::pair<int, int>> out;
  for (int p = -bound; p <= bound; ++p) {
    for (int q = -bound; q <= bound; ++q) {
      if (gcd2(p, q) == 1) out.emplace_back(p, q);
    }
  }
  return out;
}

std::vector<PropertyResult> theta_suite(Level lvl, const QuadratureSpec& spec) {
  Recorder rec("theta", lvl.r());
  const int r = lvl.r();

  double agreement = 0.0;
  for (const cplx z : periodic_grid(5)) {
    for (int j = 1; j < r; ++j) {
      const cplx d = zeta_defn(j, z, lvl, spec);
      const cplx g = zeta_gauss(j, z, lvl, spec);
      agreement = std::max(agreement, std::abs(d - g) / (1.0 + std::abs(d)));
    }
  }
  rec.below("two_series_agreement", agreement, 1e-11);

  double periodic = 0.0;
  double odd = 0.0;
  for (const cplx z : sample_points()) {
    for (int j = 1; j < r; ++j) {
      const cplx f = zeta_defn(j, z, lvl, spec);
      const cplx shifted_x = zeta_defn(j, z + 1.0, lvl, spec);
      const cplx shifted_y = zeta_defn(j, z + cplx{0.0, 1.0}, lvl, spec);
      const cplx factor = std::exp(2.0 * r * kPi * (1.0 - cplx{0.0, 2.0} * z));
      periodic = std::max(periodic, std::abs(shifted_x - f) / std::abs(f));
      periodic = std::max(periodic, std::abs(shifted_y - factor * f) / std::abs(factor * f));
      odd = std::max(odd, std::abs(zeta_defn(j, -z, lvl, spec) + f) / (1.0 + std::abs(f)));
    }
  }
  rec.below("quasi_periodicity", periodic, 1e-10);
  rec.below("oddness", odd, 1e-12);

  const CMatrix gram = gram_matrix(lvl, spec);
  const Eigen::VectorXd diag = gram.diagonal().real();
  double off = 0.0;
  for (int i = 0; i < gram.rows(); ++i) {
    for (int k = 0; k < gram.cols(); ++k) {
      if (i != k) off = std::max(off, std::abs(gram(i, k)) / diag.minCoeff());
    }
  }
  rec.below("gram_offdiagonal_ratio", off, 1e-9);
  rec.below("gram_diagonal_spread", (diag.maxCoeff() - diag.minCoeff()) / diag.maxCoeff(), 1e-9);

  double folding = 0.0;
  const cplx z = sample_points()[2];
  for (long long j = -4LL * r; j <= 4LL * r; ++j) {
    const FoldedIndex f = fold_index(j, lvl);
    const cplx direct = zeta_defn(j, z, lvl, spec);
    const cplx folded = f.sign == 0 ? cplx{0.0, 0.0} : static_cast<double>(f.sign) * zeta_defn(f.index, z, lvl, spec);
    folding = std::max(folding, std::abs(direct - folded) / (1.0 + std::abs(folded)));
  }
  rec.below("fold_consistency", folding, 1e-12);
  return rec.take();
}

std::vector<PropertyResult> weyl_suite(Level lvl, const QuadratureSpec& spec) {
  Recorder rec("weyl", lvl.r());
  const int r = lvl.r();

  double composition = 0.0;
  for (const auto& [p, q] : coprime_pairs(3)) {
    const CMatrix base = c_matrix(p, q, lvl).mat;
    for (int n = 0; n <= 6; ++n) {
      composition = std::max(composition, max_abs(c_matrix(n * p, n * q, lvl).mat - chebyshev_T(n, base)));
    }
  }
  rec.below("chebyshev_composition", composition, 1e-10);

  double spec_gap = 0.0;
  double even = 0.0;
  for (int p = -2 * r; p <= 2 * r; ++p) {
    for (int q = -2 * r; q <= 2 * r; ++q) {
      const auto computed = spectrum(p, q, lvl);
      const auto predicted = predicted_spectrum(p, q, lvl);
      for (std::size_t i = 0; i < computed.size(); ++i) {
        spec_gap = std::max(spec_gap, std::abs(computed[i] - predicted[i]));
      }
      even = std::max(even, max_abs(c_matrix(-p, -q, lvl).mat - c_matrix(p, q, lvl).mat));
    }
  }
  rec.below("spectrum_matches_prediction", spec_gap, 1e-9);
  rec.below("even_symbol", even, 1e-12);

  double vanishing = 0.0;
  for (const auto& [p, q] : coprime_pairs(r)) {
    vanishing = std::max(vanishing, max_abs(colored_curve(r, p, q, lvl).mat));
  }
  rec.below("r_color_vanishing", vanishing, 1e-10);

  // <f, g> = g^H G f with G the quadrature Gram matrix.
  const CMatrix gram = gram_matrix(lvl, spec);
  std::mt19937 rng(20240611u + static_cast<unsigned>(r));
  std::normal_distribution<double> normal;
  auto random_vector = [&] {
    CVector v(lvl.dim());
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = {normal(rng), normal(rng)};
    return v;
  };
  double adjoint = 0.0;
  for (int trial = 0; trial < 12; ++trial) {
    const int p = trial % 3 - 1 + trial / 4;
    const int q = (trial * 5) % 7 - 3;
    const CMatrix c = c_matrix(p, q, lvl).mat;
    const CVector f = random_vector();
    const CVector g = random_vector();
    const cplx lhs = g.dot(gram * (c * f));
    const cplx rhs = (c * g).dot(gram * f);
    adjoint = std::max(adjoint, std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs)));
  }
  rec.below("self_adjoint", adjoint, 1e-9);

  double kernel = 0.0;
  const auto& pts = sample_points();
  for (const auto& [p, q] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {2, 3}, {-1, 2}, {3, -4}}) {
    for (int i = 0; i < 3; ++i) {
      const cplx z = pts[i];
      const cplx w = pts[i + 4];
      const cplx definition = c_kernel(p, q, z, w, lvl, spec);
      const cplx closed = c_kernel_closed_form(p, q, z, w, lvl, spec);
      kernel = std::max(kernel, std::abs(closed - 2.0 * r * definition) / std::abs(closed));
    }
  }
  rec.below("kernel_closed_form", kernel, 1e-9);
  return rec.take();
}

std::vector<PropertyResult> mcg_suite(Level lvl, const QuadratureSpec& spec) {
  Recorder rec("mcg", lvl.r());
  const int r = lvl.r();
  const CMatrix s = s_matrix(lvl);
  const CMatrix t = t_matrix(lvl);
  const double x = normalization_X(lvl);
  const CMatrix id = CMatrix::Identity(lvl.dim(), lvl.dim());

  rec.below("reconstruct_S", max_abs(reconstruct_S(lvl) - s), 1e-11);
  rec.below("reconstruct_T", max_abs(reconstruct_T(lvl) - t), 1e-11);
  const CMatrix su = s / x;
  rec.below("s_over_x_unitary", max_abs(su * su.adjoint() - id), 1e-10);
  rec.below("s_squared", max_abs(s * s / (x * x) - id), 1e-10);
  const CMatrix st3 = rho(MCGWord::parse("STSTST"), lvl);
  rec.below("st_cubed_projective", projective_match(st3, s * s).residual, 1e-9);

  double compat = 0.0;
  for (int p = -2 * r; p <= 2 * r; ++p) {
    for (int q = -2 * r; q <= 2 * r; ++q) compat = std::max(compat, compatibility_check(p, q, lvl).max());
  }
  rec.below("compatibility_sweep", compat, 1e-9);

  std::vector<cplx> closed;
  std::vector<cplx> expansion;
  for (int m = 1; m < r; ++m) {
    for (const cplx z : sample_points()) {
      const CVector zeta = zeta_vector(z, lvl, spec);
      cplx sum{0.0, 0.0};
      for (int j = 1; j < r; ++j) sum += quantum_integer(static_cast<long long>(j) * m, lvl) * zeta(j - 1);
      closed.push_back(s_action_closed_form(m, z, lvl, spec));
      expansion.push_back(sum);
    }
  }
  rec.below("s_column_closed_form", fit_scalar(closed, expansion).residual, 1e-9);
  return rec.take();
}

std::vector<PropertyResult> invariants_suite(Level lvl, const QuadratureSpec& spec) {
  Recorder rec("invariants", lvl.r());
  const auto& pts = sample_points();

  std::vector<cplx> gaussian;
  std::vector<cplx> expansion;
  double odd = 0.0;
  for (const KnotSpec& knot : {KnotSpec::unknot(), KnotSpec::torus(2, 3), KnotSpec::torus(2, 5),
                               KnotSpec::torus(3, 4)}) {
    const StateVector v = z_invariant(knot, lvl);
    if (v.coeffs.norm() < 1e-12) continue;
    for (const cplx z : pts) {
      const cplx here[] = {z};
      const cplx there[] = {-z};
      const cplx value = eval_section(v, here, spec);
      gaussian.push_back(section_gaussian_form(knot, z, lvl, spec));
      expansion.push_back(value);
      odd = std::max(odd, std::abs(eval_section(v, there, spec) + value) / (1.0 + std::abs(value)));
    }
  }
  rec.below("prop3_consistency", fit_scalar(gaussian, expansion).residual, 1e-9);

  std::vector<cplx> unknot_closed;
  std::vector<cplx> unknot_expansion;
  const StateVector unknot = z_invariant(KnotSpec::unknot(), lvl);
  for (const cplx z : pts) {
    const cplx here[] = {z};
    unknot_closed.push_back(unknot_closed_form(z, lvl, spec));
    unknot_expansion.push_back(eval_section(unknot, here, spec));
  }
  rec.below("unknot_equals_s_action", fit_scalar(unknot_closed, unknot_expansion).residual, 1e-9);

  std::vector<cplx> hopf_closed;
  std::vector<cplx> hopf_expansion;
  const StateVector hopf = z_invariant(KnotSpec::hopf(), lvl);
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) {
      const cplx zw[] = {pts[i], pts[k + 5]};
      const cplx flipped[] = {pts[i], -pts[k + 5]};
      const cplx value = eval_section(hopf, zw, spec);
      hopf_closed.push_back(hopf_closed_form(zw[0], zw[1], lvl, spec));
      hopf_expansion.push_back(value);
      odd = std::max(odd, std::abs(eval_section(hopf, flipped, spec) + value) / (1.0 + std::abs(value)));
    }
  }
  rec.below("hopf_closed_form", fit_scalar(hopf_closed, hopf_expansion).residual, 1e-9);
  rec.below("section_oddness", odd, 1e-10);
  return rec.take();
}

std::vector<PropertyResult> basis_suite(Level lvl, const VerifyOptions& opts) {
  Recorder rec("basis", lvl.r());
  const BasisIndexSet set = basis_index_set(lvl);
  const double target = static_cast<double>(lvl.dim()) * lvl.dim();
  rec.below("index_set_cardinality_gap", std::abs(static_cast<double>(set.pairs.size()) - target), 0.5);

  const SpanningReport span = verify_spanning(lvl, opts.rank_tol);
  rec.below("spanning_rank_deficit", span.target - span.rank, 0.5);
  rec.above("spanning_condition_ratio", span.condition_ratio(), 1e-6);

  double relation = 0.0;
  for (const auto& [pp, qq] : coprime_pairs(4)) {
    for (int n = 1; n <= lvl.r(); ++n) {
      const CMatrix lhs = c_matrix(n * pp, n * qq, lvl).mat;
      const CMatrix rhs = colored_curve(n + 1, pp, qq, lvl).mat - colored_curve(n - 1, pp, qq, lvl).mat;
      relation = std::max(relation, max_abs(lhs - rhs));
    }
  }
  rec.below("colored_relation", relation, 1e-10);

  const DiagonalSpanReport diag = diagonal_span_check(lvl);
  rec.below("diagonal_determinant_formula", diag.relative_gap, 1e-10);
  rec.above("diagonal_determinant_magnitude", std::abs(diag.determinant), 1e-12);

  if (lvl.r() == 5) {
    const CorollaryLists lists = corollary_r5(opts.rank_tol);
    rec.below("corollary_colored_rank_deficit", 16.0 - lists.colored_rank, 0.5);
    rec.below("corollary_curves_rank_deficit", 16.0 - lists.curves_rank, 0.5);
  }
  return rec.take();
}

}  // namespace

std::vector<PropertyResult> run_suite(std::string_view suite, Level lvl, const VerifyOptions& opts) {
  const QuadratureSpec spec = opts.spec_for(lvl);
  if (suite == "all") {
    std::vector<PropertyResult> all;
    for (const std::string& name : suite_names()) {
      auto part = run_suite(name, lvl, opts);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  if (suite == "theta") return theta_suite(lvl, spec);
  if (suite == "weyl") return weyl_suite(lvl, spec);
  if (suite == "mcg") return mcg_suite(lvl, spec);
  if (suite == "invariants") return invariants_suite(lvl, spec);
  if (suite == "basis") return basis_suite(lvl, opts);
  throw std::invalid_argument("unknown suite '" + std::string(suite) +
                              "' (expected theta, weyl, mcg, invariants, basis or all)");
}

}  // namespace weylq
