#include "weylq/basis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "weylq/numeric.hpp"
#include "weylq/weyl.hpp"

namespace weylq {

BasisIndexSet basis_index_set(Level lvl) {
  const int r = lvl.r();
  BasisIndexSet set{lvl, {}};
  for (int q = 0; q <= r - 2; ++q) set.pairs.emplace_back(0, q);
  for (int p = 1; p <= r - 2; ++p) {
    for (int q = -r + p + 2; q <= r - p - 1; ++q) set.pairs.emplace_back(p, q);
  }
  const auto expected = static_cast<std::size_t>(lvl.dim()) * lvl.dim();
  if (set.pairs.size() != expected) {
    throw std::logic_error("basis_index_set: cardinality differs from (r-1)^2");
  }
  return set;
}

std::vector<double> stacked_singular_values(std::span<const CMatrix> mats) {
  if (mats.empty()) return {};
  const Eigen::Index cols = mats.front().size();
  CMatrix stacked(static_cast<Eigen::Index>(mats.size()), cols);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (mats[i].size() != cols) throw std::invalid_argument("stacked_singular_values: shape mismatch");
    for (Eigen::Index a = 0; a < mats[i].rows(); ++a) {
      for (Eigen::Index b = 0; b < mats[i].cols(); ++b) {
        stacked(static_cast<Eigen::Index>(i), a * mats[i].cols() + b) = mats[i](a, b);
      }
    }
  }
  Eigen::JacobiSVD<CMatrix> svd(stacked);
  const auto& sv = svd.singularValues();
  return {sv.data(), sv.data() + sv.size()};
}

int numerical_rank(std::span<const CMatrix> mats, double rel_tol) {
  const std::vector<double> sv = stacked_singular_values(mats);
  if (sv.empty() || sv.front() == 0.0) return 0;
  return static_cast<int>(
      std::count_if(sv.begin(), sv.end(), [&](double s) { return s > rel_tol * sv.front(); }));
}

namespace {

std::vector<CMatrix> basis_matrices(const BasisIndexSet& set) {
  std::vector<CMatrix> mats;
  mats.reserve(set.pairs.size());
  for (const auto& [p, q] : set.pairs) mats.push_back(c_matrix(p, q, set.lvl).mat);
  return mats;
}

}  // namespace

SpanningReport verify_spanning(Level lvl, double rank_tol) {
  const std::vector<CMatrix> mats = basis_matrices(basis_index_set(lvl));
  const std::vector<double> sv = stacked_singular_values(mats);
  SpanningReport report;
  report.target = lvl.dim() * lvl.dim();
  report.sigma_max = sv.front();
  report.sigma_min = sv.back();
  report.rank = static_cast<int>(
      std::count_if(sv.begin(), sv.end(), [&](double s) { return s > rank_tol * sv.front(); }));
  report.passed = report.rank == report.target;
  return report;
}

std::vector<int> leave_one_out_ranks(Level lvl, double rank_tol) {
  const std::vector<CMatrix> mats = basis_matrices(basis_index_set(lvl));
  std::vector<int> ranks;
  for (std::size_t drop = 0; drop < mats.size(); ++drop) {
    std::vector<CMatrix> rest;
    for (std::size_t i = 0; i < mats.size(); ++i) {
      if (i != drop) rest.push_back(mats[i]);
    }
    ranks.push_back(numerical_rank(rest, rank_tol));
  }
  return ranks;
}

DiagonalSpanReport diagonal_span_check(Level lvl) {
  const int r = lvl.r();
  const int d = lvl.dim();
  Eigen::MatrixXd cosines(d, d);
  for (int q = 0; q < d; ++q) {
    for (int m = 1; m <= d; ++m) cosines(q, m - 1) = std::cos(q * m * kPi / r);
  }
  double product = 1.0;
  for (int j = 1; j <= d; ++j) {
    for (int k = 1; k < j; ++k) product *= std::cos(j * kPi / r) - std::cos(k * kPi / r);
  }
  DiagonalSpanReport report;
  report.determinant = cosines.determinant();
  report.product_formula_uncorrected = std::ldexp(product, -(r - 1));
  report.product_formula = std::ldexp(product, -(r - 1) + 1 + (r - 1) * (r - 2) / 2);
  report.relative_gap =
      std::abs(report.determinant - report.product_formula) / std::abs(report.product_formula);
  return report;
}

std::string ColoredCurveOp::label() const {
  if (is_identity()) return "identity";
  return "V^" + std::to_string(color) + "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

CorollaryLists corollary_r5(double rank_tol) {
  const Level lvl{5};
  CorollaryLists out;
  out.colored = {{1, 0, 1},  {2, 0, 1}, {3, 0, 1}, {4, 0, 1}, {2, 1, -2}, {2, 1, -1},
                 {2, 1, 0},  {2, 1, 1}, {2, 1, 2}, {2, 1, 3}, {2, 2, -1}, {3, 1, 0},
                 {2, 2, 1},  {3, 1, 1}, {4, 1, 0}, {2, 3, 1}};
  out.curves = {{0, 1}, {0, 2}, {0, 3}, {1, -2}, {1, -1}, {1, 0}, {1, 1}, {1, 2},
                {1, 3}, {2, -1}, {2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}};

  std::vector<CMatrix> colored;
  for (const ColoredCurveOp& op : out.colored) {
    colored.push_back(colored_curve(op.color, op.m, op.n, lvl).mat);
  }
  out.colored_rank = numerical_rank(colored, rank_tol);

  std::vector<CMatrix> curves{CMatrix::Identity(lvl.dim(), lvl.dim())};
  for (const auto& [p, q] : out.curves) curves.push_back(c_matrix(p, q, lvl).mat);
  out.curves_rank = numerical_rank(curves, rank_tol);

  for (const auto& [p, q] : basis_index_set(lvl).pairs) {
    const long long n = gcd2(p, q);
    if (n == 0) continue;
    const CMatrix lhs = c_matrix(p, q, lvl).mat;
    const CMatrix rhs = colored_curve(static_cast<int>(n) + 1, p / n, q / n, lvl).mat -
                        colored_curve(static_cast<int>(n) - 1, p / n, q / n, lvl).mat;
    out.relation_residual = std::max(out.relation_residual, max_abs(lhs - rhs));
  }
  return out;
}

std::vector<BasisRecord> basis_records(Level lvl) {
  std::vector<BasisRecord> records;
  for (const auto& [p, q] : basis_index_set(lvl).pairs) {
    BasisRecord rec{p, q, static_cast<int>(gcd2(p, q)), 0, 0, {}};
    if (rec.n == 0) {
      rec.color_description = "2*identity";
    } else {
      rec.p_prime = p / rec.n;
      rec.q_prime = q / rec.n;
      const std::string curve = "(" + std::to_string(rec.p_prime) + "," + std::to_string(rec.q_prime) + ")";
      rec.color_description = "V^" + std::to_string(rec.n + 1) + curve;
      if (rec.n > 1) rec.color_description += " - V^" + std::to_string(rec.n - 1) + curve;
    }
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace weylq
