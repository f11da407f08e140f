#pragma once

// Bases of the (r-1)^2-dimensional space of quantum observables made of
// the operators C(p,q), and their colored-curve descriptions.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "weylq/qarith.hpp"

namespace weylq {

struct BasisIndexSet {
  Level lvl;
  /// Lexicographic by (p, q).
  std::vector<std::pair<int, int>> pairs;
};

/// {(0, q) : 0 <= q <= r-2} u {(p, q) : 1 <= p <= r-2, -r+p+2 <= q <= r-p-1}.
/// Throws std::logic_error if the count differs from (r-1)^2.
BasisIndexSet basis_index_set(Level lvl);

/// Singular values of the matrix whose rows are the row-major
/// vectorizations of mats, descending.
std::vector<double> stacked_singular_values(std::span<const CMatrix> mats);

/// Number of singular values above rel_tol * sigma_max.
int numerical_rank(std::span<const CMatrix> mats, double rel_tol);

struct SpanningReport {
  int rank = 0;
  int target = 0;
  double sigma_max = 0.0;
  double sigma_min = 0.0;
  bool passed = false;

  double condition_ratio() const { return sigma_max > 0.0 ? sigma_min / sigma_max : 0.0; }
};

/// Rank of {C(p,q)} over basis_index_set against (r-1)^2.
SpanningReport verify_spanning(Level lvl, double rank_tol = 1e-8);

/// Rank after dropping each basis element in turn, in basis order.
std::vector<int> leave_one_out_ranks(Level lvl, double rank_tol = 1e-8);

struct DiagonalSpanReport {
  double determinant = 0.0;  ///< det(cos(q m pi / r)), q = 0..r-2, m = 1..r-1
  /// 2^{-(r-1)} * 2^{1 + (r-1)(r-2)/2} * prod_{k<j} (cos(j pi/r) - cos(k pi/r)).
  double product_formula = 0.0;
  /// The same product with only the 2^{-(r-1)} prefactor.
  double product_formula_uncorrected = 0.0;
  double relative_gap = 0.0;  ///< |determinant - product_formula| / |product_formula|
};

DiagonalSpanReport diagonal_span_check(Level lvl);

/// V^color(m, n); color 1 is the identity.
struct ColoredCurveOp {
  int color = 1;
  int m = 0;
  int n = 1;

  bool is_identity() const { return color == 1; }
  std::string label() const;
  friend bool operator==(const ColoredCurveOp&, const ColoredCurveOp&) = default;
};

struct CorollaryLists {
  /// Identity followed by the fifteen colored curves.
  std::vector<ColoredCurveOp> colored;
  /// Fifteen curves (multiples allowed, (4,2) = twice (2,1)); identity implicit.
  std::vector<std::pair<int, int>> curves;
  int colored_rank = 0;
  int curves_rank = 0;
  /// max |C(p,q) - (V^{n+1} - V^{n-1})| over the theorem basis at r = 5.
  double relation_residual = 0.0;
};

/// The two r = 5 lists, with their ranks verified numerically.
CorollaryLists corollary_r5(double rank_tol = 1e-8);

/// Colored-curve description of one basis element C(p,q).
struct BasisRecord {
  int p = 0;
  int q = 0;
  int n = 0;       ///< gcd(p, q); 0 for (0, 0)
  int p_prime = 0;
  int q_prime = 0;
  std::string color_description;
};

std::vector<BasisRecord> basis_records(Level lvl);

}  // namespace weylq
