#pragma once

// The weylq subcommands as plain functions, so they can be exercised
// without a process boundary. Malformed input throws
// std::invalid_argument.

#include <string>
#include <string_view>
#include <vector>

#include "weylq/qarith.hpp"
#include "weylq_cli/output.hpp"

namespace weylq::cli {

struct LevelRange {
  int lo = 3;
  int hi = 3;
  /// "5" or "3..8".
  static LevelRange parse(std::string_view text);
};

/// "re,im" for one point or "re,im/re,im" for two.
std::vector<cplx> parse_points(std::string_view text);

/// op: "S", "T", "C:p,q" or "V:k:p,q".
OutputRecord cmd_matrices(Level lvl, std::string_view op, const Tolerances& tol);
OutputRecord cmd_spectrum(Level lvl, long long p, long long q, const Tolerances& tol);
/// points: each entry is parsed by parse_points.
OutputRecord cmd_invariant(Level lvl, std::string_view knot, const std::vector<std::string>& points,
                           const Tolerances& tol);
OutputRecord cmd_basis(Level lvl, const Tolerances& tol);
/// payload.all_passed tells whether every property held.
OutputRecord cmd_verify(LevelRange range, std::string_view suite, const Tolerances& tol);
OutputRecord cmd_word(Level lvl, std::string_view word, const Tolerances& tol);

}  // namespace weylq::cli
