#include "weylq_cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "weylq/basis.hpp"
#include "weylq/invariants.hpp"
#include "weylq/mcg.hpp"
#include "weylq/verify.hpp"
#include "weylq/weyl.hpp"

namespace weylq::cli {

namespace {

long long parse_integer(std::string_view s, std::string_view what) {
  long long value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return value;
}

double parse_real(std::string_view s) {
  const std::string text(s);
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(value)) {
    throw std::invalid_argument("malformed real number: '" + text + "'");
  }
  return value;
}

std::pair<long long, long long> parse_pair(std::string_view s, std::string_view what) {
  const auto comma = s.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("malformed " + std::string(what) + ": expected p,q, got '" + std::string(s) + "'");
  }
  return {parse_integer(s.substr(0, comma), what), parse_integer(s.substr(comma + 1), what)};
}

QuadratureSpec spec_from(Level lvl, const Tolerances& tol) {
  QuadratureSpec spec = QuadratureSpec::defaults(lvl);
  spec.series_tol = tol.series_tol;
  spec.refine_tol = tol.quad_tol;
  spec.validate();
  return spec;
}

OutputRecord make_record(std::string command, Level lvl, json payload, const Tolerances& tol) {
  return {std::move(command), lvl.r(), std::move(payload), metadata_for(tol)};
}

json real_array(const std::vector<double>& values) {
  json out = json::array();
  for (double v : values) out.push_back(v);
  return out;
}

}  // namespace

LevelRange LevelRange::parse(std::string_view text) {
  LevelRange range;
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    range.lo = range.hi = static_cast<int>(parse_integer(text, "level"));
  } else {
    range.lo = static_cast<int>(parse_integer(text.substr(0, dots), "level"));
    range.hi = static_cast<int>(parse_integer(text.substr(dots + 2), "level"));
  }
  if (range.lo < 2 || range.hi < range.lo) {
    throw std::invalid_argument("level range must satisfy 2 <= lo <= hi, got '" + std::string(text) + "'");
  }
  return range;
}

std::vector<cplx> parse_points(std::string_view text) {
  std::vector<cplx> points;
  while (true) {
    const auto slash = text.find('/');
    const std::string_view item = text.substr(0, slash);
    const auto comma = item.find(',');
    if (comma == std::string_view::npos) {
      throw std::invalid_argument("malformed point '" + std::string(item) + "': expected re,im");
    }
    points.emplace_back(parse_real(item.substr(0, comma)), parse_real(item.substr(comma + 1)));
    if (slash == std::string_view::npos) break;
    text = text.substr(slash + 1);
  }
  if (points.size() > 2) throw std::invalid_argument("at most two points per evaluation");
  return points;
}

OutputRecord cmd_matrices(Level lvl, std::string_view op, const Tolerances& tol) {
  CMatrix mat;
  json selector;
  if (op == "S" || op == "s") {
    mat = s_matrix(lvl);
    selector = {{"kind", "S"}};
  } else if (op == "T" || op == "t") {
    mat = t_matrix(lvl);
    selector = {{"kind", "T"}};
  } else if (op.substr(0, 2) == "C:") {
    const auto [p, q] = parse_pair(op.substr(2), "C selector");
    mat = c_matrix(p, q, lvl).mat;
    selector = {{"kind", "C"}, {"p", p}, {"q", q}};
  } else if (op.substr(0, 2) == "V:") {
    const std::string_view rest = op.substr(2);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("malformed V selector: expected V:k:p,q");
    const long long k = parse_integer(rest.substr(0, colon), "V color");
    const auto [p, q] = parse_pair(rest.substr(colon + 1), "V selector");
    mat = colored_curve(static_cast<int>(k), p, q, lvl).mat;
    selector = {{"kind", "V"}, {"k", k}, {"p", p}, {"q", q}};
  } else {
    throw std::invalid_argument("unknown operator '" + std::string(op) + "' (expected S, T, C:p,q or V:k:p,q)");
  }
  return make_record("matrices", lvl,
                     {{"op", std::string(op)}, {"selector", selector}, {"rows", mat.rows()},
                      {"cols", mat.cols()}, {"matrix", to_json(mat)}},
                     tol);
}

OutputRecord cmd_spectrum(Level lvl, long long p, long long q, const Tolerances& tol) {
  const std::vector<double> computed = spectrum(p, q, lvl);
  const std::vector<double> predicted = predicted_spectrum(p, q, lvl);
  double deviation = 0.0;
  for (std::size_t i = 0; i < computed.size(); ++i) {
    deviation = std::max(deviation, std::abs(computed[i] - predicted[i]));
  }
  return make_record("spectrum", lvl,
                     {{"p", p},
                      {"q", q},
                      {"gcd", spectral_gcd(p, q, lvl)},
                      {"computed", real_array(computed)},
                      {"predicted", real_array(predicted)},
                      {"max_deviation", deviation}},
                     tol);
}

OutputRecord cmd_invariant(Level lvl, std::string_view knot_text, const std::vector<std::string>& points,
                           const Tolerances& tol) {
  const KnotSpec knot = KnotSpec::parse(knot_text);
  const StateVector v = z_invariant(knot, lvl);
  const QuadratureSpec spec = spec_from(lvl, tol);
  json payload{{"knot", knot.str()}, {"degenerate", knot.degenerate()}, {"rank", v.rank}};
  if (v.rank == 1) {
    payload["coefficients"] = to_json(CVector(v.coeffs.col(0)));
  } else {
    payload["coefficients"] = to_json(v.coeffs);
  }
  json evaluations = json::array();
  for (const std::string& text : points) {
    const std::vector<cplx> at = parse_points(text);
    json pts = json::array();
    for (cplx z : at) pts.push_back(to_json(z));
    evaluations.push_back({{"points", pts}, {"value", to_json(eval_section(v, at, spec))}});
  }
  payload["evaluations"] = evaluations;
  return make_record("invariant", lvl, std::move(payload), tol);
}

OutputRecord cmd_basis(Level lvl, const Tolerances& tol) {
  json records = json::array();
  for (const BasisRecord& rec : basis_records(lvl)) {
    records.push_back({{"p", rec.p},
                       {"q", rec.q},
                       {"n", rec.n},
                       {"p_prime", rec.p_prime},
                       {"q_prime", rec.q_prime},
                       {"colored", rec.color_description}});
  }
  const SpanningReport span = verify_spanning(lvl, tol.rank_tol);
  json payload{{"count", records.size()},
               {"records", records},
               {"spanning",
                {{"rank", span.rank},
                 {"target", span.target},
                 {"sigma_max", span.sigma_max},
                 {"sigma_min", span.sigma_min},
                 {"passed", span.passed}}}};
  if (lvl.r() == 5) {
    const CorollaryLists lists = corollary_r5(tol.rank_tol);
    json colored = json::array();
    for (const ColoredCurveOp& op : lists.colored) colored.push_back(op.label());
    json curves = json::array();
    for (const auto& [p, q] : lists.curves) curves.push_back(json::array({p, q}));
    payload["corollary"] = {{"colored", colored},
                            {"colored_rank", lists.colored_rank},
                            {"curves", curves},
                            {"curves_rank", lists.curves_rank}};
  }
  return make_record("basis", lvl, std::move(payload), tol);
}

OutputRecord cmd_verify(LevelRange range, std::string_view suite, const Tolerances& tol) {
  if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw std::invalid_argument("unknown suite '" + std::string(suite) +
                                "' (expected theta, weyl, mcg, invariants, basis or all)");
  }
  VerifyOptions opts;
  opts.series_tol = tol.series_tol;
  opts.refine_tol = tol.quad_tol;
  opts.rank_tol = tol.rank_tol;
  json results = json::array();
  bool all_passed = true;
  for (int r = range.lo; r <= range.hi; ++r) {
    for (const PropertyResult& res : run_suite(suite, Level{r}, opts)) {
      all_passed = all_passed && res.passed;
      results.push_back({{"suite", res.suite},
                         {"property", res.name},
                         {"r", res.r},
                         {"value", res.value},
                         {"bound", res.bound},
                         {"relation", res.upper ? "<" : ">"},
                         {"passed", res.passed}});
    }
  }
  return make_record("verify", Level{range.lo},
                     {{"suite", std::string(suite)},
                      {"r_min", range.lo},
                      {"r_max", range.hi},
                      {"results", results},
                      {"all_passed", all_passed}},
                     tol);
}

OutputRecord cmd_word(Level lvl, std::string_view word, const Tolerances& tol) {
  const MCGWord parsed = MCGWord::parse(word);
  const CMatrix mat = rho(parsed, lvl);
  return make_record("word", lvl,
                     {{"word", parsed.str()}, {"length", parsed.letters.size()}, {"matrix", to_json(mat)}}, tol);
}

}  // namespace weylq::cli
