#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weylq/theta.hpp"
#include "weylq_cli/commands.hpp"

namespace wc = weylq::cli;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kAccuracy = 3 };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl quantization of the SU(2) moduli space of the torus at level r"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(wc::tool_version()));

  std::string level_text = "5";
  std::string format = "json";
  std::optional<double> series_tol;
  std::optional<double> quad_tol;
  std::optional<double> rank_tol;
  app.add_option("--r", level_text, "Level r (verify also accepts lo..hi)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--series-tol", series_tol, "Relative truncation tolerance of lattice sums");
  app.add_option("--quad-tol", quad_tol, "Relative refinement tolerance of quadrature");
  app.add_option("--rank-tol", rank_tol, "Relative singular-value threshold for numerical rank");

  auto* matrices = app.add_subcommand("matrices", "Emit S, T, C(p,q) or V^k(p,q)")->fallthrough();
  std::string op;
  matrices->add_option("--op", op, "S | T | C:p,q | V:k:p,q")->required();

  auto* spectrum = app.add_subcommand("spectrum", "Computed and predicted spectrum of C(p,q)")->fallthrough();
  long long p = 0;
  long long q = 0;
  spectrum->add_option("--p", p)->required();
  spectrum->add_option("--q", q)->required();

  auto* invariant = app.add_subcommand("invariant", "Knot or link invariant as a section")->fallthrough();
  std::string knot;
  std::vector<std::string> points;
  invariant->add_option("--knot", knot, "unknot | torus:p,q | hopf")->required();
  invariant->add_option("--at", points, "Evaluation point re,im (re,im/re,im for links); repeatable");

  auto* basis = app.add_subcommand("basis", "Basis of quantum observables")->fallthrough();

  auto* verify = app.add_subcommand("verify", "Run property suites across levels")->fallthrough();
  std::string suite = "all";
  verify->add_option("--suite", suite, "theta | weyl | mcg | invariants | basis | all");

  auto* word = app.add_subcommand("word", "Matrix of a mapping class group word")->fallthrough();
  word->alias("rho");
  std::string word_text;
  word->add_option("--word", word_text, "Word over S, T, S-, T-")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    wc::Tolerances tol = wc::Tolerances::from_environment();
    if (series_tol) tol.series_tol = *series_tol;
    if (quad_tol) tol.quad_tol = *quad_tol;
    if (rank_tol) tol.rank_tol = *rank_tol;
    tol.validate();

    wc::OutputRecord rec;
    if (verify->parsed()) {
      rec = wc::cmd_verify(wc::LevelRange::parse(level_text), suite, tol);
    } else {
      const wc::LevelRange range = wc::LevelRange::parse(level_text);
      if (range.lo != range.hi) throw std::invalid_argument("a level range is only accepted by verify");
      const weylq::Level lvl{range.lo};
      if (matrices->parsed()) rec = wc::cmd_matrices(lvl, op, tol);
      if (spectrum->parsed()) rec = wc::cmd_spectrum(lvl, p, q, tol);
      if (invariant->parsed()) rec = wc::cmd_invariant(lvl, knot, points, tol);
      if (basis->parsed()) rec = wc::cmd_basis(lvl, tol);
      if (word->parsed()) rec = wc::cmd_word(lvl, word_text, tol);
    }

    std::cout << (format == "csv" ? wc::format_csv(rec) : wc::format_json(rec));
    if (rec.command == "verify" && !rec.payload.at("all_passed").get<bool>()) return kVerifyFailed;
    return kOk;
  } catch (const weylq::AccuracyError& e) {
    std::cerr << "weylq: " << e.what() << "\n";
    return kAccuracy;
  } catch (const std::exception& e) {
    std::cerr << "weylq: " << e.what() << "\n";
    return kBadInput;
  }
}
