// fpdlab: script-driven computation of grade invariants and per-maximal-ideal
// finitistic-dimension checks, with deterministic JSON reports.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fpdlab/script.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "fpdlab: grade invariants (Koszul, Cech, local-cohomology, Ext) of "
      "ideals on finitely presented modules, and finitistic-dimension "
      "formula checks for ring constructions"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand(
      "run", "execute a declaration/query script, emit a JSON report bundle");
  std::string script_path;
  std::string out_path = "-";
  fpdlab::RunConfig cfg;
  run->add_option("script", script_path, "script file")->required();
  run->add_option("--out", out_path, "output path, '-' for standard output");
  run->add_option("--power-cap", cfg.power_cap,
                  "stabilization cap for cech/local grades and torsion");
  run->add_option("--grade-bound", cfg.grade_bound,
                  "probe bound for ext/local grades");
  run->add_option("--trials", cfg.trials,
                  "samples per step for randomized procedures");
  run->add_option("--seed", cfg.seed, "seed for all randomized procedures");
  run->add_flag("--assume-maximal", cfg.assume_maximal,
                "accept unconfirmed zero-dimensional ideals as maximal");
  run->add_flag("--equidimensional", cfg.equidimensional,
                "enable height computation as dim(R) - dim(R/p)");
  run->add_flag("--exhaustive", cfg.exhaustive,
                "assert the supplied maximal-ideal list is grade-exhaustive");
  run->add_flag("--timings", cfg.timings,
                "include wall-clock timings (breaks byte-level determinism)");

  CLI11_PARSE(app, argc, argv);

  if (const char* budget = std::getenv("FPDLAB_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(budget, &end, 10);
    if (end && *end == '\0' && v > 0) cfg.basis_cap = v;
  }

  std::ifstream in(script_path, std::ios::binary);
  if (!in) {
    std::cerr << "fpdlab: cannot open script '" << script_path << "'\n";
    return 1;
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  try {
    const auto t0 = std::chrono::steady_clock::now();
    fpdlab::script::Script sc = fpdlab::script::parse_script(buf.str());
    fpdlab::script::RunResult res = fpdlab::script::execute(sc, cfg);
    if (cfg.timings) {
      const auto t1 = std::chrono::steady_clock::now();
      res.bundle["timings"] = fpdlab::json{
          {"total-ms",
           std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
               .count()}};
    }
    fpdlab::script::emit_report(res.bundle, out_path);
    return res.exit_code;
  } catch (const fpdlab::parse_error& e) {
    std::cerr << "fpdlab: " << e.what() << "\n";
    return 1;
  } catch (const fpdlab::error& e) {
    std::cerr << "fpdlab: " << e.what() << "\n";
    return 1;
  }
}
