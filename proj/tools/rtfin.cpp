// rtfin: finiteness decisions for quantum representations at levels r and 2r.
//
// Exit status: 0 completed, 1 I/O error, 2 usage error,
// 3 internal invariant violation (including a theorem crosscheck Disagree).

#include <CLI11.hpp>

#include <iostream>

#include "rtfin/cli/commands.hpp"
#include "rtfin/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

void add_output_options(CLI::App* sub, std::string& format, rtfin::cli::RunConfig& cfg) {
  sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", cfg.out_path, "Also write the output to PATH");
  sub->add_option("--jobs", cfg.jobs, "Worker threads (default: all cores)");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace rtfin::cli;

  CLI::App app{"Decide finiteness of quantum mapping-class-group representations via complete positivity"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "text";

  auto* torus = app.add_subcommand("decide-torus", "One-holed torus T^c at level 2r (or r, experimental)");
  torus->add_option("--r", cfg.r, "Odd prime r")->required();
  torus->add_option("--c", cfg.c, "Boundary half-color (stick colored 2c)")->required();
  torus->add_option("--p", cfg.p, "Level: r or 2r (default 2r)");
  torus->add_flag("--experimental-odd-p", cfg.experimental_odd_p, "Allow p = r torus computations");
  add_output_options(torus, format, cfg);

  auto* closed = app.add_subcommand("decide-closed", "Closed surface of genus g at level p");
  closed->add_option("--p", cfg.p, "Level p = r or 2r")->required();
  closed->add_option("--g", cfg.g, "Genus g >= 1")->required();
  add_output_options(closed, format, cfg);

  auto* scan = app.add_subcommand("scan", "Decide every nonempty T^c for odd primes r <= r_max");
  scan->add_option("--r-max", cfg.r_max, "Largest r")->required();
  scan->add_option("--c-policy", cfg.c_policy, "all | clauses")->check(CLI::IsMember({"all", "clauses"}));
  scan->add_flag("--timing", cfg.timing, "Record per-item timing (output no longer reproducible)");
  add_output_options(scan, format, cfg);

  auto* verify = app.add_subcommand("verify-theorem", "Reproduce every clause instance and the closed-surface table");
  verify->add_option("--r-max", cfg.r_max, "Largest r")->required();
  add_output_options(verify, format, cfg);

  auto* lattice = app.add_subcommand("lattice-check", "Integrality and discreteness of the conjugate embedding");
  lattice->add_option("--p", cfg.p, "Level p = r or 2r")->required();
  lattice->add_option("--samples", cfg.samples, "Number of random elements")->check(CLI::PositiveNumber);
  lattice->add_option("--seed", cfg.seed, "RNG seed");
  add_output_options(lattice, format, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.format = parse_format(format);
    if (torus->parsed()) {
      run_decide_torus(cfg, std::cout);
    } else if (closed->parsed()) {
      run_decide_closed(cfg, std::cout);
    } else if (scan->parsed()) {
      run_scan(cfg, std::cout);
    } else if (verify->parsed()) {
      if (!run_verify_theorem(cfg, std::cout).ok()) return kExitInternal;
    } else if (lattice->parsed()) {
      if (!run_lattice_check(cfg, std::cout).all_pass()) return kExitInternal;
    }
  } catch (const rtfin::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}
