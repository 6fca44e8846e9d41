// Command-line front end: probabilities, payoffs, equilibria, entanglement
// sweeps, transition angles and the cross-formalism verification suite.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "eprgame/config.hpp"
#include "eprgame/game.hpp"
#include "eprgame/verify.hpp"

namespace {

namespace gt = eprgame::game_theory;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct CommonOpts {
  std::string config_path;
  std::string preset_name;
  std::optional<double> gamma;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_gamma = true) {
  auto* cfg = cmd->add_option("--config", opts.config_path, "Path to a game config file");
  cmd->add_option("--preset", opts.preset_name, "Named preset: pd-paper or sh-paper")
      ->excludes(cfg);
  if (with_gamma) {
    cmd->add_option("--gamma", opts.gamma,
                    "Entanglement angle in radians, [0, pi/2]; overrides the config");
  }
}

gt::GameSetup resolve_setup(const CommonOpts& opts) {
  gt::GameSetup setup;
  if (!opts.config_path.empty()) {
    setup = eprgame::config::load(opts.config_path);
  } else if (!opts.preset_name.empty()) {
    setup = eprgame::config::preset(opts.preset_name);
  } else {
    throw eprgame::config::ConfigError("either --config or --preset is required");
  }
  if (opts.gamma) {
    eprgame::ga::require_entanglement_range(*opts.gamma);
    setup.params.gamma = *opts.gamma;
  }
  return setup;
}

const char* kind_name(gt::EquilibriumKind k) {
  return k == gt::EquilibriumKind::kPure ? "pure" : "mixed";
}

int run_probs(const CommonOpts& opts, int i, int j) {
  const gt::GameSetup setup = resolve_setup(opts);
  const auto d = eprgame::epr::outcome_distribution(i, j, setup.params);
  std::cout << "P00 = " << fmt(d.p00) << "\n"
            << "P01 = " << fmt(d.p01) << "\n"
            << "P10 = " << fmt(d.p10) << "\n"
            << "P11 = " << fmt(d.p11) << "\n"
            << "sum = " << fmt(d.sum()) << "\n";
  return kExitOk;
}

int run_payoff(const CommonOpts& opts, double x, double y) {
  const gt::GameSetup setup = resolve_setup(opts);
  std::cout << "payoff_a = " << fmt(gt::expected_payoff_alice(x, y, setup)) << "\n"
            << "payoff_b = " << fmt(gt::expected_payoff_bob(x, y, setup)) << "\n";
  return kExitOk;
}

void warn_if_not_embedded(const gt::GameSetup& setup) {
  if (!gt::is_embedded(setup.params)) {
    std::cerr << "warning: config parameters do not satisfy the embedding "
                 "constraints; equilibrium analysis assumes the embedded game\n";
  }
}

int run_ne(const CommonOpts& opts) {
  const gt::GameSetup setup = resolve_setup(opts);
  warn_if_not_embedded(setup);
  const auto report = gt::find_equilibria(setup.payoffs, setup.params.gamma);
  if (report.continuum) {
    std::cout << "degenerate game: every strategy profile is an equilibrium\n";
    return kExitOk;
  }
  for (const auto& e : report.equilibria) {
    std::cout << "(" << fmt(e.profile.x) << ", " << fmt(e.profile.y) << ")  payoffs ("
              << fmt(e.payoff_a) << ", " << fmt(e.payoff_b) << ")  "
              << kind_name(e.kind) << (e.strict ? " strict" : " weak") << "\n";
  }
  return kExitOk;
}

int run_sweep(const CommonOpts& opts, int grid, const std::string& out_path) {
  const gt::GameSetup setup = resolve_setup(opts);
  warn_if_not_embedded(setup);
  std::ostringstream rows;
  rows << "gamma,x_star,y_star,payoff_a,payoff_b,kind,strict\n";
  for (int k = 0; k < grid; ++k) {
    const double g = (eprgame::epr::kPi / 2.0) * k / (grid - 1);
    const auto report = gt::find_equilibria(setup.payoffs, g);
    if (report.continuum) {
      rows << fmt(g) << ",,,,,continuum,0\n";
      continue;
    }
    for (const auto& e : report.equilibria) {
      rows << fmt(g) << "," << fmt(e.profile.x) << "," << fmt(e.profile.y) << ","
           << fmt(e.payoff_a) << "," << fmt(e.payoff_b) << "," << kind_name(e.kind)
           << "," << (e.strict ? 1 : 0) << "\n";
    }
  }
  if (out_path.empty()) {
    std::cout << rows.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write to '" << out_path << "'\n";
      return kExitUsage;
    }
    out << rows.str();
  }
  return kExitOk;
}

int run_transition(const CommonOpts& opts) {
  const gt::GameSetup setup = resolve_setup(opts);
  try {
    const double analytic = gt::pd_transition_angle(setup.payoffs);
    const double bisect = gt::pd_transition_angle_bisect(setup.payoffs);
    std::cout << "analytic  = " << fmt(analytic) << " rad\n"
              << "bisection = " << fmt(bisect) << " rad\n"
              << "difference = " << fmt(analytic - bisect) << "\n";
  } catch (const std::domain_error& e) {
    std::cout << "no transition in [0, pi/2]: " << e.what() << "\n";
  }
  return kExitOk;
}

int run_verify(int samples, std::uint64_t seed, double tol) {
  const auto report = eprgame::cross_check(samples, seed, tol);
  std::cout << "samples = " << report.samples << "\n"
            << "max deviation = " << fmt(report.max_deviation) << "\n"
            << "tolerance = " << fmt(report.tolerance) << "\n"
            << (report.pass ? "PASS" : "FAIL") << "\n";
  if (!report.pass) {
    std::cout << "first failing configuration:\n" << report.failure_dump << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-player quantum games in an EPR setting"};
  app.require_subcommand(1);

  CommonOpts probs_opts, payoff_opts, ne_opts, sweep_opts, transition_opts;
  int dir_i = 1, dir_j = 1;
  auto* probs = app.add_subcommand("probs", "Outcome probabilities for one direction pair");
  add_common(probs, probs_opts);
  probs->add_option("-i", dir_i, "Alice's direction index (1 or 2)")
      ->check(CLI::Range(1, 2));
  probs->add_option("-j", dir_j, "Bob's direction index (1 or 2)")
      ->check(CLI::Range(1, 2));

  double x = 0.0, y = 0.0;
  auto* payoff = app.add_subcommand("payoff", "Expected payoffs at a strategy profile");
  add_common(payoff, payoff_opts);
  payoff->add_option("--x", x, "Alice's first-direction probability")
      ->check(CLI::Range(0.0, 1.0));
  payoff->add_option("--y", y, "Bob's first-direction probability")
      ->check(CLI::Range(0.0, 1.0));

  auto* ne = app.add_subcommand("ne", "Nash equilibria of the embedded game");
  add_common(ne, ne_opts);

  int grid = 101;
  std::string out_path;
  auto* sweep = app.add_subcommand("sweep", "Equilibria over an entanglement grid (CSV)");
  add_common(sweep, sweep_opts, /*with_gamma=*/false);
  sweep->add_option("--grid", grid, "Number of gamma samples")->check(CLI::Range(2, 1000000));
  sweep->add_option("--out", out_path, "Output CSV path (default: stdout)");

  auto* transition =
      app.add_subcommand("transition", "Entanglement threshold of the classical NE");
  add_common(transition, transition_opts, /*with_gamma=*/false);

  int samples = 1000;
  std::uint64_t seed = 20120901;
  double tol = 1e-10;
  auto* verify = app.add_subcommand("verify", "Cross-check the three probability pipelines");
  verify->add_option("--samples", samples, "Random configurations to draw")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--tol", tol, "Pairwise agreement tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (probs->parsed()) return run_probs(probs_opts, dir_i, dir_j);
    if (payoff->parsed()) return run_payoff(payoff_opts, x, y);
    if (ne->parsed()) return run_ne(ne_opts);
    if (sweep->parsed()) return run_sweep(sweep_opts, grid, out_path);
    if (transition->parsed()) return run_transition(transition_opts);
    if (verify->parsed()) return run_verify(samples, seed, tol);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
