#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>

#include "eprgame/epr.hpp"
#include "eprgame/oracle.hpp"

namespace eprgame {

/// Result of the three-way pipeline comparison.
struct VerifyReport {
  bool pass = false;
  int samples = 0;
  double tolerance = 0.0;
  double max_deviation = 0.0;
  std::string failure_dump;  // first failing configuration, if any
};

namespace detail {

inline epr::GameConfig random_config(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-epr::kPi, epr::kPi);
  std::uniform_real_distribution<double> ent(0.0, epr::kPi / 2.0);
  epr::GameConfig cfg;
  cfg.alice = epr::PlayerParams{angle(rng), angle(rng), angle(rng)};
  cfg.bob = epr::PlayerParams{angle(rng), angle(rng), angle(rng)};
  cfg.alice_dirs = epr::DirectionPair{angle(rng), angle(rng)};
  cfg.bob_dirs = epr::DirectionPair{angle(rng), angle(rng)};
  cfg.gamma = ent(rng);
  return cfg;
}

inline std::string dump_config(const epr::GameConfig& cfg, int i, int j, int m, int n,
                               double p_closed, double p_mv, double p_oracle) {
  std::ostringstream os;
  os.precision(17);
  os << "alice angles = " << cfg.alice.e1 << " " << cfg.alice.e2 << " " << cfg.alice.e3
     << "\nbob angles   = " << cfg.bob.e1 << " " << cfg.bob.e2 << " " << cfg.bob.e3
     << "\nalice dirs   = " << cfg.alice_dirs.k1 << " " << cfg.alice_dirs.k2
     << "\nbob dirs     = " << cfg.bob_dirs.k1 << " " << cfg.bob_dirs.k2
     << "\ngamma        = " << cfg.gamma << "\noutcome (m,n) = (" << m << "," << n
     << "), directions (i,j) = (" << i << "," << j << ")"
     << "\nclosed-form  = " << p_closed << "\nmultivector  = " << p_mv
     << "\nstate-vector = " << p_oracle;
  return os.str();
}

}  // namespace detail

/// Draws seeded random configurations and compares the closed-form, the
/// multivector, and the state-vector probability pipelines pairwise.
inline VerifyReport cross_check(int samples, std::uint64_t seed, double tol) {
  if (samples < 1) {
    throw std::invalid_argument("samples must be >= 1");
  }
  VerifyReport report;
  report.samples = samples;
  report.tolerance = tol;
  report.pass = true;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, 2);
  for (int s = 0; s < samples; ++s) {
    const epr::GameConfig cfg = detail::random_config(rng);
    const int i = pick(rng);
    const int j = pick(rng);
    const oracle::Ket2 psi = oracle::build_state(cfg.gamma, cfg.alice, cfg.bob);
    for (int m = 0; m < 2; ++m) {
      for (int n = 0; n < 2; ++n) {
        const double p_closed = epr::outcome_probability(m, n, i, j, cfg);
        const double p_mv = epr::outcome_probability_multivector(m, n, i, j, cfg);
        const double p_oracle = oracle::joint_probability(
            psi, m, n, cfg.alice_dirs.at(i), cfg.bob_dirs.at(j));
        const double dev = std::max({std::abs(p_closed - p_mv),
                                     std::abs(p_closed - p_oracle),
                                     std::abs(p_mv - p_oracle)});
        report.max_deviation = std::max(report.max_deviation, dev);
        if (dev > tol && report.pass) {
          report.pass = false;
          report.failure_dump =
              detail::dump_config(cfg, i, j, m, n, p_closed, p_mv, p_oracle);
        }
      }
    }
  }
  return report;
}

}  // namespace eprgame
