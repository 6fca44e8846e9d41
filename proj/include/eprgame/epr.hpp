#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "eprgame/multivector.hpp"

namespace eprgame::epr {

inline constexpr double kPi = 3.14159265358979323846;

/// Euler angle triple of a player's state-preparation rotor.
struct PlayerParams {
  double e1 = 0.0, e2 = 0.0, e3 = 0.0;
};

/// A player's two available measurement directions (Bloch rotation angles
/// about sigma_2, radians).
struct DirectionPair {
  double k1 = 0.0, k2 = kPi;

  double at(int i) const {
    if (i == 1) return k1;
    if (i == 2) return k2;
    throw std::invalid_argument("direction index must be 1 or 2");
  }
};

/// Full parameter set of one EPR game instance (payoffs live one layer up).
struct GameConfig {
  PlayerParams alice;
  PlayerParams bob;
  DirectionPair alice_dirs;
  DirectionPair bob_dirs;
  double gamma = 0.0;  // entanglement angle, [0, pi/2]
};

inline void check_outcome_bit(int b, const char* name) {
  if (b != 0 && b != 1) {
    throw std::invalid_argument(std::string(name) + " must be 0 or 1");
  }
}

/// X (for Alice) / Y (for Bob): the expected alignment of the player's state
/// with a measurement along kappa. In [-1, 1].
inline double axis_alignment(double kappa, const PlayerParams& p) {
  return std::cos(p.e1) * std::cos(kappa) +
         std::cos(p.e3) * std::sin(p.e1) * std::sin(kappa);
}

/// The F/U pair (G/V when called with Bob's triple): transverse components
/// feeding the entanglement interference term.
struct TransverseParts {
  double f = 0.0, u = 0.0;
};

inline TransverseParts transverse_parts(double kappa, const PlayerParams& p) {
  const double base = std::cos(kappa) * std::sin(p.e1) -
                      std::cos(p.e3) * std::sin(kappa) * std::cos(p.e1);
  return TransverseParts{
      std::cos(p.e2) * base + std::sin(kappa) * std::sin(p.e2) * std::sin(p.e3),
      -std::sin(p.e2) * base + std::sin(kappa) * std::cos(p.e2) * std::sin(p.e3)};
}

/// Z(k1, k2) = F G - U V, the interference term multiplying sin(gamma).
inline double interference_z(double k1, double k2, const PlayerParams& alice,
                             const PlayerParams& bob) {
  const TransverseParts a = transverse_parts(k1, alice);
  const TransverseParts b = transverse_parts(k2, bob);
  return a.f * b.f - a.u * b.u;
}

/// P_mn for direction pair (i, j):
/// 1/4 [1 + cos g ((-1)^m X_i + (-1)^n Y_j) + (-1)^{m+n} (X_i Y_j + sin g Z_ij)].
inline double outcome_probability(int m, int n, int i, int j, const GameConfig& cfg) {
  check_outcome_bit(m, "m");
  check_outcome_bit(n, "n");
  ga::require_entanglement_range(cfg.gamma);
  const double ki = cfg.alice_dirs.at(i);
  const double kj = cfg.bob_dirs.at(j);
  const double x = axis_alignment(ki, cfg.alice);
  const double y = axis_alignment(kj, cfg.bob);
  const double z = interference_z(ki, kj, cfg.alice, cfg.bob);
  const double sm = (m == 0) ? 1.0 : -1.0;
  const double sn = (n == 0) ? 1.0 : -1.0;
  double p = 0.25 * (1.0 + std::cos(cfg.gamma) * (sm * x + sn * y) +
                     sm * sn * (x * y + std::sin(cfg.gamma) * z));
  // Float noise below -1e-12 is clamped; anything worse is a convention bug.
  if (p < 0.0) {
    if (p < -1e-12) {
      throw std::runtime_error("negative outcome probability: " + std::to_string(p));
    }
    p = 0.0;
  }
  return p;
}

/// The four outcome probabilities for one direction pair; sums to 1.
struct OutcomeDistribution {
  double p00 = 0.0, p01 = 0.0, p10 = 0.0, p11 = 0.0;

  double sum() const { return p00 + p01 + p10 + p11; }
};

inline OutcomeDistribution outcome_distribution(int i, int j, const GameConfig& cfg) {
  return OutcomeDistribution{
      outcome_probability(0, 0, i, j, cfg), outcome_probability(0, 1, i, j, cfg),
      outcome_probability(1, 0, i, j, cfg), outcome_probability(1, 1, i, j, cfg)};
}

/// Same probability through the multivector pipeline: projects the prepared
/// two-particle state onto the outcome's separable measurement state.
inline double outcome_probability_multivector(int m, int n, int i, int j,
                                              const GameConfig& cfg) {
  check_outcome_bit(m, "m");
  check_outcome_bit(n, "n");
  const ga::Rotor a = ga::rotor_from_euler(cfg.alice.e1, cfg.alice.e2, cfg.alice.e3);
  const ga::Rotor b = ga::rotor_from_euler(cfg.bob.e1, cfg.bob.e2, cfg.bob.e3);
  const auto psi = ga::two_particle_state(a, b, cfg.gamma);
  const auto phi = ga::measurement_state(cfg.alice_dirs.at(i), cfg.bob_dirs.at(j), m, n);
  return ga::probability_ga(psi, phi);
}

}  // namespace eprgame::epr
