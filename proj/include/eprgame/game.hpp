#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "eprgame/epr.hpp"

namespace eprgame::game_theory {

using epr::kPi;

/// Alice's payoff matrix; the game is symmetric, Bob's matrix is the transpose.
struct PayoffMatrix {
  double g00 = 0.0, g01 = 0.0, g10 = 0.0, g11 = 0.0;
};

/// Payoff differences driving the equilibrium structure.
struct Deltas {
  double d1 = 0.0;  // g10 - g00
  double d2 = 0.0;  // g11 - g01
  double d3 = 0.0;  // d2 - d1
  double d4 = 0.0;  // g00 - g01 + g10 - g11
};

inline Deltas deltas(const PayoffMatrix& m) {
  Deltas d;
  d.d1 = m.g10 - m.g00;
  d.d2 = m.g11 - m.g01;
  d.d3 = d.d2 - d.d1;
  d.d4 = m.g00 - m.g01 + m.g10 - m.g11;
  return d;
}

struct StrategyProfile {
  double x = 0.0, y = 0.0;
};

/// Payoff matrix plus the full EPR parameter set.
struct GameSetup {
  PayoffMatrix payoffs;
  epr::GameConfig params;
};

inline void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error(std::string(name) + " must lie in [0, 1]");
  }
}

namespace detail {

// Direction-function values reused by the closed-form payoff and NE gap.
struct DirectionValues {
  double x1, x2, y1, y2;          // alignments along each direction
  double z11, z12, z21, z22;      // interference terms per direction pair
};

inline DirectionValues direction_values(const epr::GameConfig& cfg) {
  DirectionValues v{};
  v.x1 = epr::axis_alignment(cfg.alice_dirs.k1, cfg.alice);
  v.x2 = epr::axis_alignment(cfg.alice_dirs.k2, cfg.alice);
  v.y1 = epr::axis_alignment(cfg.bob_dirs.k1, cfg.bob);
  v.y2 = epr::axis_alignment(cfg.bob_dirs.k2, cfg.bob);
  v.z11 = epr::interference_z(cfg.alice_dirs.k1, cfg.bob_dirs.k1, cfg.alice, cfg.bob);
  v.z12 = epr::interference_z(cfg.alice_dirs.k1, cfg.bob_dirs.k2, cfg.alice, cfg.bob);
  v.z21 = epr::interference_z(cfg.alice_dirs.k2, cfg.bob_dirs.k1, cfg.alice, cfg.bob);
  v.z22 = epr::interference_z(cfg.alice_dirs.k2, cfg.bob_dirs.k2, cfg.alice, cfg.bob);
  return v;
}

// The outcome probability is invariant under exchanging the players together
// with the outcome labels, so Bob's payoff reuses Alice's closed form with
// these mirrored values.
inline DirectionValues swap_players(const DirectionValues& v) {
  return DirectionValues{v.y1, v.y2, v.x1, v.x2, v.z11, v.z21, v.z12, v.z22};
}

}  // namespace detail

/// Alice's expected payoff as the direct sum over direction pairs and
/// outcomes, weighted by the mixing probabilities x, y.
inline double expected_payoff_alice_direct(double x, double y, const GameSetup& g) {
  check_probability(x, "x");
  check_probability(y, "y");
  const double wa[2] = {x, 1.0 - x};
  const double wb[2] = {y, 1.0 - y};
  double total = 0.0;
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      const epr::OutcomeDistribution d = epr::outcome_distribution(i, j, g.params);
      const double payoff = d.p00 * g.payoffs.g00 + d.p01 * g.payoffs.g01 +
                            d.p10 * g.payoffs.g10 + d.p11 * g.payoffs.g11;
      total += wa[i - 1] * wb[j - 1] * payoff;
    }
  }
  return total;
}

namespace detail {

// Eq-26-style Delta expansion of the first player's payoff, evaluated with
// whichever direction values the caller supplies.
inline double payoff_closed_form(double x, double y, const GameSetup& g,
                                 const DirectionValues& v) {
  const Deltas d = deltas(g.payoffs);
  const double sg = std::sin(g.params.gamma);
  const double cg = std::cos(g.params.gamma);
  const double sum = g.payoffs.g00 + g.payoffs.g10 + g.payoffs.g01 + g.payoffs.g11;
  const double bilinear =
      x * ((v.x1 - v.x2) * v.y2 + (v.z12 - v.z22) * sg) +
      y * ((v.y1 - v.y2) * v.x2 + (v.z21 - v.z22) * sg) +
      x * y * ((v.x1 - v.x2) * (v.y1 - v.y2) + sg * (v.z11 + v.z22 - v.z12 - v.z21)) +
      v.x2 * v.y2 + v.z22 * sg;
  const double linear = (d.d1 + d.d2) * ((v.x1 - v.x2) * x + v.x2) -
                        d.d4 * ((v.y1 - v.y2) * y + v.y2);
  return 0.25 * (sum + d.d3 * bilinear - cg * linear);
}

}  // namespace detail

/// Alice's expected payoff in closed form (the Delta expansion). Agrees with
/// expected_payoff_alice_direct to machine precision.
inline double expected_payoff_alice(double x, double y, const GameSetup& g) {
  check_probability(x, "x");
  check_probability(y, "y");
  return detail::payoff_closed_form(x, y, g, detail::direction_values(g.params));
}

/// Bob's expected payoff. The game is symmetric (Bob holds the transposed
/// matrix), so this is Alice's closed form with the player roles exchanged:
/// Bob's strategy and direction values occupy the first slot.
inline double expected_payoff_bob(double x, double y, const GameSetup& g) {
  check_probability(x, "x");
  check_probability(y, "y");
  return detail::payoff_closed_form(
      y, x, g, detail::swap_players(detail::direction_values(g.params)));
}

/// Pi_A(x*, y*) - Pi_A(x, y*): nonnegative for every x iff x* is Alice's best
/// response to y*.
inline double ne_gap_alice(double xs, double x, double ys, const GameSetup& g) {
  check_probability(xs, "x*");
  check_probability(x, "x");
  check_probability(ys, "y*");
  const Deltas d = deltas(g.payoffs);
  const auto v = detail::direction_values(g.params);
  const double sg = std::sin(g.params.gamma);
  const double cg = std::cos(g.params.gamma);
  const double bracket =
      d.d3 * (ys * ((v.x1 - v.x2) * (v.y1 - v.y2) +
                    sg * (v.z11 + v.z22 - v.z12 - v.z21)) +
              (v.x1 - v.x2) * v.y2 + (v.z12 - v.z22) * sg) -
      cg * (d.d1 + d.d2) * (v.x1 - v.x2);
  return 0.25 * (xs - x) * bracket;
}

inline double ne_gap_bob(double ys, double y, double xs, const GameSetup& g) {
  check_probability(ys, "y*");
  check_probability(y, "y");
  check_probability(xs, "x*");
  const Deltas d = deltas(g.payoffs);
  const auto v = detail::direction_values(g.params);
  const double sg = std::sin(g.params.gamma);
  const double cg = std::cos(g.params.gamma);
  const double bracket =
      d.d3 * (xs * ((v.x1 - v.x2) * (v.y1 - v.y2) +
                    sg * (v.z11 + v.z22 - v.z12 - v.z21)) +
              (v.y1 - v.y2) * v.x2 + (v.z21 - v.z22) * sg) -
      cg * (d.d1 + d.d2) * (v.y1 - v.y2);
  return 0.25 * (ys - y) * bracket;
}

/// Parameter families that embed the classical game: X1 = Y1 = +1,
/// X2 = Y2 = -1 and every Z_ij = 0. Two solution classes per player.
enum class EmbeddingClass {
  kFreeTilt,  // e1 = 0, directions (0, pi); e2, e3 free
  kZeroTilt,  // e3 = 0, directions (e1, e1 - pi); e1, e2 free
};

struct EmbeddingSolution {
  EmbeddingClass alice_class = EmbeddingClass::kFreeTilt;
  EmbeddingClass bob_class = EmbeddingClass::kFreeTilt;
  epr::PlayerParams alice;
  epr::PlayerParams bob;
  epr::DirectionPair alice_dirs;
  epr::DirectionPair bob_dirs;

  epr::GameConfig config(double gamma) const {
    return epr::GameConfig{alice, bob, alice_dirs, bob_dirs, gamma};
  }
};

namespace detail {

inline void apply_embedding(EmbeddingClass cls, double free1, double free2,
                            epr::PlayerParams& p, epr::DirectionPair& dirs) {
  if (cls == EmbeddingClass::kFreeTilt) {
    p = epr::PlayerParams{0.0, free1, free2};  // free e2, e3
    dirs = epr::DirectionPair{0.0, kPi};
  } else {
    p = epr::PlayerParams{free1, free2, 0.0};  // free e1, e2
    dirs = epr::DirectionPair{free1, free1 - kPi};
  }
}

}  // namespace detail

/// Canonical embedding solution. The free angles change the prepared state
/// but neither the equilibria nor the payoffs.
inline EmbeddingSolution embedding_solver(
    EmbeddingClass alice_class = EmbeddingClass::kFreeTilt,
    EmbeddingClass bob_class = EmbeddingClass::kFreeTilt, double alice_free1 = 0.0,
    double alice_free2 = 0.0, double bob_free1 = 0.0, double bob_free2 = 0.0) {
  EmbeddingSolution s;
  s.alice_class = alice_class;
  s.bob_class = bob_class;
  detail::apply_embedding(alice_class, alice_free1, alice_free2, s.alice, s.alice_dirs);
  detail::apply_embedding(bob_class, bob_free1, bob_free2, s.bob, s.bob_dirs);
  return s;
}

/// Whether a parameter set satisfies the embedding constraints.
inline bool is_embedded(const epr::GameConfig& cfg, double tol = 1e-9) {
  const auto v = detail::direction_values(cfg);
  return std::abs(v.x1 - 1.0) <= tol && std::abs(v.y1 - 1.0) <= tol &&
         std::abs(v.x2 + 1.0) <= tol && std::abs(v.y2 + 1.0) <= tol &&
         std::abs(v.z11) <= tol && std::abs(v.z12) <= tol &&
         std::abs(v.z21) <= tol && std::abs(v.z22) <= tol;
}

/// Alice's payoff under the embedding, reduced to Deltas and cos(gamma).
/// At gamma = 0 this is the classical bilinear payoff.
inline double embedded_payoff(double x, double y, double gamma, const PayoffMatrix& m) {
  check_probability(x, "x");
  check_probability(y, "y");
  ga::require_entanglement_range(gamma);
  const Deltas d = deltas(m);
  const double cg = std::cos(gamma);
  return 0.5 * (m.g00 + m.g11 - cg * (m.g00 - m.g11) + 2.0 * x * y * d.d3 -
                x * (d.d3 + cg * (d.d1 + d.d2)) - y * (d.d3 - cg * d.d4));
}

/// Outcome probabilities under the embedding:
/// 1/4 [1 + cos g ((-1)^{m+i+1} + (-1)^{n+j+1}) + (-1)^{m+n+i+j}].
inline double embedded_probability(int m, int n, int i, int j, double gamma) {
  epr::check_outcome_bit(m, "m");
  epr::check_outcome_bit(n, "n");
  if ((i != 1 && i != 2) || (j != 1 && j != 2)) {
    throw std::invalid_argument("direction indices must be 1 or 2");
  }
  ga::require_entanglement_range(gamma);
  const auto sgn = [](int e) { return (e % 2 == 0) ? 1.0 : -1.0; };
  return 0.25 * (1.0 + std::cos(gamma) * (sgn(m + i + 1) + sgn(n + j + 1)) +
                 sgn(m + n + i + j));
}

enum class EquilibriumKind { kPure, kMixed };

struct Equilibrium {
  StrategyProfile profile;
  double payoff_a = 0.0;
  double payoff_b = 0.0;
  EquilibriumKind kind = EquilibriumKind::kPure;
  bool strict = false;
};

struct EquilibriumReport {
  std::vector<Equilibrium> equilibria;
  // Set when the NE condition is identically zero and every profile qualifies.
  bool continuum = false;

  bool contains(double x, double y, double tol = 1e-9) const {
    for (const auto& e : equilibria) {
      if (std::abs(e.profile.x - x) <= tol && std::abs(e.profile.y - y) <= tol) {
        return true;
      }
    }
    return continuum;
  }
};

/// Equilibria of the embedded game. The NE condition for Alice reduces to
/// (x* - x) [d3 (2 y* - 1) - cos g (d1 + d2)] >= 0, and symmetrically for Bob.
inline EquilibriumReport find_equilibria(const PayoffMatrix& m, double gamma) {
  ga::require_entanglement_range(gamma);
  constexpr double kTol = 1e-12;
  const Deltas d = deltas(m);
  const double cg = std::cos(gamma);
  const double drive = cg * (d.d1 + d.d2);
  const auto bracket = [&](double other) { return d.d3 * (2.0 * other - 1.0) - drive; };

  EquilibriumReport report;
  if (std::abs(d.d3) <= kTol && std::abs(drive) <= kTol) {
    report.continuum = true;
    return report;
  }

  const auto add = [&](double x, double y, EquilibriumKind kind, bool strict) {
    report.equilibria.push_back(Equilibrium{StrategyProfile{x, y},
                                            embedded_payoff(x, y, gamma, m),
                                            embedded_payoff(y, x, gamma, m), kind,
                                            strict});
  };

  for (const double xs : {0.0, 1.0}) {
    for (const double ys : {0.0, 1.0}) {
      const double ba = bracket(ys);
      const double bb = bracket(xs);
      const bool ok_a = (xs == 0.0) ? (ba <= kTol) : (ba >= -kTol);
      const bool ok_b = (ys == 0.0) ? (bb <= kTol) : (bb >= -kTol);
      if (!ok_a || !ok_b) continue;
      const bool strict_a = (xs == 0.0) ? (ba < -kTol) : (ba > kTol);
      const bool strict_b = (ys == 0.0) ? (bb < -kTol) : (bb > kTol);
      add(xs, ys, EquilibriumKind::kPure, strict_a && strict_b);
    }
  }

  if (std::abs(d.d3) > kTol) {
    const double interior = (drive + d.d3) / (2.0 * d.d3);
    // Interior only; endpoint values already appear as weak pure profiles.
    if (interior > kTol && interior < 1.0 - kTol) {
      add(interior, interior, EquilibriumKind::kMixed, false);
    }
  }
  return report;
}

/// Analytic entanglement threshold where the non-classical NE appears:
/// cos(gamma) = d3 / (d1 + d2). Requires a Prisoners' Dilemma payoff ordering.
inline double pd_transition_angle(const PayoffMatrix& m) {
  const Deltas d = deltas(m);
  if (!(d.d1 >= 0.0 && d.d2 > 0.0)) {
    throw std::domain_error("not a Prisoners' Dilemma: requires d1 >= 0 and d2 > 0");
  }
  const double ratio = d.d3 / (d.d1 + d.d2);
  if (ratio < 0.0 || ratio > 1.0) {
    throw std::domain_error("no transition in [0, pi/2]: cos ratio " +
                            std::to_string(ratio) + " outside [0, 1]");
  }
  return std::acos(ratio);
}

/// Bisection estimate of the same threshold via the equilibrium-set boundary:
/// the smallest gamma at which (1,1) joins the NE set.
inline double pd_transition_angle_bisect(const PayoffMatrix& m, int iterations = 60) {
  const auto quantum_ne = [&](double g) { return find_equilibria(m, g).contains(1.0, 1.0); };
  if (quantum_ne(0.0)) return 0.0;
  if (!quantum_ne(kPi / 2.0)) {
    throw std::domain_error("no transition in [0, pi/2]");
  }
  double lo = 0.0, hi = kPi / 2.0;  // NE absent at lo, present at hi
  for (int it = 0; it < iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    (quantum_ne(mid) ? hi : lo) = mid;
  }
  return hi;
}

/// Interior mixed equilibrium of the Stag Hunt:
/// x* = y* = [cos g (d1 + d2) + d2 - d1] / (2 d3).
inline StrategyProfile sh_mixed_ne(const PayoffMatrix& m, double gamma) {
  ga::require_entanglement_range(gamma);
  const Deltas d = deltas(m);
  if (!(d.d3 > d.d2 && d.d2 > 0.0 && d.d1 + d.d2 > 0.0 && d.d3 > d.d1 + d.d2)) {
    throw std::domain_error(
        "not a Stag Hunt: requires d3 > d2 > 0, d1 + d2 > 0 and d3 > d1 + d2");
  }
  const double v = (std::cos(gamma) * (d.d1 + d.d2) + d.d2 - d.d1) / (2.0 * d.d3);
  return StrategyProfile{v, v};
}

}  // namespace eprgame::game_theory
