#include <catch2/catch_amalgamated.hpp>

#include "eprgame/epr.hpp"
#include "test_helpers.hpp"

using namespace eprgame::epr;

TEST_CASE("axis alignment") {
  CHECK(axis_alignment(0.0, PlayerParams{0.0, 0.0, 1.3}) == Catch::Approx(1.0));
  CHECK(axis_alignment(kPi, PlayerParams{0.0, 0.0, 0.0}) == Catch::Approx(-1.0));
  CHECK(axis_alignment(kPi / 2.0, PlayerParams{kPi / 2.0, 0.0, 0.0}) ==
        Catch::Approx(1.0));
  SECTION("bounded by 1") {
    testutil::Rng rng(21);
    for (int t = 0; t < 1000; ++t) {
      CHECK(std::abs(axis_alignment(rng.next_angle(), rng.next_player())) <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("transverse parts") {
  SECTION("trivial player leaves only the measurement-direction sine") {
    const auto fu = transverse_parts(0.77, PlayerParams{0.0, 0.0, 0.0});
    CHECK(fu.f == Catch::Approx(-std::sin(0.77)));
    CHECK(fu.u == Catch::Approx(0.0).margin(1e-15));
  }
  SECTION("pure first-axis case") {
    const auto fu = transverse_parts(0.0, PlayerParams{kPi / 2.0, 0.0, 0.0});
    CHECK(fu.f == Catch::Approx(1.0));
    CHECK(fu.u == Catch::Approx(0.0).margin(1e-15));
  }
  SECTION("embedding solution kills both at kappa in {0, pi}") {
    const PlayerParams p{0.0, 0.9, 1.4};  // e1 = 0, tilt angles free
    for (double kappa : {0.0, kPi}) {
      const auto fu = transverse_parts(kappa, p);
      CHECK(fu.f == Catch::Approx(0.0).margin(1e-12));
      CHECK(fu.u == Catch::Approx(0.0).margin(1e-12));
    }
  }
}

TEST_CASE("interference term") {
  testutil::Rng rng(22);
  SECTION("definitional identity") {
    for (int t = 0; t < 200; ++t) {
      const auto a = rng.next_player();
      const auto b = rng.next_player();
      const double k1 = rng.next_angle(), k2 = rng.next_angle();
      const auto fa = transverse_parts(k1, a);
      const auto fb = transverse_parts(k2, b);
      CHECK(interference_z(k1, k2, a, b) ==
            Catch::Approx(fa.f * fb.f - fa.u * fb.u).margin(1e-15));
    }
  }
  SECTION("reduces to a sine product when tilts vanish") {
    for (int t = 0; t < 200; ++t) {
      const PlayerParams a{rng.next_angle(), 0.0, 0.0};
      const PlayerParams b{rng.next_angle(), 0.0, 0.0};
      const double k1 = rng.next_angle(), k2 = rng.next_angle();
      CHECK(interference_z(k1, k2, a, b) ==
            Catch::Approx(std::sin(a.e1 - k1) * std::sin(b.e1 - k2)).margin(1e-12));
    }
  }
}

TEST_CASE("outcome probabilities") {
  SECTION("aligned product state") {
    GameConfig cfg;  // defaults: trivial players, directions (0, pi), gamma 0
    CHECK(outcome_probability(0, 0, 1, 1, cfg) == Catch::Approx(1.0));
    CHECK(outcome_probability(0, 1, 1, 1, cfg) == Catch::Approx(0.0).margin(1e-15));
    CHECK(outcome_probability(1, 0, 1, 1, cfg) == Catch::Approx(0.0).margin(1e-15));
    CHECK(outcome_probability(1, 1, 1, 1, cfg) == Catch::Approx(0.0).margin(1e-15));
  }
  SECTION("argument validation") {
    GameConfig cfg;
    CHECK_THROWS_AS(outcome_probability(2, 0, 1, 1, cfg), std::invalid_argument);
    CHECK_THROWS_AS(outcome_probability(0, 0, 3, 1, cfg), std::invalid_argument);
    cfg.gamma = -1.0;
    CHECK_THROWS_AS(outcome_probability(0, 0, 1, 1, cfg), std::domain_error);
  }
}

TEST_CASE("distribution properties over random configurations") {
  testutil::Rng rng(23);
  for (int t = 0; t < 1000; ++t) {
    const GameConfig cfg = rng.next_config();
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 2; ++j) {
        const OutcomeDistribution d = outcome_distribution(i, j, cfg);
        CHECK(d.sum() == Catch::Approx(1.0).margin(1e-12));
        for (double p : {d.p00, d.p01, d.p10, d.p11}) {
          CHECK(p >= 0.0);
          CHECK(p <= 1.0 + 1e-12);
        }
      }
    }
  }
}

TEST_CASE("factorization at zero entanglement") {
  testutil::Rng rng(24);
  for (int t = 0; t < 1000; ++t) {
    GameConfig cfg = rng.next_config();
    cfg.gamma = 0.0;
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 2; ++j) {
        const double x = axis_alignment(cfg.alice_dirs.at(i), cfg.alice);
        const double y = axis_alignment(cfg.bob_dirs.at(j), cfg.bob);
        for (int m = 0; m < 2; ++m) {
          for (int n = 0; n < 2; ++n) {
            const double sm = (m == 0) ? 1.0 : -1.0;
            const double sn = (n == 0) ? 1.0 : -1.0;
            const double marginal = 0.25 * (1.0 + sm * x) * (1.0 + sn * y);
            CHECK(outcome_probability(m, n, i, j, cfg) ==
                  Catch::Approx(marginal).margin(1e-12));
          }
        }
      }
    }
  }
}

TEST_CASE("closed form agrees with the multivector pipeline") {
  testutil::Rng rng(25);
  for (int t = 0; t < 200; ++t) {
    const GameConfig cfg = rng.next_config();
    for (int m = 0; m < 2; ++m) {
      for (int n = 0; n < 2; ++n) {
        CHECK(outcome_probability_multivector(m, n, 1, 2, cfg) ==
              Catch::Approx(outcome_probability(m, n, 1, 2, cfg)).margin(1e-10));
      }
    }
  }
}
