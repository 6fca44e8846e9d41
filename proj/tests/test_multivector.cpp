#include <catch2/catch_amalgamated.hpp>

#include "eprgame/multivector.hpp"
#include "eprgame/epr.hpp"
#include "test_helpers.hpp"

using namespace eprgame::ga;
using testutil::kPi;

namespace {

Multivector3 random_multivector(testutil::Rng& rng) {
  Multivector3 m;
  for (std::size_t i = 0; i < 8; ++i) m[i] = rng.next_angle();
  return m;
}

}  // namespace

TEST_CASE("generator algebra") {
  const auto one = Multivector3::scalar(1.0);
  const auto iota = Multivector3::iota();

  SECTION("squares and anticommutation, exact in coefficients") {
    for (int i = 1; i <= 3; ++i) {
      CHECK(max_abs_difference(Multivector3::sigma(i) * Multivector3::sigma(i), one) == 0.0);
      for (int j = 1; j <= 3; ++j) {
        if (i == j) continue;
        const auto anti = Multivector3::sigma(i) * Multivector3::sigma(j) +
                          Multivector3::sigma(j) * Multivector3::sigma(i);
        CHECK(max_abs_difference(anti, Multivector3()) == 0.0);
      }
    }
  }
  SECTION("s1 s2 = iota s3") {
    const auto lhs = Multivector3::sigma(1) * Multivector3::sigma(2);
    CHECK(max_abs_difference(lhs, iota * Multivector3::sigma(3)) == 0.0);
  }
  SECTION("iota squares to -1 and is central") {
    CHECK(max_abs_difference(iota * iota, -one) == 0.0);
    testutil::Rng rng(11);
    for (int t = 0; t < 100; ++t) {
      const auto m = random_multivector(rng);
      CHECK(max_abs_difference(iota * m, m * iota) == 0.0);
    }
  }
}

TEST_CASE("geometric product is associative and bilinear") {
  testutil::Rng rng(12);
  for (int t = 0; t < 1000; ++t) {
    const auto a = random_multivector(rng);
    const auto b = random_multivector(rng);
    const auto c = random_multivector(rng);
    CHECK(max_abs_difference((a * b) * c, a * (b * c)) < 1e-12);
  }
  const auto a = random_multivector(rng);
  const auto b = random_multivector(rng);
  const auto c = random_multivector(rng);
  CHECK(max_abs_difference(a * (b + c), a * b + a * c) < 1e-12);
}

TEST_CASE("reversion") {
  const auto one = Multivector3::scalar(1.0);
  SECTION("bivector sign flip") {
    const auto m = one + Multivector3::iota_sigma(2);
    CHECK(max_abs_difference(reverse(m), one - Multivector3::iota_sigma(2)) == 0.0);
  }
  SECTION("reverse(iota) = -iota") {
    CHECK(max_abs_difference(reverse(Multivector3::iota()), -Multivector3::iota()) == 0.0);
  }
  SECTION("antihomomorphism") {
    testutil::Rng rng(13);
    for (int t = 0; t < 200; ++t) {
      const auto a = random_multivector(rng);
      const auto b = random_multivector(rng);
      CHECK(max_abs_difference(reverse(a * b), reverse(b) * reverse(a)) < 1e-12);
    }
  }
}

TEST_CASE("rotors") {
  SECTION("identity, half-turn, double cover") {
    CHECK(max_abs_difference(rotor_from_euler(0, 0, 0).value,
                             Multivector3::scalar(1.0)) < 1e-15);
    CHECK(max_abs_difference(rotor_from_euler(kPi, 0, 0).value,
                             -Multivector3::iota_sigma(2)) < 1e-15);
    CHECK(max_abs_difference(rotor_from_euler(0, 2 * kPi, 0).value,
                             Multivector3::scalar(-1.0)) < 1e-15);
  }
  SECTION("unit even elements for random angles") {
    testutil::Rng rng(14);
    for (int t = 0; t < 1000; ++t) {
      const Rotor r = rotor_from_euler(rng.next_angle(), rng.next_angle(), rng.next_angle());
      CHECK(r.is_even());
      CHECK(r.is_unit());
    }
  }
}

TEST_CASE("spinor map round trip") {
  testutil::Rng rng(15);
  for (int t = 0; t < 100; ++t) {
    const Spinor s{rng.next_angle(), rng.next_angle(), rng.next_angle(), rng.next_angle()};
    const Spinor back = Spinor::from_multivector(s.to_multivector());
    CHECK(back.a0 == s.a0);
    CHECK(back.a1 == s.a1);
    CHECK(back.a2 == s.a2);
    CHECK(back.a3 == s.a3);
  }
}

TEST_CASE("observables E and J") {
  const auto e = observable_e();
  const auto j = observable_j();
  CHECK(max_abs_difference(e * e, e) < 1e-15);
  CHECK(max_abs_difference(j * j, -1.0 * e) < 1e-15);
  CHECK(max_abs_difference(reverse(e), e) < 1e-15);
}

TEST_CASE("two-particle state construction") {
  const Rotor id{Multivector3::scalar(1.0)};
  SECTION("gamma = 0 is the product state") {
    CHECK(max_abs_difference(two_particle_state(id, id, 0.0),
                             TwoParticleMultivector::identity()) < 1e-15);
  }
  SECTION("gamma = pi/2 with identity rotors") {
    const auto psi = two_particle_state(id, id, kPi / 2.0);
    const double r = 1.0 / std::sqrt(2.0);
    const Multivector3 is2 = Multivector3::iota_sigma(2);
    const auto expected = r * TwoParticleMultivector::identity() +
                          r * TwoParticleMultivector::outer(is2, is2);
    CHECK(max_abs_difference(psi, expected) < 1e-15);
  }
  SECTION("gamma out of range rejected") {
    CHECK_THROWS_AS(two_particle_state(id, id, -0.2), std::domain_error);
    CHECK_THROWS_AS(two_particle_state(id, id, 2.0), std::domain_error);
  }
}

TEST_CASE("sandwiched observables match their expanded forms") {
  testutil::Rng rng(16);
  const Multivector3 one = Multivector3::scalar(1.0);
  for (int t = 0; t < 1000; ++t) {
    const Rotor a = rotor_from_euler(rng.next_angle(), rng.next_angle(), rng.next_angle());
    const Rotor b = rotor_from_euler(rng.next_angle(), rng.next_angle(), rng.next_angle());
    const double g = rng.next_gamma();
    const auto psi = two_particle_state(a, b, g);

    // conjugated axes iota A s_k A~ per particle
    const auto conj = [](const Rotor& r, int k) {
      return Multivector3::iota() * (r.value * Multivector3::sigma(k) * reverse(r.value));
    };
    const auto a1 = conj(a, 1), a2 = conj(a, 2), a3 = conj(a, 3);
    const auto b1 = conj(b, 1), b2 = conj(b, 2), b3 = conj(b, 3);

    const auto e_expected =
        0.5 * (TwoParticleMultivector::identity() - TwoParticleMultivector::outer(a3, b3) +
               std::sin(g) * (TwoParticleMultivector::outer(a2, b2) -
                              TwoParticleMultivector::outer(a1, b1)));
    const auto j_expected =
        (0.5 * std::cos(g)) * (TwoParticleMultivector::outer(a3, one) +
                               TwoParticleMultivector::outer(one, b3));

    CHECK(max_abs_difference(psi_e_psi(psi), e_expected) < 1e-12);
    CHECK(max_abs_difference(psi_j_psi(psi), j_expected) < 1e-12);
    // observables are self-reverse
    CHECK(max_abs_difference(reverse(psi_e_psi(psi)), psi_e_psi(psi)) < 1e-12);
  }
}

TEST_CASE("sandwiched observables at fixed parameters") {
  const Rotor id{Multivector3::scalar(1.0)};
  const Rotor flip = rotor_from_euler(kPi, 0, 0);
  const Multivector3 one = Multivector3::scalar(1.0);
  const Multivector3 is3 = Multivector3::iota_sigma(3);

  CHECK(max_abs_difference(psi_e_psi(two_particle_state(id, id, 0.0)), observable_e()) <
        1e-15);
  CHECK(max_abs_difference(psi_j_psi(two_particle_state(id, id, 0.0)), observable_j()) <
        1e-15);
  // cos(pi/2) kills the J observable
  const auto j_bell = psi_j_psi(two_particle_state(id, flip, kPi / 2.0));
  CHECK(max_abs_difference(j_bell, TwoParticleMultivector()) < 1e-15);
  // a half-turn on particle 1 flips its sigma_3 axis
  const auto j_flipped = psi_j_psi(two_particle_state(flip, id, 0.0));
  const auto expected = 0.5 * (TwoParticleMultivector::outer(-1.0 * is3, one) +
                               TwoParticleMultivector::outer(one, is3));
  CHECK(max_abs_difference(j_flipped, expected) < 1e-15);
}

TEST_CASE("measurement spinors") {
  SECTION("identity and quarter turn") {
    CHECK(max_abs_difference(measurement_spinors(0, 0),
                             TwoParticleMultivector::identity()) < 1e-15);
    const auto m = measurement_spinors(kPi / 2.0, 0);
    const auto expected = TwoParticleMultivector::outer(-Multivector3::iota_sigma(2),
                                                        Multivector3::scalar(1.0));
    CHECK(max_abs_difference(m, expected) < 1e-15);
  }
  SECTION("normalization") {
    testutil::Rng rng(17);
    for (int t = 0; t < 200; ++t) {
      const auto phi = measurement_spinors(rng.next_angle(), rng.next_angle());
      CHECK(max_abs_difference(reverse(phi) * phi, TwoParticleMultivector::identity()) <
            1e-12);
    }
  }
}

TEST_CASE("projection probabilities") {
  const Rotor id{Multivector3::scalar(1.0)};
  const auto product = two_particle_state(id, id, 0.0);
  const auto bell = two_particle_state(id, id, kPi / 2.0);
  const auto phi00 = TwoParticleMultivector::identity();

  CHECK(probability_ga(product, phi00) == Catch::Approx(1.0).margin(1e-12));
  CHECK(probability_ga(bell, phi00) == Catch::Approx(0.5).margin(1e-12));

  // all four outcomes of a rotated measurement on |00>
  const double k1 = kPi / 2.0;
  double total = 0.0;
  for (int m = 0; m < 2; ++m) {
    for (int n = 0; n < 2; ++n) {
      total += probability_ga(product, measurement_state(k1, 0.0, m, n));
    }
  }
  CHECK(total == Catch::Approx(1.0).margin(1e-12));
  // Bloch angle pi/2 about sigma_2 splits the |0> outcome evenly
  CHECK(probability_ga(product, measurement_state(k1, 0.0, 0, 0)) ==
        Catch::Approx(0.5).margin(1e-12));
  CHECK(probability_ga(product, measurement_state(k1, 0.0, 0, 1)) ==
        Catch::Approx(0.0).margin(1e-12));
}
