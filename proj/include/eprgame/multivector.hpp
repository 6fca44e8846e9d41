#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace eprgame::ga {

namespace detail {

// Canonical blade order: 1, s1, s2, s3, s12, s13, s23, s123.
// Each blade is also representable as a generator bitmask (bit k <-> sigma_{k+1}).
inline constexpr std::array<unsigned, 8> kBladeMask{0u, 1u, 2u, 4u, 3u, 5u, 6u, 7u};
inline constexpr std::array<unsigned, 8> kMaskToIndex{0u, 1u, 2u, 4u, 3u, 5u, 6u, 7u};

// Sign from reordering the concatenated generator list of blades a, b into
// canonical ascending order. Euclidean metric, so squared generators drop
// without extra signs.
constexpr int reorder_sign(unsigned a, unsigned b) {
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

struct BladeProduct {
  unsigned index;
  int sign;
};

constexpr std::array<std::array<BladeProduct, 8>, 8> make_product_table() {
  std::array<std::array<BladeProduct, 8>, 8> t{};
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      const unsigned a = kBladeMask[i];
      const unsigned b = kBladeMask[j];
      t[i][j] = BladeProduct{kMaskToIndex[a ^ b], reorder_sign(a, b)};
    }
  }
  return t;
}

inline constexpr auto kProductTable = make_product_table();

constexpr int blade_grade(std::size_t index) {
  return std::popcount(kBladeMask[index]);
}

// Reversion flips the sign of grade-2 and grade-3 blades.
constexpr std::array<double, 8> make_reversion_signs() {
  std::array<double, 8> s{};
  for (std::size_t i = 0; i < 8; ++i) {
    const int g = blade_grade(i);
    s[i] = (g == 2 || g == 3) ? -1.0 : 1.0;
  }
  return s;
}

inline constexpr auto kReversionSign = make_reversion_signs();

}  // namespace detail

/// Element of the real Clifford algebra Cl(3,0), stored as eight coefficients
/// over the blade basis {1, s1, s2, s3, s12, s13, s23, s123}.
class Multivector3 {
 public:
  constexpr Multivector3() = default;
  explicit constexpr Multivector3(const std::array<double, 8>& coeffs) : c_(coeffs) {}

  static constexpr Multivector3 scalar(double value) {
    Multivector3 m;
    m.c_[0] = value;
    return m;
  }

  // sigma_i, i in {1,2,3}
  static constexpr Multivector3 sigma(int i) {
    Multivector3 m;
    m.c_[static_cast<std::size_t>(i)] = 1.0;
    return m;
  }

  // The pseudoscalar iota = s1 s2 s3; squares to -1 and commutes with everything.
  static constexpr Multivector3 iota() {
    Multivector3 m;
    m.c_[7] = 1.0;
    return m;
  }

  // iota * sigma_i: the bivector duals. iota s1 = s23, iota s2 = -s13, iota s3 = s12.
  static constexpr Multivector3 iota_sigma(int i) {
    Multivector3 m;
    switch (i) {
      case 1: m.c_[6] = 1.0; break;
      case 2: m.c_[5] = -1.0; break;
      case 3: m.c_[4] = 1.0; break;
      default: break;
    }
    return m;
  }

  constexpr double operator[](std::size_t i) const { return c_[i]; }
  constexpr double& operator[](std::size_t i) { return c_[i]; }
  constexpr const std::array<double, 8>& coefficients() const { return c_; }

  constexpr double scalar_part() const { return c_[0]; }

  friend constexpr Multivector3 operator+(const Multivector3& a, const Multivector3& b) {
    Multivector3 r;
    for (std::size_t i = 0; i < 8; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }

  friend constexpr Multivector3 operator-(const Multivector3& a, const Multivector3& b) {
    Multivector3 r;
    for (std::size_t i = 0; i < 8; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }

  friend constexpr Multivector3 operator-(const Multivector3& a) {
    Multivector3 r;
    for (std::size_t i = 0; i < 8; ++i) r.c_[i] = -a.c_[i];
    return r;
  }

  friend constexpr Multivector3 operator*(double s, const Multivector3& a) {
    Multivector3 r;
    for (std::size_t i = 0; i < 8; ++i) r.c_[i] = s * a.c_[i];
    return r;
  }

  friend constexpr Multivector3 operator*(const Multivector3& a, double s) { return s * a; }

  // Geometric product via the precomputed blade table.
  friend constexpr Multivector3 operator*(const Multivector3& a, const Multivector3& b) {
    Multivector3 r;
    for (std::size_t i = 0; i < 8; ++i) {
      if (a.c_[i] == 0.0) continue;
      for (std::size_t j = 0; j < 8; ++j) {
        if (b.c_[j] == 0.0) continue;
        const auto p = detail::kProductTable[i][j];
        r.c_[p.index] += p.sign * a.c_[i] * b.c_[j];
      }
    }
    return r;
  }

 private:
  std::array<double, 8> c_{};
};

constexpr Multivector3 geometric_product(const Multivector3& a, const Multivector3& b) {
  return a * b;
}

constexpr Multivector3 reverse(const Multivector3& a) {
  Multivector3 r;
  for (std::size_t i = 0; i < 8; ++i) r[i] = detail::kReversionSign[i] * a[i];
  return r;
}

inline double max_abs_difference(const Multivector3& a, const Multivector3& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 8; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

/// Unit even-grade multivector; implements a rotation (single-qubit unitary)
/// acting by left multiplication on spinors.
struct Rotor {
  Multivector3 value;

  bool is_even(double tol = 1e-12) const {
    for (std::size_t i : {1u, 2u, 3u, 7u}) {
      if (std::abs(value[i]) > tol) return false;
    }
    return true;
  }

  bool is_unit(double tol = 1e-12) const {
    const Multivector3 p = reverse(value) * value;
    return max_abs_difference(p, Multivector3::scalar(1.0)) <= tol;
  }
};

// exp(-(theta/2) iota sigma_axis) = cos(theta/2) - sin(theta/2) iota sigma_axis
inline Multivector3 bivector_exponential(double theta, int axis) {
  return Multivector3::scalar(std::cos(theta / 2.0)) -
         std::sin(theta / 2.0) * Multivector3::iota_sigma(axis);
}

/// Euler-angle rotor: exp(-t3 is3/2) exp(-t1 is2/2) exp(-t2 is3/2).
inline Rotor rotor_from_euler(double t1, double t2, double t3) {
  return Rotor{bivector_exponential(t3, 3) * bivector_exponential(t1, 2) *
               bivector_exponential(t2, 3)};
}

/// Even-subalgebra coordinates of a one-qubit state:
/// psi = a0 + a1 is1 + a2 is2 + a3 is3  <->  ket (a0 + i a3, -a2 + i a1).
struct Spinor {
  double a0 = 1.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;

  constexpr Multivector3 to_multivector() const {
    Multivector3 m;
    m[0] = a0;
    m[6] = a1;   // is1 = s23
    m[5] = -a2;  // is2 = -s13
    m[4] = a3;   // is3 = s12
    return m;
  }

  static constexpr Spinor from_multivector(const Multivector3& m) {
    return Spinor{m[0], m[6], -m[5], m[4]};
  }

  constexpr double norm_squared() const { return a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3; }
};

/// Element of the two-particle algebra: 64 coefficients indexed by a pair of
/// Cl(3,0) blades. The particle-1 and particle-2 factors commute, so the
/// product acts factorwise and reversion applies per factor.
class TwoParticleMultivector {
 public:
  constexpr TwoParticleMultivector() = default;

  static constexpr TwoParticleMultivector outer(const Multivector3& p1,
                                                const Multivector3& p2) {
    TwoParticleMultivector r;
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) {
        r.c_[8 * i + j] = p1[i] * p2[j];
      }
    }
    return r;
  }

  static constexpr TwoParticleMultivector identity() {
    return outer(Multivector3::scalar(1.0), Multivector3::scalar(1.0));
  }

  constexpr double at(std::size_t blade1, std::size_t blade2) const {
    return c_[8 * blade1 + blade2];
  }
  constexpr double& at(std::size_t blade1, std::size_t blade2) {
    return c_[8 * blade1 + blade2];
  }

  constexpr double scalar_part() const { return c_[0]; }

  friend constexpr TwoParticleMultivector operator+(const TwoParticleMultivector& a,
                                                    const TwoParticleMultivector& b) {
    TwoParticleMultivector r;
    for (std::size_t i = 0; i < 64; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }

  friend constexpr TwoParticleMultivector operator-(const TwoParticleMultivector& a,
                                                    const TwoParticleMultivector& b) {
    TwoParticleMultivector r;
    for (std::size_t i = 0; i < 64; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }

  friend constexpr TwoParticleMultivector operator*(double s,
                                                    const TwoParticleMultivector& a) {
    TwoParticleMultivector r;
    for (std::size_t i = 0; i < 64; ++i) r.c_[i] = s * a.c_[i];
    return r;
  }

  friend constexpr TwoParticleMultivector operator*(const TwoParticleMultivector& a,
                                                    const TwoParticleMultivector& b) {
    TwoParticleMultivector r;
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) {
        const double aij = a.c_[8 * i + j];
        if (aij == 0.0) continue;
        for (std::size_t k = 0; k < 8; ++k) {
          const auto p1 = detail::kProductTable[i][k];
          for (std::size_t l = 0; l < 8; ++l) {
            const double bkl = b.c_[8 * k + l];
            if (bkl == 0.0) continue;
            const auto p2 = detail::kProductTable[j][l];
            r.c_[8 * p1.index + p2.index] += p1.sign * p2.sign * aij * bkl;
          }
        }
      }
    }
    return r;
  }

 private:
  std::array<double, 64> c_{};
};

constexpr TwoParticleMultivector reverse(const TwoParticleMultivector& a) {
  TwoParticleMultivector r;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      r.at(i, j) = detail::kReversionSign[i] * detail::kReversionSign[j] * a.at(i, j);
    }
  }
  return r;
}

inline double max_abs_difference(const TwoParticleMultivector& a,
                                 const TwoParticleMultivector& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      d = std::max(d, std::abs(a.at(i, j) - b.at(i, j)));
    }
  }
  return d;
}

inline void require_entanglement_range(double gamma) {
  constexpr double kPi = 3.14159265358979323846;
  if (!(gamma >= 0.0 && gamma <= kPi / 2.0 + 1e-12)) {
    throw std::domain_error("entanglement angle must lie in [0, pi/2], got " +
                            std::to_string(gamma));
  }
}

/// psi = A B (cos(gamma/2) + sin(gamma/2) is2^1 is2^2), the Schmidt-form
/// two-qubit state with per-particle rotors applied.
inline TwoParticleMultivector two_particle_state(const Rotor& a, const Rotor& b,
                                                 double gamma) {
  require_entanglement_range(gamma);
  const Multivector3 is2 = Multivector3::iota_sigma(2);
  const TwoParticleMultivector core =
      std::cos(gamma / 2.0) * TwoParticleMultivector::identity() +
      std::sin(gamma / 2.0) * TwoParticleMultivector::outer(is2, is2);
  return TwoParticleMultivector::outer(a.value, b.value) * core;
}

// E = (1 - is3^1 is3^2)/2 and J = (is3^1 + is3^2)/2, the two observables of
// the two-particle probability formula.
inline TwoParticleMultivector observable_e() {
  const Multivector3 is3 = Multivector3::iota_sigma(3);
  return 0.5 * (TwoParticleMultivector::identity() -
                TwoParticleMultivector::outer(is3, is3));
}

inline TwoParticleMultivector observable_j() {
  const Multivector3 is3 = Multivector3::iota_sigma(3);
  const Multivector3 one = Multivector3::scalar(1.0);
  return 0.5 * (TwoParticleMultivector::outer(is3, one) +
                TwoParticleMultivector::outer(one, is3));
}

inline TwoParticleMultivector psi_e_psi(const TwoParticleMultivector& psi) {
  return psi * observable_e() * reverse(psi);
}

inline TwoParticleMultivector psi_j_psi(const TwoParticleMultivector& psi) {
  return psi * observable_j() * reverse(psi);
}

/// Separable measurement state phi = R S with R = exp(-iota k1 s2^1),
/// S = exp(-iota k2 s2^2). The full angle sits in the exponent, so k here is
/// half the Bloch-sphere rotation angle.
inline TwoParticleMultivector measurement_spinors(double k1, double k2) {
  const Multivector3 is2 = Multivector3::iota_sigma(2);
  const Multivector3 r = Multivector3::scalar(std::cos(k1)) - std::sin(k1) * is2;
  const Multivector3 s = Multivector3::scalar(std::cos(k2)) - std::sin(k2) * is2;
  return TwoParticleMultivector::outer(r, s);
}

/// Measurement state for outcome (m, n) along Bloch directions k1, k2
/// (kappa measured as the Bloch rotation angle about sigma_2, so the spinor
/// exponent carries kappa/2). The |1> outcome enters as a right factor -is2.
inline TwoParticleMultivector measurement_state(double k1, double k2, int m, int n) {
  const Multivector3 is2 = Multivector3::iota_sigma(2);
  Multivector3 r = Multivector3::scalar(std::cos(k1 / 2.0)) - std::sin(k1 / 2.0) * is2;
  Multivector3 s = Multivector3::scalar(std::cos(k2 / 2.0)) - std::sin(k2 / 2.0) * is2;
  if (m == 1) r = r * (-is2);
  if (n == 1) s = s * (-is2);
  return TwoParticleMultivector::outer(r, s);
}

/// Probability that state psi projects onto the separable state phi:
/// <psi E psi~ phi E phi~>_0 - <psi J psi~ phi J phi~>_0 (two-particle case).
inline double probability_ga(const TwoParticleMultivector& psi,
                             const TwoParticleMultivector& phi) {
  const TwoParticleMultivector pe = psi_e_psi(psi);
  const TwoParticleMultivector pj = psi_j_psi(psi);
  const TwoParticleMultivector fe = psi_e_psi(phi);
  const TwoParticleMultivector fj = psi_j_psi(phi);
  const double p = (pe * fe).scalar_part() - (pj * fj).scalar_part();
  constexpr double kGuard = 1e-9;
  if (p < -kGuard || p > 1.0 + kGuard) {
    throw std::runtime_error("probability outside [0,1]: " + std::to_string(p) +
                             " (measurement convention violated)");
  }
  return p;
}

}  // namespace eprgame::ga
