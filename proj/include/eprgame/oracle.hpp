#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "eprgame/epr.hpp"

namespace eprgame::oracle {

using Complex = std::complex<double>;

/// Two-qubit state vector over |00>, |01>, |10>, |11>.
using Ket2 = std::array<Complex, 4>;

/// 2x2 complex matrix, row-major.
struct SingleQubitUnitary {
  std::array<Complex, 4> m{};

  Complex at(int r, int c) const { return m[static_cast<std::size_t>(2 * r + c)]; }
};

inline double norm_squared(const Ket2& psi) {
  double n = 0.0;
  for (const auto& a : psi) n += std::norm(a);
  return n;
}

/// Euler-decomposed unitary Rz(t3) Ry(t1) Rz(t2), matching the rotor
/// convention under the spinor map.
inline SingleQubitUnitary unitary_from_euler(double t1, double t2, double t3) {
  const Complex i(0.0, 1.0);
  const Complex ez2 = std::exp(-i * (t2 / 2.0));  // Rz diagonal entries
  const Complex ez3 = std::exp(-i * (t3 / 2.0));
  const double cy = std::cos(t1 / 2.0);
  const double sy = std::sin(t1 / 2.0);
  // Rz(t3) * Ry(t1) * Rz(t2)
  SingleQubitUnitary u;
  u.m = {ez3 * cy * ez2, ez3 * (-sy) * std::conj(ez2),
         std::conj(ez3) * sy * ez2, std::conj(ez3) * cy * std::conj(ez2)};
  return u;
}

inline std::array<Complex, 2> apply(const SingleQubitUnitary& u,
                                    const std::array<Complex, 2>& v) {
  return {u.at(0, 0) * v[0] + u.at(0, 1) * v[1],
          u.at(1, 0) * v[0] + u.at(1, 1) * v[1]};
}

/// (U_a (x) U_b)(cos(g/2)|00> + sin(g/2)|11>).
inline Ket2 build_state(double gamma, const epr::PlayerParams& a,
                        const epr::PlayerParams& b) {
  ga::require_entanglement_range(gamma);
  const SingleQubitUnitary ua = unitary_from_euler(a.e1, a.e2, a.e3);
  const SingleQubitUnitary ub = unitary_from_euler(b.e1, b.e2, b.e3);
  const double c = std::cos(gamma / 2.0);
  const double s = std::sin(gamma / 2.0);
  Ket2 psi{};
  for (int r1 = 0; r1 < 2; ++r1) {
    for (int r2 = 0; r2 < 2; ++r2) {
      // contributions from |00> and |11>
      psi[static_cast<std::size_t>(2 * r1 + r2)] =
          c * ua.at(r1, 0) * ub.at(r2, 0) + s * ua.at(r1, 1) * ub.at(r2, 1);
    }
  }
  return psi;
}

namespace detail {

// Projector onto outcome m along the direction (sin k, 0, cos k):
// P_m = (I + (-1)^m (sin k sx + cos k sz)) / 2, real-valued.
inline std::array<double, 4> outcome_projector(int m, double kappa) {
  const double s = (m == 0) ? 1.0 : -1.0;
  const double nx = std::sin(kappa);
  const double nz = std::cos(kappa);
  return {0.5 * (1.0 + s * nz), 0.5 * s * nx, 0.5 * s * nx, 0.5 * (1.0 - s * nz)};
}

}  // namespace detail

/// Joint projective-measurement probability <psi| P_m (x) P_n |psi>, with each
/// direction parameterized by its Bloch rotation angle about sigma_y.
inline double joint_probability(const Ket2& psi, int m, int n, double k1, double k2) {
  epr::check_outcome_bit(m, "m");
  epr::check_outcome_bit(n, "n");
  if (std::abs(norm_squared(psi) - 1.0) > 1e-10) {
    throw std::invalid_argument("state vector is not normalized");
  }
  const auto p1 = detail::outcome_projector(m, k1);
  const auto p2 = detail::outcome_projector(n, k2);
  Ket2 projected{};
  for (int r1 = 0; r1 < 2; ++r1) {
    for (int r2 = 0; r2 < 2; ++r2) {
      Complex acc(0.0, 0.0);
      for (int c1 = 0; c1 < 2; ++c1) {
        for (int c2 = 0; c2 < 2; ++c2) {
          acc += p1[static_cast<std::size_t>(2 * r1 + c1)] *
                 p2[static_cast<std::size_t>(2 * r2 + c2)] *
                 psi[static_cast<std::size_t>(2 * c1 + c2)];
        }
      }
      projected[static_cast<std::size_t>(2 * r1 + r2)] = acc;
    }
  }
  double p = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    p += std::real(std::conj(psi[i]) * projected[i]);
  }
  return p;
}

/// Map an even-subalgebra spinor to its ket (a0 + i a3, -a2 + i a1).
inline std::array<Complex, 2> spinor_to_ket(const ga::Spinor& s) {
  return {Complex(s.a0, s.a3), Complex(-s.a2, s.a1)};
}

inline ga::Spinor ket_to_spinor(const std::array<Complex, 2>& k) {
  return ga::Spinor{k[0].real(), k[1].imag(), -k[1].real(), k[0].imag()};
}

}  // namespace eprgame::oracle
