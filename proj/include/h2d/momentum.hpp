#pragma once

// Closed-form momentum-space wavefunctions, normalized for the unitary
// transform psi(p) = (1/2pi) int e^{-i p.r} psi(r) d^2r.
//
// Two routes are provided and agree to rounding:
//   Legendre:   (-i)^{|m|} sqrt((n-|m|)!/(2 pi (n+|m|)!)) (2q0/(p^2+q0^2))^{3/2}
//               P_n^{|m|}(q) e^{i m phi_p}
//   Gegenbauer: N_nm (2n+1)/(2|m|+1) (-4i)^{|m|} q0^{|m|+1} (3/2)_{|m|}
//               C_{n-|m|}^{|m|+1/2}(q) (p_x + i sgn(m) p_y)^{|m|} / (p^2+q0^2)^{|m|+3/2}
// with q = (p^2 - q0^2)/(p^2 + q0^2) and P_n^m without the Condon-Shortley
// phase. The (-i)^{|m|} is what the Fourier transform produces in that
// convention; with Condon-Shortley P_n^m it reads i^{|m|}.

#define H2D_MOMENTUM_INCLUDED 1

#include "h2d/polys.hpp"
#include "h2d/position.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace h2d::momentum {

inline FockVariable q_of_p(double p, double q0) {
  if (!(p >= 0.0)) throw std::invalid_argument("q_of_p: p must be nonnegative");
  if (!(q0 > 0.0)) throw std::invalid_argument("q_of_p: q0 must be positive");
  const double p2 = p * p;
  const double s = q0 * q0;
  return FockVariable((p2 - s) / (p2 + s));
}

/// (-i)^k for integer k >= 0, exact.
inline std::complex<double> minus_i_pow(int k) {
  switch (k % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

inline double amplitude_legendre(const QuantumNumbers& qn, double p) {
  const int n = qn.n();
  const int am = qn.abs_m();
  const double q0 = position::physical_q0(n);
  const double q = q_of_p(p, q0).value();
  const double pref = std::sqrt(polys::factorial(n - am) /
                                (2.0 * std::numbers::pi * polys::factorial(n + am)));
  const double sum = p * p + q0 * q0;
  const double env = std::pow(2.0 * q0 / sum, 1.5);
  // sqrt(1 - q^2) = 2 p q0 / (p^2 + q0^2), exact in p
  return pref * env * polys::assoc_legendre_cs(n, am, q, 2.0 * p * q0 / sum);
}

/// Associated-Legendre form.
inline std::complex<double> psi_momentum(const QuantumNumbers& qn, const MomentumPoint& mp) {
  const double a = amplitude_legendre(qn, mp.p());
  const double ang = qn.m() * mp.phi_p();
  return minus_i_pow(qn.abs_m()) * std::complex<double>(a * std::cos(ang), a * std::sin(ang));
}

/// Gegenbauer form. (p_x + i p_y)^m is taken in polar form p^{|m|} e^{i m phi_p}.
inline std::complex<double> psi_momentum_gegenbauer(const QuantumNumbers& qn,
                                                    const MomentumPoint& mp) {
  const int n = qn.n();
  const int am = qn.abs_m();
  const double q0 = position::physical_q0(n);
  const double p = mp.p();
  const double s = p * p + q0 * q0;
  const double q = q_of_p(p, q0).value();
  const double c = polys::gegenbauer(n - am, polys::GegenbauerOrder::half_integer(am), q);
  const double mag = position::normalization(qn) * (2.0 * n + 1.0) / (2.0 * am + 1.0) *
                     std::pow(4.0 * q0, am) * q0 * polys::pochhammer(1.5, am) * c *
                     std::pow(p, am) / std::pow(s, am + 1.5);
  const double ang = qn.m() * mp.phi_p();
  return minus_i_pow(am) * std::complex<double>(mag * std::cos(ang), mag * std::sin(ang));
}

}  // namespace h2d::momentum
