#pragma once

// Bound states of the planar hydrogen atom in position space.
//
// Units: hbar = 2 mu = e^2/2 = 1, in which H = -Laplacian - 2/rho and the
// bound-state energy is E = -q0^2. The length unit is then the Bohr radius
// hbar^2/(mu e^2) and the energy unit the Rydberg mu e^4/(2 hbar^2), so
// E_n = -1/(n+1/2)^2 reads E_n = -13.6057 eV/(n+1/2)^2.

#include "h2d/polys.hpp"
#include "h2d/types.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

namespace h2d::position {

inline double physical_q0(int n) { return 1.0 / (n + 0.5); }

inline BoundState make_bound_state(const QuantumNumbers& qn) {
  const double q0 = physical_q0(qn.n());
  return {qn, q0, -q0 * q0};
}

inline BoundState make_bound_state(int n, int m) { return make_bound_state(QuantumNumbers(n, m)); }

/// Normalization of v^{|m|} e^{-v/2} L_{n-|m|}^{2|m|}(v) e^{im phi}, v = 2 q0 rho,
/// for an arbitrary scale q0 (the Sturmian family):
///   sqrt(2 q0^2 (n-|m|)! / (pi (2n+1) (n+|m|)!)).
inline double normalization_at(const QuantumNumbers& qn, double q0) {
  if (!(q0 > 0.0)) throw std::invalid_argument("normalization_at: q0 must be positive");
  const int n = qn.n();
  const int am = qn.abs_m();
  return std::sqrt(2.0 * q0 * q0 * polys::factorial(n - am) /
                   (std::numbers::pi * (2 * n + 1) * polys::factorial(n + am)));
}

/// N_nm = sqrt(q0^3 (n-|m|)! / (pi (n+|m|)!)) at q0 = 1/(n+1/2).
inline double normalization(const QuantumNumbers& qn) {
  return normalization_at(qn, physical_q0(qn.n()));
}

/// Unnormalized radial factor v^{|m|} e^{-v/2} L_{n-|m|}^{2|m|}(v).
inline double radial_shape(const QuantumNumbers& qn, double q0, double rho) {
  const int am = qn.abs_m();
  const double v = 2.0 * q0 * rho;
  return std::pow(v, am) * std::exp(-0.5 * v) * polys::laguerre(qn.n() - am, 2.0 * am, v);
}

/// Normalized radial part R_nm(rho) of the physical state.
inline double radial(const QuantumNumbers& qn, double rho) {
  const double q0 = physical_q0(qn.n());
  return normalization(qn) * radial_shape(qn, q0, rho);
}

/// Psi_nm(rho, phi) = R_nm(rho) e^{i m phi}.
inline std::complex<double> psi_position(const QuantumNumbers& qn, const PolarPoint& pt) {
  const double r = radial(qn, pt.rho());
  const double a = qn.m() * pt.phi();
  return {r * std::cos(a), r * std::sin(a)};
}

/// Fixed-q0 basis function N^{-1} Psi: e^{-q0 rho} (2 q0 rho)^{|m|}
/// L_{n-|m|}^{2|m|}(2 q0 rho) e^{i m phi}. These are the coefficients of the
/// coordinate-space generating function.
inline std::complex<double> sturmian_unnormalized(const QuantumNumbers& qn, double q0,
                                                  const PolarPoint& pt) {
  const double r = radial_shape(qn, q0, pt.rho());
  const double a = qn.m() * pt.phi();
  return {r * std::cos(a), r * std::sin(a)};
}

/// Left side of the radial equation
///   R'' + R'/rho + (2/rho - q0^2 - m^2/rho^2) R
/// at the closed-form R_nm, derivatives by central differences with
/// h = 1e-5 max(rho, 1).
inline double radial_ode_residual(const QuantumNumbers& qn, double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("radial_ode_residual: rho must be positive");
  const double q0 = physical_q0(qn.n());
  const double h = 1e-5 * std::max(rho, 1.0);
  const double rm = radial(qn, rho - h);
  const double r0 = radial(qn, rho);
  const double rp = radial(qn, rho + h);
  const double d2 = (rp - 2.0 * r0 + rm) / (h * h);
  const double d1 = (rp - rm) / (2.0 * h);
  const double m2 = double(qn.m()) * qn.m();
  return d2 + d1 / rho + (2.0 / rho - q0 * q0 - m2 / (rho * rho)) * r0;
}

}  // namespace h2d::position
