#pragma once

// Numerical Fourier-transform oracle
//   psi(p) = (1/2pi) int e^{-i p.r} psi(r) d^2r
// built only on the position-space wavefunctions. It must not depend on the
// closed-form momentum module.
//
// Two routes:
//   hankel_reduced: the plane-wave expansion collapses the angular integral to
//       (-i)^{|m|} e^{i m phi_p} int_0^inf R_nm(rho) J_{|m|}(p rho) rho drho
//   direct_2d: trapezoid in phi times a radial rule, no Bessel functions.
//
// Radial rule: Gauss-Laguerre in w = q0 rho while p/q0 is small (the integrand
// is then polynomial x e^{-w} x a slowly varying Bessel factor); otherwise
// Gauss-Legendre panels half a Bessel period wide out to the radius where the
// radial envelope is negligible.

#include "h2d/polys.hpp"
#include "h2d/position.hpp"
#include "h2d/quadrature.hpp"
#include "h2d/types.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace h2d::ftoracle {

using cplx = std::complex<double>;

enum class Method { hankel_reduced, direct_2d };

struct OracleConfig {
  int radial_nodes = 512;
  double p_max_tail_tol = 1e-9;
  Method method = Method::hankel_reduced;

  void validate() const {
    if (radial_nodes < 64) throw std::invalid_argument("OracleConfig: radial_nodes must be >= 64");
  }
};

/// Gauss-Laguerre is used for p <= kLaguerreSwitch * q0.
inline constexpr double kLaguerreSwitch = 0.5;

/// Nodes rho_i and weights W_i with int_0^inf g(rho) drho ~ sum W_i g(rho_i).
struct RadialRule {
  std::vector<double> rho;
  std::vector<double> weight;
};

/// v = 2 q0 rho beyond which v^n e^{-v/2} is below ~1e-18 of its peak.
inline double radial_cutoff(int n, double q0) { return (4.0 * n + 120.0) / (2.0 * q0); }

inline RadialRule radial_rule(int n, double q0, double p, const OracleConfig& cfg) {
  cfg.validate();
  RadialRule out;
  if (p <= kLaguerreSwitch * q0) {
    const auto& gl = quad::gauss_laguerre(cfg.radial_nodes);
    for (std::size_t i = 0; i < gl.size(); ++i) {
      const double w = gl.nodes[i];
      const double lw = gl.log_weights[i] + w;
      if (lw < -745.0) continue;
      out.rho.push_back(w / q0);
      out.weight.push_back(std::exp(lw) / q0);
    }
    return out;
  }
  const double rho_max = radial_cutoff(n, q0);
  const double width = std::min(std::numbers::pi / p, 1.0 / q0);
  const int panels = static_cast<int>(std::ceil(rho_max / width));
  const auto& gl = quad::gauss_legendre(std::max(8, cfg.radial_nodes / 32));
  out.rho.reserve(panels * gl.size());
  out.weight.reserve(panels * gl.size());
  for (int k = 0; k < panels; ++k) {
    const double a = k * width;
    for (std::size_t i = 0; i < gl.size(); ++i) {
      out.rho.push_back(a + 0.5 * width * (1.0 + gl.nodes[i]));
      out.weight.push_back(0.5 * width * gl.weights[i]);
    }
  }
  return out;
}

namespace detail {
inline cplx minus_i_pow(int k) {
  switch (k % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}
}  // namespace detail

/// Radial Hankel integral int_0^inf R_nm(rho) J_{|m|}(p rho) rho drho.
inline double hankel_integral(const QuantumNumbers& qn, double p, const OracleConfig& cfg = {}) {
  const double q0 = position::physical_q0(qn.n());
  const int am = qn.abs_m();
  if (p == 0.0 && am > 0) return 0.0;
  const auto rule = radial_rule(qn.n(), q0, p, cfg);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.rho.size(); ++i) {
    const double r = rule.rho[i];
    sum += rule.weight[i] * position::radial(qn, r) * polys::bessel_j(am, p * r) * r;
  }
  return sum;
}

inline cplx ft_hankel(const QuantumNumbers& qn, const MomentumPoint& mp, const OracleConfig& cfg = {}) {
  const double h = hankel_integral(qn, mp.p(), cfg);
  const double a = qn.m() * mp.phi_p();
  return detail::minus_i_pow(qn.abs_m()) * cplx(h * std::cos(a), h * std::sin(a));
}

/// Direct polar quadrature of the 2D transform. The trapezoid in phi uses at
/// least 256 nodes and enough to resolve e^{-i p rho cos} at each radius.
inline cplx ft_direct_2d(const QuantumNumbers& qn, const MomentumPoint& mp, const OracleConfig& cfg = {}) {
  const double q0 = position::physical_q0(qn.n());
  const double p = mp.p();
  const auto rule = radial_rule(qn.n(), q0, p, cfg);
  const int m = qn.m();
  cplx total{};
  for (std::size_t i = 0; i < rule.rho.size(); ++i) {
    const double r = rule.rho[i];
    const double rad = position::radial(qn, r);
    if (rad == 0.0 && r > 0.0) continue;
    const int need = static_cast<int>(std::ceil(p * r)) + std::abs(m) + 64;
    const int nphi = std::max(256, (need + 3) / 4 * 4);
    cplx ang{};
    for (int j = 0; j < nphi; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / nphi;
      ang += std::polar(1.0, m * phi - p * r * std::cos(phi - mp.phi_p()));
    }
    ang *= 2.0 * std::numbers::pi / nphi;
    total += rule.weight[i] * rad * r * ang;
  }
  return total / (2.0 * std::numbers::pi);
}

inline cplx transform(const QuantumNumbers& qn, const MomentumPoint& mp, const OracleConfig& cfg = {}) {
  return cfg.method == Method::hankel_reduced ? ft_hankel(qn, mp, cfg) : ft_direct_2d(qn, mp, cfg);
}

}  // namespace h2d::ftoracle
