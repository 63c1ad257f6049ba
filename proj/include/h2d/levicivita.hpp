#pragma once

// Levi-Civita map (u1, u2) -> (u1^2 - u2^2, 2 u1 u2) and the Gaussian-integral
// construction of the momentum-space generating function.
//
// Under the map the Fourier exponent of the coordinate generating function
// becomes a complex quadratic form -u^T X u, so that
//   int e^{-u^T X u} d^2u = pi / sqrt(det X)
// and, with d^2r = c u^2 d^2u (c = 2, the map covers the plane twice),
//   G(z,t,p,beta) = 1 / sqrt(D_beta),   G(z,t,p) = -dG/dbeta|_0 = (1-z^2) q0 / D_0^{3/2},
//   D_beta = [(1+z) q0 + beta (1-z)]^2 + p^2 (1-z)^2 + 4 i t z q0 (p_x + i p_y).

#include "h2d/momentum.hpp"
#include "h2d/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace h2d::lc {

using cplx = std::complex<double>;

struct UPoint {
  double u1;
  double u2;
};

struct LcImage {
  double x;
  double y;
  double rho;
};

/// Parameters of the generating functions: |z| < 1, q0 > 0, beta >= 0.
class GenFuncParams {
public:
  GenFuncParams(cplx z, cplx t, double q0, double beta = 0.0) : z_(z), t_(t), q0_(q0), beta_(beta) {
    if (!(std::abs(z) < 1.0)) throw std::domain_error("GenFuncParams: |z| must be < 1");
    if (!(q0 > 0.0)) throw std::invalid_argument("GenFuncParams: q0 must be positive");
    if (!(beta >= 0.0)) throw std::invalid_argument("GenFuncParams: beta must be >= 0");
  }
  cplx z() const noexcept { return z_; }
  cplx t() const noexcept { return t_; }
  double q0() const noexcept { return q0_; }
  double beta() const noexcept { return beta_; }

private:
  cplx z_;
  cplx t_;
  double q0_;
  double beta_;
};

/// Symmetric 2x2 complex matrix of the exponent u^T X u.
struct QuadraticFormMatrix {
  cplx a11, a12, a21, a22;

  cplx det() const { return a11 * a22 - a12 * a21; }
  cplx trace() const { return a11 + a22; }
  cplx form(double u1, double u2) const { return a11 * u1 * u1 + (a12 + a21) * u1 * u2 + a22 * u2 * u2; }

  /// Eigenvalues of Re X, ascending.
  std::pair<double, double> real_part_eigenvalues() const {
    const double a = a11.real();
    const double b = 0.5 * (a12.real() + a21.real());
    const double d = a22.real();
    const double mean = 0.5 * (a + d);
    const double r = std::hypot(0.5 * (a - d), b);
    return {mean - r, mean + r};
  }
  /// Spectral norm bound of Im X (Frobenius).
  double imag_norm() const {
    return std::sqrt(std::norm(a11.imag()) + std::norm(a12.imag()) + std::norm(a21.imag()) +
                     std::norm(a22.imag()));
  }
};

inline LcImage lc_map(const UPoint& u) {
  return {u.u1 * u.u1 - u.u2 * u.u2, 2.0 * u.u1 * u.u2, u.u1 * u.u1 + u.u2 * u.u2};
}

/// |det d(x,y)/d(u1,u2)| = 4 |u|^2.
inline double lc_jacobian(const UPoint& u) { return 4.0 * (u.u1 * u.u1 + u.u2 * u.u2); }

/// c in int f d^2r = c int f(x(u), y(u)) |u|^2 d^2u, both sides by quadrature.
/// f is a function of (x, y).
inline double measure_factor_ratio(const std::function<double(double, double)>& f,
                                   double r_max = 40.0, int panels = 40) {
  const auto& gl = quad::gauss_legendre(20);
  const auto& tr = quad::gauss_legendre(64);
  // r-plane: polar coordinates
  double lhs = 0.0;
  // u-plane: polar coordinates in u, |u| up to sqrt(r_max)
  double rhs = 0.0;
  const double u_max = std::sqrt(r_max);
  for (int k = 0; k < panels; ++k) {
    const double r0 = r_max * k / panels, r1 = r_max * (k + 1) / panels;
    const double s0 = u_max * k / panels, s1 = u_max * (k + 1) / panels;
    for (std::size_t i = 0; i < gl.size(); ++i) {
      const double r = 0.5 * (r0 + r1) + 0.5 * (r1 - r0) * gl.nodes[i];
      const double wr = 0.5 * (r1 - r0) * gl.weights[i];
      const double s = 0.5 * (s0 + s1) + 0.5 * (s1 - s0) * gl.nodes[i];
      const double ws = 0.5 * (s1 - s0) * gl.weights[i];
      for (std::size_t j = 0; j < tr.size(); ++j) {
        const double th = std::numbers::pi * (1.0 + tr.nodes[j]);
        const double wt = std::numbers::pi * tr.weights[j];
        lhs += wr * wt * r * f(r * std::cos(th), r * std::sin(th));
        const auto img = lc_map({s * std::cos(th), s * std::sin(th)});
        rhs += ws * wt * s * img.rho * f(img.x, img.y);
      }
    }
  }
  return lhs / rhs;
}

/// Measured constant c of the Levi-Civita measure relation, using the test
/// function f = rho e^{-2 rho}. Expected 2.
inline double lc_measure_factor() {
  static const double c = measure_factor_ratio([](double x, double y) {
    const double r = std::hypot(x, y);
    return r * std::exp(-2.0 * r);
  });
  return c;
}

namespace detail {
inline cplx coulomb_coeff(const GenFuncParams& gp) {
  return (1.0 + gp.z()) * gp.q0() / (1.0 - gp.z());
}
inline cplx shift_coeff(const GenFuncParams& gp) {
  const cplx omz = 1.0 - gp.z();
  return 2.0 * gp.t() * gp.z() * gp.q0() / (omz * omz);
}
}  // namespace detail

/// X for the exponent -i p.r - [(1+z) q0/(1-z) + beta] rho + 2 t z q0 (x + i y)/(1-z)^2.
inline QuadraticFormMatrix quadratic_form_matrix(const GenFuncParams& gp, const MomentumPoint& p) {
  const cplx a = detail::coulomb_coeff(gp) + gp.beta();
  const cplx b = detail::shift_coeff(gp);
  const cplx i{0.0, 1.0};
  const cplx off = i * p.py() - i * b;
  return {a - (b - i * p.px()), off, off, a + (b - i * p.px())};
}

/// D_beta = det(X) (1-z)^2.
inline cplx reduced_det(const GenFuncParams& gp, const MomentumPoint& p) {
  const cplx z = gp.z();
  const double q0 = gp.q0();
  const cplx lead = (1.0 + z) * q0 + gp.beta() * (1.0 - z);
  const cplx i{0.0, 1.0};
  return lead * lead + p.p() * p.p() * (1.0 - z) * (1.0 - z) +
         4.0 * i * gp.t() * z * q0 * cplx(p.px(), p.py());
}

/// Closed-form det(X).
inline cplx det_x(const GenFuncParams& gp, const MomentumPoint& p) {
  const cplx omz = 1.0 - gp.z();
  return reduced_det(gp, p) / (omz * omz);
}

/// Re X positive definite, so that the Gaussian integral converges.
inline bool is_convergent(const GenFuncParams& gp, const MomentumPoint& p) {
  return quadratic_form_matrix(gp, p).real_part_eigenvalues().first > 0.0;
}

struct MomentumGenFunc {
  cplx with_beta;  // G(z, t, p, beta)
  cplx g;          // G(z, t, p) = -dG/dbeta at beta = 0
};

namespace detail {
inline void check_branch(cplx d) {
  if (d == cplx{} || (std::abs(d.imag()) <= 1e-12 * std::abs(d) && d.real() < 0.0))
    throw std::domain_error("gen_func_momentum: argument on the branch cut of the square root");
}
}  // namespace detail

/// Both generating functions; principal branch of the square root.
inline MomentumGenFunc gen_func_momentum(const GenFuncParams& gp, const MomentumPoint& p) {
  const cplx d_beta = reduced_det(gp, p);
  const GenFuncParams at0(gp.z(), gp.t(), gp.q0(), 0.0);
  const cplx d0 = reduced_det(at0, p);
  detail::check_branch(d_beta);
  detail::check_branch(d0);
  const cplx z = gp.z();
  return {1.0 / std::sqrt(d_beta), (1.0 - z * z) * gp.q0() / (d0 * std::sqrt(d0))};
}

/// -dG(z,t,p,beta)/dbeta at the given beta, analytically:
/// (1-z) [(1+z) q0 + beta (1-z)] / D_beta^{3/2}. Equals MomentumGenFunc::g at beta = 0.
inline cplx gen_func_beta_derivative(const GenFuncParams& gp, const MomentumPoint& p) {
  const cplx d = reduced_det(gp, p);
  detail::check_branch(d);
  const cplx z = gp.z();
  return (1.0 - z) * ((1.0 + z) * gp.q0() + gp.beta() * (1.0 - z)) / (d * std::sqrt(d));
}

/// Direct 2D quadrature of int exp(-u^T X u) d^2u in polar u-coordinates:
/// Gauss-Legendre panels in |u| out to the radius where
/// exp(-lambda_min(Re X) r^2) < 1e-14, and a trapezoid rule in the angle that
/// starts at `angular` nodes and doubles (up to 16384) until successive
/// results agree to 1e-12 relative. Requires Re X positive definite.
inline cplx gaussian_integral_quadrature(const QuadraticFormMatrix& x, int angular = 256) {
  const auto [lmin, lmax] = x.real_part_eigenvalues();
  if (!(lmin > 0.0)) throw std::domain_error("gaussian_integral_quadrature: Re X not positive definite");
  const double r_max = std::sqrt(33.0 / lmin);
  const double phase = r_max * r_max * (x.imag_norm() + lmax);
  const int panels = std::max(16, static_cast<int>(std::ceil(phase / 2.0)));
  const auto& gl = quad::gauss_legendre(16);
  const auto radial = [&](double th) {
    const cplx s = x.form(std::cos(th), std::sin(th));
    cplx acc{};
    for (int k = 0; k < panels; ++k) {
      const double r0 = r_max * k / panels, r1 = r_max * (k + 1) / panels;
      acc += quad::integrate_panel([&](double r) { return r * std::exp(-s * r * r); }, r0, r1, gl);
    }
    return acc;
  };
  // sum over the odd nodes of the doubled rule is all that is new per level
  int nodes = std::max(4, angular);
  cplx sum{};
  for (int j = 0; j < nodes; ++j) sum += radial(2.0 * std::numbers::pi * j / nodes);
  cplx estimate = sum * (2.0 * std::numbers::pi / nodes);
  while (nodes < 16384) {
    cplx odd{};
    for (int j = 0; j < nodes; ++j) odd += radial(2.0 * std::numbers::pi * (j + 0.5) / nodes);
    sum += odd;
    nodes *= 2;
    const cplx next = sum * (2.0 * std::numbers::pi / nodes);
    const bool done = std::abs(next - estimate) <= 1e-12 * std::abs(next);
    estimate = next;
    if (done) break;
  }
  return estimate;
}

}  // namespace h2d::lc
