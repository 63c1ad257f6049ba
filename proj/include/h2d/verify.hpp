#pragma once

// Verification suites: every identity the library relies on, checked against
// an independent numerical route and returned as VerificationReports.
//
// Default grids and tolerances are the ones the library is specified to meet;
// SuiteOptions can cap the principal index and override the tolerance.

#include "h2d/ftoracle.hpp"
#include "h2d/ftoracle_report.hpp"
#include "h2d/genfunc.hpp"
#include "h2d/levicivita.hpp"
#include "h2d/momentum.hpp"
#include "h2d/polys.hpp"
#include "h2d/position.hpp"
#include "h2d/quadrature.hpp"
#include "h2d/report.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace h2d::verify {

using cplx = std::complex<double>;
using quad_real = boost::multiprecision::cpp_bin_float_quad;

struct SuiteOptions {
  std::optional<int> n_max;   // caps every principal-index range
  std::optional<double> tol;  // replaces every default tolerance
};

namespace detail {

inline int cap(const SuiteOptions& o, int n_default) {
  return o.n_max ? std::min(*o.n_max, n_default) : n_default;
}
inline double tol(const SuiteOptions& o, double t_default) { return o.tol.value_or(t_default); }

inline std::string fmt(double x, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

inline std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

inline std::vector<double> logspace(double a, double b, int n) {
  GridSpec g{a, b, n, GridSpec::Scale::log};
  return g.values();
}

inline cplx i_unit() { return {0.0, 1.0}; }

}  // namespace detail

// ---------------------------------------------------------------- polys

/// Gegenbauer values against z^k coefficients of (1 - 2qz + z^2)^{-lambda}.
inline VerificationReport check_gegenbauer_gf_coefficients(const SuiteOptions& o = {}) {
  ErrorTracker err(1.0);
  const auto qs = detail::linspace(-1.0, 1.0, 21);
  for (double lam : {0.5, 1.5, 2.5, 3.5})
    for (double q : qs) {
      const auto coef = quad::taylor_coefficients(
          [&](cplx z) { return std::pow(1.0 - 2.0 * q * z + z * z, -lam); }, 0.5, 64, 13);
      for (int k = 0; k <= 12; ++k) err.add(cplx(polys::gegenbauer(k, lam, q)), coef[k]);
    }
  return make_report("polys.gegenbauer_gf_coefficients", "k<=12, lambda in {1/2,3/2,5/2,7/2}, 21 q in [-1,1]",
                     err, detail::tol(o, 1e-9), ErrorMetric::relative,
                     "Cauchy trapezoid |z|=0.5, 64 nodes; scale max(1,|ref|)");
}

/// (n+1/2) C_{n-m}^{m+1/2} = (m+1/2) [C_{n-m}^{m+3/2} - C_{n-m-2}^{m+3/2}].
inline VerificationReport check_gegenbauer_recurrence(const SuiteOptions& o = {}) {
  const int n_top = detail::cap(o, 20);
  ErrorTracker err;
  double scaled_double = 0.0;
  const auto qs = detail::linspace(-1.0, 1.0, 21);
  for (int n = 0; n <= n_top; ++n)
    for (int m = 0; m <= n; ++m)
      for (double qd : qs) {
        const quad_real q(qd);
        const quad_real lhs = (n + quad_real(0.5)) * polys::gegenbauer(n - m, m + 0.5, q);
        const quad_real rhs = (m + quad_real(0.5)) * (polys::gegenbauer(n - m, m + 1.5, q) -
                                                      polys::gegenbauer_or_zero(n - m - 2, m + 1.5, q));
        err.add_error(static_cast<double>(abs(lhs - rhs)), std::abs(static_cast<double>(lhs)));
        const double ld = (n + 0.5) * polys::gegenbauer(n - m, m + 0.5, qd);
        const double rd = (m + 0.5) * (polys::gegenbauer(n - m, m + 1.5, qd) -
                                       polys::gegenbauer_or_zero(n - m - 2, m + 1.5, qd));
        scaled_double = std::max(scaled_double, std::abs(ld - rd) / std::max(1.0, std::abs(ld)));
      }
  return make_report("polys.gegenbauer_recurrence", "0<=m<=n<=" + std::to_string(n_top) + ", 21 q in [-1,1]",
                     err, detail::tol(o, 1e-10), ErrorMetric::absolute,
                     "evaluated with 113-bit floats (terms reach ~1e9); double-precision residual scaled by "
                     "max(1,|term|) = " + detail::fmt(scaled_double) + "; negative-degree C = 0");
}

/// (2m-1)!! C_{n-m}^{m+1/2}(t) (1-t^2)^{m/2} = P_n^m(t), no Condon-Shortley phase.
inline VerificationReport check_gegenbauer_legendre_connection(const SuiteOptions& o = {}) {
  const int n_top = detail::cap(o, 12);
  ErrorTracker err;
  double scaled_double = 0.0;
  const auto ts = detail::linspace(-0.99, 0.99, 199);
  for (int n = 0; n <= n_top; ++n)
    for (int m = 0; m <= n; ++m) {
      const quad_real df(polys::double_factorial(2 * m - 1));
      for (double td : ts) {
        const quad_real t(td);
        const quad_real lhs = df * polys::gegenbauer(n - m, m + 0.5, t) * pow(1 - t * t, quad_real(m) / 2);
        const quad_real rhs = polys::assoc_legendre(n, m, t);
        err.add_error(static_cast<double>(abs(lhs - rhs)), std::abs(static_cast<double>(rhs)));
        const double ld = polys::double_factorial(2 * m - 1) * polys::gegenbauer(n - m, m + 0.5, td) *
                          std::pow(1.0 - td * td, 0.5 * m);
        const double rd = polys::assoc_legendre(n, m, td);
        scaled_double = std::max(scaled_double, std::abs(ld - rd) / std::max(1.0, std::abs(rd)));
      }
    }
  return make_report("polys.gegenbauer_legendre_connection",
                     "0<=m<=n<=" + std::to_string(n_top) + ", 199 t in [-0.99,0.99]", err, detail::tol(o, 1e-10),
                     ErrorMetric::absolute,
                     "P_n^m = (1-t^2)^{m/2} d^m P_n/dt^m (no Condon-Shortley phase, hence no (-1)^m); 113-bit "
                     "evaluation (P_12^12 ~ 3e11); double-precision residual scaled by max(1,|P|) = " +
                         detail::fmt(scaled_double));
}

/// d/dx L_n^a(x) = -L_{n-1}^{a+1}(x) by central differences, h = 1e-5.
inline VerificationReport check_laguerre_derivative(const SuiteOptions& o = {}) {
  const int n_top = detail::cap(o, 10);
  ErrorTracker err(1.0);
  const double h = 1e-5;
  const auto xs = detail::linspace(0.25, 10.25, 21);
  for (int n = 1; n <= n_top; ++n)
    for (double a : {0.0, 1.0, 2.0, 4.0})
      for (double x : xs) {
        const double fd = (polys::laguerre(n, a, x + h) - polys::laguerre(n, a, x - h)) / (2.0 * h);
        err.add(fd, -polys::laguerre(n - 1, a + 1.0, x));
      }
  return make_report("polys.laguerre_derivative",
                     "1<=n<=" + std::to_string(n_top) + ", alpha in {0,1,2,4}, 21 x in [0.25,10.25]", err,
                     detail::tol(o, 1e-6), ErrorMetric::absolute, "central difference, h = 1e-5");
}

/// Trapezoid evaluation of J_m(x) = (1/2pi) int_0^{2pi} cos(m tau - x sin tau) dtau;
/// spectrally exact once the node count exceeds x + m by a margin.
inline double bessel_j_integral(int m, double x) {
  const int nodes = 64 + 4 * static_cast<int>(std::ceil(x + m));
  double s = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double tau = 2.0 * std::numbers::pi * j / nodes;
    s += std::cos(m * tau - x * std::sin(tau));
  }
  return s / nodes;
}

inline VerificationReport check_bessel(const SuiteOptions& o = {}) {
  ErrorTracker err;
  for (int m = 0; m <= 10; ++m)
    for (double x : detail::linspace(0.0, 60.0, 241)) err.add(polys::bessel_j(m, x), bessel_j_integral(m, x));
  // first zero of J_0
  err.add(polys::bessel_j(0, 2.404825557695773), 0.0);
  return make_report("polys.bessel_j", "0<=m<=10, 241 x in [0,60], J_0 zero", err, detail::tol(o, 1e-12),
                     ErrorMetric::absolute, "oracle: trapezoid of the Bessel integral representation");
}

/// (3/2)_m = (2m+1)!/(4^m m!).
inline VerificationReport check_pochhammer(const SuiteOptions& o = {}) {
  ErrorTracker err;
  for (int m = 0; m <= 8; ++m)
    err.add(polys::pochhammer(1.5, m), polys::factorial(2 * m + 1) / (std::pow(4.0, m) * polys::factorial(m)));
  return make_report("polys.pochhammer_factorial", "m=0..8", err, detail::tol(o, 1e-14), ErrorMetric::relative);
}

inline std::vector<VerificationReport> polys_suite(const SuiteOptions& o = {}) {
  return {check_gegenbauer_gf_coefficients(o), check_gegenbauer_recurrence(o),
          check_gegenbauer_legendre_connection(o), check_laguerre_derivative(o), check_bessel(o),
          check_pochhammer(o)};
}

// ---------------------------------------------------------------- position

namespace detail {
// Gauss-Laguerre in s = scale * rho: int_0^inf g(rho) drho ~ sum W_i g(rho_i).
inline void laguerre_in_rho(double scale, int nodes, std::vector<double>& rho, std::vector<double>& w) {
  const auto& gl = quad::gauss_laguerre(nodes);
  rho.clear();
  w.clear();
  for (std::size_t i = 0; i < gl.size(); ++i) {
    const double lw = gl.log_weights[i] + gl.nodes[i];
    if (lw < -745.0) continue;
    rho.push_back(gl.nodes[i] / scale);
    w.push_back(std::exp(lw) / scale);
  }
}
}  // namespace detail

/// <Psi_a | Psi_b> by Gauss-Laguerre (128 nodes) in rho and a 64-node
/// trapezoid in phi.
inline cplx overlap(const QuantumNumbers& a, const QuantumNumbers& b) {
  const double scale = position::physical_q0(a.n()) + position::physical_q0(b.n());
  std::vector<double> rho, w;
  detail::laguerre_in_rho(scale, 128, rho, w);
  constexpr int kPhi = 64;
  cplx sum{};
  for (std::size_t i = 0; i < rho.size(); ++i) {
    cplx ang{};
    for (int j = 0; j < kPhi; ++j) {
      const PolarPoint pt(rho[i], 2.0 * std::numbers::pi * j / kPhi);
      ang += std::conj(position::psi_position(a, pt)) * position::psi_position(b, pt);
    }
    sum += w[i] * rho[i] * ang * (2.0 * std::numbers::pi / kPhi);
  }
  return sum;
}

inline VerificationReport check_position_normalization(const SuiteOptions& o = {}) {
  const int n_top = detail::cap(o, 10);
  ErrorTracker err;
  for (int n = 0; n <= n_top; ++n)
    for (int m = -n; m <= n; ++m) {
      const QuantumNumbers qn(n, m);
      err.add(overlap(qn, qn), cplx(1.0));
    }
  return make_report("position.normalization", "|m|<=n<=" + std::to_string(n_top), err, detail::tol(o, 1e-8),
                     ErrorMetric::absolute, "Gauss-Laguerre, 128 nodes in v = 2 q0 rho");
}

inline VerificationReport check_position_orthogonality(const SuiteOptions& o = {}) {
  const int n_top = detail::cap(o, 6);
  ErrorTracker err;
  for (int n = 0; n <= n_top; ++n)
    for (int k = 0; k < n; ++k)
      for (int m = -k; m <= k; ++m) err.add(overlap(QuantumNumbers(k, m), QuantumNumbers(n, m)), cplx{});
  return make_report("position.orthogonality_radial", "same m, n != n' <= " + std::to_string(n_top), err,
                     detail::tol(o, 1e-7), ErrorMetric::absolute, "Gauss-Laguerre in (q0+q0') rho");
}

inline VerificationReport check_position_angular_orthogonality(const SuiteOptions& o = {}) {
  const int n_top = detail::cap(o, 6);
  ErrorTracker err;
  for (int n = 0; n <= n_top; ++n)
    for (int m = -n; m <= n; ++m)
      for (int k = -n; k < m; ++k) err.add(overlap(QuantumNumbers(n, k), QuantumNumbers(n, m)), cplx{});
  return make_report("position.orthogonality_angular", "same n <= " + std::to_string(n_top) + ", m != m'", err,
                     detail::tol(o, 1e-12), ErrorMetric::absolute, "64-node trapezoid in phi");
}

inline VerificationReport check_ode_residual(const SuiteOptions& o = {}) {
  const int n_top = detail::cap(o, 6);
  ErrorTracker err;
  for (int n = 0; n <= n_top; ++n)
    for (int m = -n; m <= n; ++m)
      for (double rho : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0})
        err.add(position::radial_ode_residual(QuantumNumbers(n, m), rho), 0.0);
  return make_report("position.ode_residual", "|m|<=n<=" + std::to_string(n_top) + ", rho in {0.1,0.5,1,2,5,10}",
                     err, detail::tol(o, 1e-4), ErrorMetric::absolute, "central differences, h = 1e-5 max(rho,1)");
}

inline VerificationReport check_normalization_formula(const SuiteOptions& o = {}) {
  ErrorTracker err;
  for (int n = 0; n <= 20; ++n)
    for (int m = 0; m <= n; ++m) {
      const QuantumNumbers qn(n, m);
      const double q0 = position::physical_q0(n);
      const double direct = std::sqrt(q0 * q0 * q0 * polys::factorial(n - m) /
                                      (std::numbers::pi * polys::factorial(n + m)));
      err.add(position::normalization(qn), direct);
    }
  return make_report("position.normalization_formula", "0<=m<=n<=20", err, detail::tol(o, 1e-14),
                     ErrorMetric::relative,
                     "general-q0 form sqrt(2 q0^2 (n-|m|)!/(pi (2n+1) (n+|m|)!)) at q0 = 1/(n+1/2)");
}

inline VerificationReport check_position_conjugation(const SuiteOptions& o = {}) {
  ErrorTracker err;
  const int n_top = detail::cap(o, 6);
  for (int n = 0; n <= n_top; ++n)
    for (int m = 1; m <= n; ++m)
      for (double rho : {0.0, 0.3, 1.7, 6.0})
        for (double phi : {0.0, 0.4, 2.5, -1.3}) {
          const PolarPoint pt(rho, phi);
          err.add(position::psi_position(QuantumNumbers(n, -m), pt),
                  std::conj(position::psi_position(QuantumNumbers(n, m), pt)));
        }
  return make_report("position.conjugation", "1<=m<=n<=" + std::to_string(n_top) + ", 16 points", err,
                     detail::tol(o, 0.0), ErrorMetric::absolute, "bitwise");
}

inline std::vector<VerificationReport> position_suite(const SuiteOptions& o = {}) {
  return {check_position_normalization(o), check_position_orthogonality(o),
          check_position_angular_orthogonality(o), check_ode_residual(o), check_normalization_formula(o),
          check_position_conjugation(o)};
}

// ---------------------------------------------------------------- momentum

/// Upper bound on |Psi(p)|^2 integrated over |p| > p_cut, using
/// |P_n^m| <= sqrt((n+m)!/(n-m)!).
inline double momentum_tail_bound(int n, double p_cut) {
  const double q0 = position::physical_q0(n);
  return 2.0 * q0 * q0 * q0 / std::pow(p_cut, 4);
}

inline double momentum_norm(const QuantumNumbers& qn, double tail_tol = 1e-9) {
  const double q0 = position::physical_q0(qn.n());
  const double p_max = std::pow(2.0 * q0 * q0 * q0 / tail_tol, 0.25);
  const auto f = [&](double p) { return 2.0 * std::numbers::pi * p * std::norm(momentum::psi_momentum(qn, {p, 0.0})); };
  double total = 0.0;
  double a = 0.0;
  double b = 0.25 * q0;
  while (a < p_max) {
    b = std::min(b, p_max);
    total += quad::integrate_adaptive(f, a, b, 1e-12);
    a = b;
    b *= 2.0;
  }
  return total;
}

inline VerificationReport check_momentum_normalization(const SuiteOptions& o = {}) {
  const int n_top = detail::cap(o, 6);
  ErrorTracker err;
  for (int n = 0; n <= n_top; ++n)
    for (int m = -n; m <= n; ++m) err.add(momentum_norm(QuantumNumbers(n, m)), 1.0);
  return make_report("momentum.parseval", "|m|<=n<=" + std::to_string(n_top), err, detail::tol(o, 1e-6),
                     ErrorMetric::absolute,
                     "adaptive Gauss-Legendre on [0, P_max] with P_max from the tail bound 2 q0^3 / P^4 <= 1e-9");
}

inline std::vector<double> acceptance_momenta() { return detail::logspace(0.05, 20.0, 20); }

inline VerificationReport check_gegenbauer_vs_legendre_form(const SuiteOptions& o = {}) {
  const int n_top = detail::cap(o, 8);
  ErrorTracker err;
  for (int n = 0; n <= n_top; ++n)
    for (int m = -n; m <= n; ++m)
      for (double p : acceptance_momenta())
        for (double phi : {0.0, std::numbers::pi / 3.0, std::numbers::pi}) {
          const QuantumNumbers qn(n, m);
          const MomentumPoint mp(p, phi);
          err.add(momentum::psi_momentum_gegenbauer(qn, mp), momentum::psi_momentum(qn, mp));
        }
  return make_report("momentum.gegenbauer_vs_legendre", "|m|<=n<=" + std::to_string(n_top) +
                         ", 20 log p in [0.05,20], phi_p in {0,pi/3,pi}",
                     err, detail::tol(o, 1e-12), ErrorMetric::relative,
                     "Gegenbauer-form denominator corrected (p^2+q0) -> (p^2+q0^2); its leading factor 2 removed "
                     "(unitary normalization); phase (-i)^|m|");
}

inline VerificationReport check_momentum_phase(const SuiteOptions& o = {}) {
  const int n_top = detail::cap(o, 8);
  ErrorTracker err(1e-300);
  for (int n = 0; n <= n_top; ++n)
    for (int m = -n; m <= n; ++m)
      for (double p : {0.1, 0.7, 3.0})
        for (double phi : {0.3, 1.9, -2.6}) {
          const QuantumNumbers qn(n, m);
          const cplx base = momentum::psi_momentum(qn, {p, 0.0});
          err.add(momentum::psi_momentum(qn, {p, phi}), base * std::polar(1.0, m * phi));
        }
  return make_report("momentum.phase_structure", "|m|<=n<=" + std::to_string(n_top), err, detail::tol(o, 1e-15),
                     ErrorMetric::relative, "psi(p, phi) = psi(p, 0) e^{i m phi}");
}

inline std::vector<VerificationReport> momentum_suite(const SuiteOptions& o = {}) {
  return {check_momentum_normalization(o), check_gegenbauer_vs_legendre_form(o), check_momentum_phase(o)};
}

// ---------------------------------------------------------------- levicivita

inline VerificationReport check_measure_factor(const SuiteOptions& o = {}) {
  ErrorTracker err;
  const double c = lc::lc_measure_factor();
  err.add(c, 2.0);
  // a second test function
  const double c2 = lc::measure_factor_ratio([](double x, double y) {
    const double r = std::hypot(x, y);
    return std::exp(-r) * (1.0 + 0.5 * x * x / (1.0 + r));
  });
  err.add(c2, 2.0);
  char note[160];
  std::snprintf(note, sizeof note,
                "measured measure factor c = %.10f (second test function: %.10f); a factor 4 double-counts "
                "the two-fold covering of the map",
                c, c2);
  return make_report("levicivita.measure_factor", "f = rho e^{-2 rho}, f = e^{-rho}(1 + x^2/(2(1+rho)))", err,
                     detail::tol(o, 1e-8), ErrorMetric::absolute, note);
}

inline VerificationReport check_jacobian(const SuiteOptions& o = {}) {
  ErrorTracker err(1.0);
  const double h = 1e-6;
  for (auto u : {lc::UPoint{0.7, -0.3}, lc::UPoint{1.0, 1.0}, lc::UPoint{-2.0, 0.5}, lc::UPoint{0.1, 0.05}}) {
    const auto xp = lc::lc_map({u.u1 + h, u.u2}), xm = lc::lc_map({u.u1 - h, u.u2});
    const auto yp = lc::lc_map({u.u1, u.u2 + h}), ym = lc::lc_map({u.u1, u.u2 - h});
    const double dx1 = (xp.x - xm.x) / (2 * h), dy1 = (xp.y - xm.y) / (2 * h);
    const double dx2 = (yp.x - ym.x) / (2 * h), dy2 = (yp.y - ym.y) / (2 * h);
    err.add(std::abs(dx1 * dy2 - dx2 * dy1), lc::lc_jacobian(u));
  }
  return make_report("levicivita.jacobian", "4 points", err, detail::tol(o, 1e-6), ErrorMetric::relative,
                     "central-difference Jacobian vs 4|u|^2");
}

namespace detail {
struct Draw {
  lc::GenFuncParams gp;
  MomentumPoint p;
};

inline Draw random_draw(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double two_pi = 2.0 * std::numbers::pi;
  const cplx z = std::polar(0.8 * u(rng), two_pi * u(rng));
  const cplx t = std::polar(u(rng), two_pi * u(rng));
  const double q0 = 0.2 + 1.8 * u(rng);
  const double beta = 2.0 * u(rng);
  const MomentumPoint p(10.0 * u(rng), two_pi * u(rng));
  return {lc::GenFuncParams(z, t, q0, beta), p};
}
}  // namespace detail

inline VerificationReport check_det_identity(const SuiteOptions& o = {}) {
  std::mt19937_64 rng(20240607);
  ErrorTracker err;
  for (int k = 0; k < 100; ++k) {
    const auto d = detail::random_draw(rng);
    err.add(lc::det_x(d.gp, d.p), lc::quadratic_form_matrix(d.gp, d.p).det());
  }
  return make_report("levicivita.det_identity", "100 draws |z|<=0.8, |t|<=1, p<=10, beta<=2, q0 in [0.2,2]", err,
                     detail::tol(o, 1e-12), ErrorMetric::relative);
}

/// Draws for the Gaussian integral are kept when Re X is positive definite
/// with lambda_min >= 0.05 and |Im X| <= 20 lambda_min.
inline bool gaussian_admissible(const lc::QuadraticFormMatrix& x) {
  const auto [lmin, lmax] = x.real_part_eigenvalues();
  return lmin >= 0.05 && x.imag_norm() <= 20.0 * lmin && lmax < 1e3;
}

inline VerificationReport check_gaussian_integral(const SuiteOptions& o = {}) {
  std::mt19937_64 rng(771);
  ErrorTracker err;
  int drawn = 0;
  while (err.count() < 20) {
    const auto d = detail::random_draw(rng);
    ++drawn;
    const auto x = lc::quadratic_form_matrix(d.gp, d.p);
    if (!gaussian_admissible(x)) continue;
    err.add(lc::gaussian_integral_quadrature(x), std::numbers::pi / std::sqrt(lc::det_x(d.gp, d.p)));
  }
  return make_report("levicivita.gaussian_integral",
                     "20 admissible draws (of " + std::to_string(drawn) + "), polar quadrature in u", err,
                     detail::tol(o, 1e-7), ErrorMetric::absolute,
                     "admissible: lambda_min(Re X) >= 0.05, |Im X| <= 20 lambda_min");
}

inline VerificationReport check_beta_derivative(const SuiteOptions& o = {}) {
  std::mt19937_64 rng(99);
  ErrorTracker err;
  ErrorTracker closed;
  const double h = 1e-6;
  for (int k = 0; k < 40; ++k) {
    auto d = detail::random_draw(rng);
    const lc::GenFuncParams g0(d.gp.z(), d.gp.t(), d.gp.q0(), 0.0);
    const lc::GenFuncParams g2(d.gp.z(), d.gp.t(), d.gp.q0(), 2.0 * h);
    const lc::GenFuncParams g1(d.gp.z(), d.gp.t(), d.gp.q0(), h);
    try {
      const cplx fd = -(lc::gen_func_momentum(g2, d.p).with_beta - lc::gen_func_momentum(g0, d.p).with_beta) / (2.0 * h);
      err.add(fd, lc::gen_func_beta_derivative(g1, d.p));
      closed.add(lc::gen_func_beta_derivative(g0, d.p), lc::gen_func_momentum(g0, d.p).g);
    } catch (const std::domain_error&) {
      // draw landed on the branch cut; skip
    }
  }
  err.merge(closed);
  return make_report("levicivita.beta_derivative", "40 draws, central difference at beta = 1e-6, h = 1e-6", err,
                     detail::tol(o, 1e-6), ErrorMetric::relative,
                     "-dG/dbeta at beta=0 equals (1-z^2) q0 / D^{3/2}");
}

/// The expansion coefficient 2(2n+1)(-4i)^m q0^{m+1} (3/2)_m C_{n-m}^{m+1/2}(q)
/// (p_x+ip_y)^m / ((2m+1)(p^2+q0^2)^{m+3/2}), m >= 0, at fixed q0.
inline cplx expansion_coefficient_line(int n, int m, double q0, const MomentumPoint& mp) {
  const double p = mp.p();
  const double s = p * p + q0 * q0;
  const double q = (p * p - q0 * q0) / s;
  const cplx pxy = std::polar(std::pow(p, m), m * mp.phi_p());
  return 2.0 * (2.0 * n + 1.0) * std::pow(cplx(0.0, -4.0), m) * std::pow(q0, m + 1) * polys::pochhammer(1.5, m) *
         polys::gegenbauer(n - m, m + 0.5, q) * pxy / ((2.0 * m + 1.0) * std::pow(s, m + 1.5));
}

inline VerificationReport check_coefficient_consistency(const SuiteOptions& o = {}) {
  const int n_top = detail::cap(o, 5);
  const double q0 = 0.8;
  ErrorTracker err;
  double constant = 0.0;
  bool have_constant = false;
  for (double p : {0.3, 1.1, 2.5})
    for (double phi : {0.0, 0.7}) {
      const MomentumPoint mp(p, phi);
      const double rt = p > 0.0 ? std::min(0.5, (p * p + q0 * q0) / (16.0 * q0 * p)) : 0.5;
      const auto coef = quad::taylor_coefficients_2d(
          [&](cplx z, cplx t) { return lc::gen_func_momentum(lc::GenFuncParams(z, t, q0), mp).g; }, 0.5, rt, 64,
          n_top + 1, n_top + 1);
      for (int n = 0; n <= n_top; ++n)
        for (int m = 0; m <= n; ++m) {
          const cplx got = coef[n][m] * polys::factorial(m);
          const cplx line = expansion_coefficient_line(n, m, q0, mp);
          if (!have_constant) {
            constant = (got / line).real();
            have_constant = true;
          }
          err.add(got, constant * line);
        }
    }
  return make_report("levicivita.coefficient_consistency",
                     "n<=" + std::to_string(n_top) + ", 0<=m<=n, q0=0.8, p in {0.3,1.1,2.5}, phi_p in {0,0.7}", err,
                     detail::tol(o, 1e-6), ErrorMetric::relative,
                     "m! [z^n t^m] G(z,t,p) = kappa * expansion line; measured global constant kappa = " +
                         detail::fmt(constant, 12));
}

inline std::vector<VerificationReport> levicivita_suite(const SuiteOptions& o = {}) {
  return {check_measure_factor(o), check_jacobian(o), check_det_identity(o), check_gaussian_integral(o),
          check_beta_derivative(o), check_coefficient_consistency(o)};
}

// ---------------------------------------------------------------- genfunc

inline VerificationReport check_laguerre_gf(const SuiteOptions& o = {}) {
  ErrorTracker err;
  err.add(genfunc::laguerre_gf_series(0.5, 2.0, 1.5, 60).value, genfunc::laguerre_gf(0.5, 2.0, 1.5));
  for (cplx z : {cplx(0.3), cplx(-0.45), cplx(0.0, 0.4), std::polar(0.5, 2.0)})
    for (double r : {0.0, 1.0, 2.0, 4.0})
      for (double v : {0.0, 0.5, 1.5, 4.0})
        err.add(genfunc::laguerre_gf_series(z, r, v).value, genfunc::laguerre_gf(z, r, v));
  return make_report("genfunc.laguerre", "(0.5,2,1.5) to n=60; |z|<=0.5 x r in {0,1,2,4} x v in {0,.5,1.5,4} to n=80",
                     err, detail::tol(o, 1e-10), ErrorMetric::absolute);
}

inline VerificationReport check_shifted_laguerre_gf(const SuiteOptions& o = {}) {
  ErrorTracker err;
  err.add(genfunc::shifted_laguerre_gf_series(0.4, 2, 1.0, 62).value, genfunc::shifted_laguerre_gf(0.4, 2, 1.0));
  for (cplx z : {cplx(0.2), cplx(0.4), cplx(0.0, 0.3), cplx(-0.45)})
    for (int m = 0; m <= 4; ++m)
      for (double v : {0.0, 1.0, 3.0})
        err.add(genfunc::shifted_laguerre_gf_series(z, m, v).value, genfunc::shifted_laguerre_gf(z, m, v));
  return make_report("genfunc.shifted_laguerre", "(0.4,2,1) n=2..62; 4 z x m<=4 x v in {0,1,3} to n=80", err,
                     detail::tol(o, 1e-10), ErrorMetric::absolute);
}

inline VerificationReport check_coordinate_gf(const SuiteOptions& o = {}) {
  ErrorTracker err;
  const PolarPoint ref(1.5, 0.7);
  err.add(genfunc::coordinate_gf_series(0.3, 0.2, 1.0, ref, 40).value, genfunc::coordinate_gf(0.3, 0.2, 1.0, ref));
  for (double q0 : {0.5, 1.0, 2.0})
    for (double rho : {0.5, 1.5, 3.0})
      for (cplx z : {cplx(0.3), cplx(0.0, 0.2)})
        for (cplx t : {cplx(0.2), cplx(-0.3, 0.1)}) {
          const PolarPoint pt(rho, 0.7);
          err.add(genfunc::coordinate_gf_series(z, t, q0, pt, 40).value, genfunc::coordinate_gf(z, t, q0, pt));
        }
  // t = 0 leaves only m = 0: no phi dependence
  err.add(genfunc::coordinate_gf(0.3, 0.0, 1.0, {1.5, 0.0}), genfunc::coordinate_gf(0.3, 0.0, 1.0, {1.5, 2.2}));
  return make_report("genfunc.coordinate", "n<=40, 0<=m<=n, fixed q0 in {0.5,1,2}, rho in {0.5,1.5,3}", err,
                     detail::tol(o, 1e-8), ErrorMetric::absolute, "fixed-q0 basis, (x + i y) branch");
}

inline VerificationReport check_gegenbauer_gf(const SuiteOptions& o = {}) {
  ErrorTracker err;
  err.add(genfunc::gegenbauer_gf_series(0.5, 0.3, 2.5, 80).value, genfunc::gegenbauer_gf(0.5, 0.3, 2.5));
  err.add(genfunc::gegenbauer_gf(0.5, 1.0, 1.5), cplx(8.0));
  for (cplx z : {cplx(0.5), cplx(0.0, 0.4), cplx(-0.3)})
    for (double a : {0.5, 1.5, 2.5})
      for (double q : detail::linspace(-1.0, 1.0, 21))
        err.add(genfunc::gegenbauer_gf_series(z, q, a).value, genfunc::gegenbauer_gf(z, q, a));
  return make_report("genfunc.gegenbauer", "n_max=80, 3 z x alpha in {1/2,3/2,5/2} x 21 q", err, detail::tol(o, 1e-9),
                     ErrorMetric::absolute);
}

inline VerificationReport check_legendre_new_gf(const SuiteOptions& o = {}) {
  ErrorTracker err;
  for (int m = 0; m <= 4; ++m)
    for (cplx z : {cplx(0.4), cplx(-0.3), cplx(0.0, 0.35)})
      for (double t : detail::linspace(-0.9, 0.9, 19))
        err.add(genfunc::new_legendre_gf_series(z, t, m).value, genfunc::new_legendre_gf(z, t, m));
  return make_report("genfunc.legendre_new", "m<=4, 3 z, 19 t in [-0.9,0.9], n = m..80", err, detail::tol(o, 1e-8),
                     ErrorMetric::absolute,
                     "sum_{n>=m} z^n (2n+1)/(2m+1)!! P_n^m(t), P without Condon-Shortley (no (-1)^m); the sum starts "
                     "at n = m (for m = 0 the n = 0 term contributes 1)");
}

inline VerificationReport check_legendre_intermediate(const SuiteOptions& o = {}) {
  ErrorTracker err;
  for (int m = 0; m <= 4; ++m)
    for (cplx z : {cplx(0.4), cplx(-0.3), cplx(0.0, 0.35)})
      for (double t : detail::linspace(-0.9, 0.9, 19))
        err.add(genfunc::gegenbauer_shifted_gf_series(z, t, m).value, genfunc::gegenbauer_shifted_gf(z, t, m));
  return make_report("genfunc.gegenbauer_shifted_series", "m<=4, 3 z, 19 t, n = m..80", err, detail::tol(o, 1e-9),
                     ErrorMetric::absolute, "sum_{n>=m} z^n (2n+1)/(2m+1) C_{n-m}^{m+1/2}(t)");
}

/// z^n coefficients of (1-z^2) z^m (1-2zq+z^2)^{-m-3/2} by Cauchy quadrature
/// against both the re-indexed difference and the single-Gegenbauer form.
inline VerificationReport check_reindexing(const SuiteOptions& o = {}) {
  ErrorTracker diff(1.0);
  ErrorTracker single(1.0);
  for (int m = 0; m <= 4; ++m)
    for (double q : detail::linspace(-1.0, 1.0, 11)) {
      const auto f = [&](cplx z) {
        return (1.0 - z * z) * std::pow(z, m) * std::pow(1.0 - 2.0 * z * q + z * z, -(m + 1.5));
      };
      for (int n = 0; n <= 30; ++n) {
        // radius n/(n+2m+3) balances r^{-n} against the pole order at |z| = 1
        const double radius = std::clamp(double(n) / (n + 2 * m + 3), 0.3, 0.9);
        const cplx got = quad::taylor_coefficients(f, radius, 256, n + 1)[n];
        const double d = n < m ? 0.0
                               : polys::gegenbauer(n - m, m + 1.5, q) - polys::gegenbauer_or_zero(n - m - 2, m + 1.5, q);
        const double s = n < m ? 0.0 : (2.0 * n + 1.0) / (2.0 * m + 1.0) * polys::gegenbauer(n - m, m + 0.5, q);
        diff.add(got, cplx(d));
        single.add(got, cplx(s));
      }
    }
  diff.merge(single);
  return make_report("genfunc.reindexing", "m<=4, n<=30, 11 q in [-1,1]", diff, detail::tol(o, 1e-9),
                     ErrorMetric::relative,
                     "Cauchy trapezoid, 256 nodes on |z| = n/(n+2m+3) clamped to [0.3,0.9]; both the difference C^{m+3/2}_{n-m} - C^{m+3/2}_{n-m-2} and "
                     "(2n+1)/(2m+1) C^{m+1/2}_{n-m}; scale max(1,|ref|)");
}

/// Error of the truncated series at n_max = 10, 20, ..., 80 for |z| = 0.8:
/// passes when the errors do not increase (above a rounding floor), and
/// reports the fitted C in |err| <= C |z|^{n_max - m}.
inline VerificationReport check_tail_convergence(const SuiteOptions& o = {}) {
  const cplx z = std::polar(0.8, 0.6);
  std::vector<int> cutoffs;
  for (int n = 10; n <= 80; n += 10) cutoffs.push_back(n);
  std::string notes;
  ErrorTracker err;
  const auto run = [&](const char* name, auto&& series, cplx closed, int m) {
    std::vector<double> e;
    for (int n : cutoffs) e.push_back(std::abs(series(n) - closed));
    const double floor = 1e-13 * std::max(1.0, std::abs(closed));
    double worst_increase = 0.0;
    for (std::size_t i = 1; i < e.size(); ++i)
      if (e[i] > floor) worst_increase = std::max(worst_increase, e[i] - e[i - 1]);
    const double c = genfunc::fit_tail_constant(cutoffs, e, std::abs(z), m);
    err.add_error(std::max(0.0, worst_increase), 1.0);
    notes += std::string(name) + " C=" + detail::fmt(c) + "; ";
  };
  run("laguerre", [&](int n) { return genfunc::laguerre_gf_series(z, 2.0, 1.5, n).value; },
      genfunc::laguerre_gf(z, 2.0, 1.5), 0);
  run("shifted_laguerre", [&](int n) { return genfunc::shifted_laguerre_gf_series(z, 2, 1.0, n).value; },
      genfunc::shifted_laguerre_gf(z, 2, 1.0), 2);
  run("gegenbauer", [&](int n) { return genfunc::gegenbauer_gf_series(z, 0.3, 1.5, n).value; },
      genfunc::gegenbauer_gf(z, 0.3, 1.5), 0);
  run("legendre_new", [&](int n) { return genfunc::new_legendre_gf_series(z, 0.3, 2, n).value; },
      genfunc::new_legendre_gf(z, 0.3, 2), 2);
  return make_report("genfunc.tail_convergence", "|z|=0.8, n_max = 10..80", err, detail::tol(o, 0.0),
                     ErrorMetric::absolute, "largest increase of the truncation error between cutoffs; " + notes);
}

inline std::vector<VerificationReport> genfunc_suite(const SuiteOptions& o = {}) {
  return {check_laguerre_gf(o),     check_shifted_laguerre_gf(o),   check_coordinate_gf(o),
          check_gegenbauer_gf(o),   check_legendre_new_gf(o),       check_legendre_intermediate(o),
          check_reindexing(o),      check_tail_convergence(o)};
}

// ---------------------------------------------------------------- ft

inline std::vector<MomentumPoint> acceptance_grid() {
  std::vector<MomentumPoint> g;
  for (double phi : {0.0, 2.1})
    for (double p : acceptance_momenta()) g.emplace_back(p, phi);
  return g;
}

inline VerificationReport check_ft_oracle(const SuiteOptions& o = {}) {
  auto r = ftoracle::oracle_report(detail::cap(o, 4), acceptance_grid(), {}, detail::tol(o, 1e-6));
  r.grid_desc += " (20 log p in [0.05,20] x phi_p in {0,2.1})";
  return r;
}

inline VerificationReport check_two_oracles(const SuiteOptions& o = {}) {
  const int n_top = detail::cap(o, 3);
  ftoracle::OracleConfig direct;
  direct.method = ftoracle::Method::direct_2d;
  ErrorTracker err;
  for (int n = 0; n <= n_top; ++n)
    for (int m = -n; m <= n; ++m)
      for (double p : detail::logspace(0.05, 2.0, 10)) {
        const QuantumNumbers qn(n, m);
        const MomentumPoint mp(p, 0.6);
        err.add(ftoracle::ft_direct_2d(qn, mp, direct), ftoracle::ft_hankel(qn, mp));
      }
  return make_report("ft.two_oracles", "|m|<=n<=" + std::to_string(n_top) + ", 10 log p in [0.05,2], phi_p = 0.6", err,
                     detail::tol(o, 1e-7), ErrorMetric::absolute, "Hankel reduction vs direct polar 2D quadrature");
}

inline VerificationReport check_ft_convergence(const SuiteOptions& o = {}) {
  const int n_top = detail::cap(o, 4);
  ftoracle::OracleConfig fine;
  fine.radial_nodes = 1024;
  ErrorTracker err;
  for (int n = 0; n <= n_top; ++n)
    for (int m = 0; m <= n; ++m)
      for (double p : acceptance_momenta()) {
        const QuantumNumbers qn(n, m);
        err.add(ftoracle::hankel_integral(qn, p, fine), ftoracle::hankel_integral(qn, p));
      }
  return make_report("ft.convergence", "0<=m<=n<=" + std::to_string(n_top) + ", 20 log p", err, detail::tol(o, 1e-9),
                     ErrorMetric::absolute, "radial_nodes 512 -> 1024");
}

inline VerificationReport check_ft_phase(const SuiteOptions& o = {}) {
  const int n_top = detail::cap(o, 4);
  ErrorTracker err;
  for (int n = 0; n <= n_top; ++n)
    for (int m = -n; m <= n; ++m)
      for (double p : {0.1, 0.6, 2.0})
        for (double phi : {0.5, 2.9, -1.7}) {
          const QuantumNumbers qn(n, m);
          const cplx a = ftoracle::ft_hankel(qn, {p, phi});
          const cplx b = ftoracle::ft_hankel(qn, {p, 0.0});
          if (std::abs(a) <= 1e-6 || std::abs(b) <= 1e-6) continue;
          const double d = std::remainder(std::arg(a) - std::arg(b) - m * phi, 2.0 * std::numbers::pi);
          err.add(d, 0.0);
        }
  return make_report("ft.phase", "|m|<=n<=" + std::to_string(n_top) + " where |psi| > 1e-6", err, detail::tol(o, 1e-8),
                     ErrorMetric::absolute, "arg difference minus m phi_p, mod 2pi");
}

inline VerificationReport check_ft_origin(const SuiteOptions& o = {}) {
  ErrorTracker err;
  err.add(ftoracle::ft_hankel({0, 0}, {0.0, 0.0}), cplx(1.0 / std::sqrt(2.0 * std::numbers::pi)));
  err.add(ftoracle::ft_hankel({1, 1}, {0.0, 0.0}), cplx{});
  return make_report("ft.origin", "n=0 and n=m=1 at p=0", err, detail::tol(o, 1e-8), ErrorMetric::absolute,
                     "int N_00 e^{-2 rho} rho drho = N_00/4 = 1/sqrt(2 pi)");
}

inline std::vector<VerificationReport> ft_suite(const SuiteOptions& o = {}) {
  return {check_ft_oracle(o), check_two_oracles(o), check_ft_convergence(o), check_ft_phase(o), check_ft_origin(o)};
}

// ---------------------------------------------------------------- dispatch

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"polys", "position", "momentum", "levicivita", "genfunc", "ft"};
  return names;
}

inline std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& o = {}) {
  if (name == "polys") return polys_suite(o);
  if (name == "position") return position_suite(o);
  if (name == "momentum") return momentum_suite(o);
  if (name == "levicivita") return levicivita_suite(o);
  if (name == "genfunc") return genfunc_suite(o);
  if (name == "ft") return ft_suite(o);
  if (name == "all") {
    std::vector<VerificationReport> all;
    for (const auto& s : suite_names()) {
      auto r = run_suite(s, o);
      all.insert(all.end(), r.begin(), r.end());
    }
    return all;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace h2d::verify
