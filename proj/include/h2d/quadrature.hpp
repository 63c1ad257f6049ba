#pragma once

// Quadrature rules shared by the verification code: Gauss-Legendre on [-1,1],
// Gauss-Laguerre for the weight e^{-x} on [0, inf), a simple adaptive
// Gauss-Legendre integrator and trapezoidal Taylor-coefficient extraction on
// circles.

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace h2d::quad {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> log_weights;  // filled for Gauss-Laguerre only

  std::size_t size() const noexcept { return nodes.size(); }
};

namespace detail {

inline Rule compute_gauss_legendre(int n) {
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 1; k < n; ++k) {
        const double p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0;
    double p1 = x;
    for (int k = 1; k < n; ++k) {
      const double p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  return r;
}

// Orthonormal recurrence for e^{-x} is L_k itself. Values are carried with a
// running power-of-two scale so that nodes out at x ~ 4n do not overflow.
struct LaguerreEval {
  double ln;      // L_n / 2^scale
  double lnm1;    // L_{n-1} / 2^scale
  double sumsq;   // sum_{k<n} L_k^2 / 4^scale
  int scale;
};

inline LaguerreEval eval_laguerre_scaled(int n, double x) {
  double prev = 1.0;
  double cur = 1.0 - x;
  double sumsq = 1.0;
  int scale = 0;
  for (int k = 1; k < n; ++k) {
    sumsq += cur * cur;
    const double next = ((2 * k + 1 - x) * cur - k * prev) / (k + 1);
    prev = cur;
    cur = next;
    if (std::abs(cur) > 0x1p200) {
      cur = std::ldexp(cur, -200);
      prev = std::ldexp(prev, -200);
      sumsq = std::ldexp(sumsq, -400);
      scale += 200;
    }
  }
  return {cur, prev, sumsq, scale};
}

inline Rule compute_gauss_laguerre(int n) {
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 1);
  for (int k = 0; k < n; ++k) diag(k) = 2.0 * k + 1.0;
  for (int k = 1; k < n; ++k) sub(k - 1) = k;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("gauss_laguerre: eigen solve failed");

  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  r.log_weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()(i);
    for (int it = 0; it < 8; ++it) {
      const auto e = eval_laguerre_scaled(n, x);
      // L_n' = n (L_n - L_{n-1}) / x
      const double d = n * (e.ln - e.lnm1) / x;
      const double dx = e.ln / d;
      x -= dx;
      if (std::abs(dx) <= 1e-15 * x) break;
    }
    const auto e = eval_laguerre_scaled(n, x);
    r.nodes[i] = x;
    // Christoffel: w = 1 / sum_{k<n} L_k(x)^2
    const double logw = -(std::log(e.sumsq) + 2.0 * e.scale * std::numbers::ln2);
    r.weights[i] = std::exp(logw);
    r.log_weights[i] = logw;
  }
  return r;
}

template <class Compute>
const Rule& cached(std::map<int, Rule>& cache, std::mutex& mu, int n, Compute compute) {
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute(n)).first;
  return it->second;
}

}  // namespace detail

/// n-point Gauss-Legendre rule on [-1, 1].
inline const Rule& gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  static std::map<int, Rule> cache;
  static std::mutex mu;
  return detail::cached(cache, mu, n, detail::compute_gauss_legendre);
}

/// n-point Gauss-Laguerre rule: sum w_i f(x_i) ~ int_0^inf e^{-x} f(x) dx.
/// Weights of the outermost nodes underflow to zero for large n.
inline const Rule& gauss_laguerre(int n) {
  if (n < 2) throw std::invalid_argument("gauss_laguerre: n must be at least 2");
  static std::map<int, Rule> cache;
  static std::mutex mu;
  return detail::cached(cache, mu, n, detail::compute_gauss_laguerre);
}

/// Gauss-Legendre over [a, b].
template <class F>
auto integrate_panel(F&& f, double a, double b, const Rule& gl) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  decltype(f(a)) sum{};
  for (std::size_t i = 0; i < gl.size(); ++i) sum += gl.weights[i] * f(mid + half * gl.nodes[i]);
  return sum * half;
}

/// Adaptive bisection with a 20-point vs 40-point Gauss-Legendre error
/// estimate. abs_tol is the total absolute tolerance over [a, b].
inline double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                 double abs_tol, int max_depth = 40) {
  const Rule& lo = gauss_legendre(20);
  const Rule& hi = gauss_legendre(40);
  std::function<double(double, double, double, int)> rec = [&](double x0, double x1, double tol,
                                                               int depth) -> double {
    const double coarse = integrate_panel(f, x0, x1, lo);
    const double fine = integrate_panel(f, x0, x1, hi);
    if (std::abs(fine - coarse) <= tol || depth >= max_depth) return fine;
    const double xm = 0.5 * (x0 + x1);
    return rec(x0, xm, 0.5 * tol, depth + 1) + rec(xm, x1, 0.5 * tol, depth + 1);
  };
  return rec(a, b, abs_tol, 0);
}

/// Taylor coefficients a_0..a_{count-1} of f(z) = sum a_k z^k from `nodes`
/// trapezoid samples on |z| = radius. Aliasing error is a_{k+nodes} radius^nodes.
inline std::vector<std::complex<double>> taylor_coefficients(
    const std::function<std::complex<double>(std::complex<double>)>& f, double radius, int nodes,
    int count) {
  if (count > nodes) throw std::invalid_argument("taylor_coefficients: count exceeds node count");
  std::vector<std::complex<double>> samples(nodes);
  for (int j = 0; j < nodes; ++j)
    samples[j] = f(std::polar(radius, 2.0 * std::numbers::pi * j / nodes));
  std::vector<std::complex<double>> out(count);
  for (int k = 0; k < count; ++k) {
    std::complex<double> acc{};
    for (int j = 0; j < nodes; ++j)
      acc += samples[j] * std::polar(1.0, -2.0 * std::numbers::pi * double(j) * k / nodes);
    out[k] = acc / (nodes * std::pow(radius, k));
  }
  return out;
}

/// Double Taylor coefficients c[n][m] of f(z, t) by nested trapezoid rules.
inline std::vector<std::vector<std::complex<double>>> taylor_coefficients_2d(
    const std::function<std::complex<double>(std::complex<double>, std::complex<double>)>& f,
    double radius_z, double radius_t, int nodes, int count_z, int count_t) {
  if (count_z > nodes || count_t > nodes)
    throw std::invalid_argument("taylor_coefficients_2d: count exceeds node count");
  std::vector<std::vector<std::complex<double>>> samples(nodes, std::vector<std::complex<double>>(nodes));
  for (int j = 0; j < nodes; ++j) {
    const auto z = std::polar(radius_z, 2.0 * std::numbers::pi * j / nodes);
    for (int l = 0; l < nodes; ++l)
      samples[j][l] = f(z, std::polar(radius_t, 2.0 * std::numbers::pi * l / nodes));
  }
  std::vector<std::vector<std::complex<double>>> out(count_z, std::vector<std::complex<double>>(count_t));
  for (int a = 0; a < count_z; ++a) {
    for (int b = 0; b < count_t; ++b) {
      std::complex<double> acc{};
      for (int j = 0; j < nodes; ++j)
        for (int l = 0; l < nodes; ++l)
          acc += samples[j][l] * std::polar(1.0, -2.0 * std::numbers::pi * (double(j) * a + double(l) * b) / nodes);
      out[a][b] = acc / (double(nodes) * nodes * std::pow(radius_z, a) * std::pow(radius_t, b));
    }
  }
  return out;
}

}  // namespace h2d::quad
