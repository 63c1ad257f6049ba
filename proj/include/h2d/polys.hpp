#pragma once

// Orthogonal polynomials and the few special functions the rest of the
// library needs. Everything here is evaluated by upward three-term recurrence
// in the degree; the closed-form series are only used by the tests.

#include <cmath>
#include <algorithm>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace h2d::polys {

/// Degree (or series index) of a polynomial, k >= 0.
class PolyDegree {
public:
  constexpr PolyDegree(int k) : k_(k) {  // NOLINT(google-explicit-constructor)
    if (k < 0) throw std::invalid_argument("PolyDegree: negative degree " + std::to_string(k));
  }
  constexpr int value() const noexcept { return k_; }
  constexpr operator int() const noexcept { return k_; }  // NOLINT

private:
  int k_;
};

/// Superscript lambda of C_k^lambda, restricted to lambda > -1/2.
class GegenbauerOrder {
public:
  constexpr GegenbauerOrder(double lambda) : lambda_(lambda) {  // NOLINT
    if (!(lambda > -0.5)) throw std::invalid_argument("GegenbauerOrder: lambda must exceed -1/2");
  }
  /// j + 1/2, the only orders the momentum wavefunctions use.
  static constexpr GegenbauerOrder half_integer(int j) { return GegenbauerOrder(j + 0.5); }
  constexpr double value() const noexcept { return lambda_; }

private:
  double lambda_;
};

/// (a)_k = a (a+1) ... (a+k-1). Overflows to infinity for large k.
inline double pochhammer(double a, int k) {
  if (k < 0) throw std::invalid_argument("pochhammer: negative count");
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= a + i;
  return r;
}

/// k!! with (-1)!! = 0!! = 1. Exact integer arithmetic up to k = 20, floating
/// point above.
inline double double_factorial(int k) {
  if (k < -1) throw std::invalid_argument("double_factorial: k must be >= -1");
  if (k <= 20) {
    std::uint64_t r = 1;
    for (int i = k; i > 1; i -= 2) r *= static_cast<std::uint64_t>(i);
    return static_cast<double>(r);
  }
  double r = double_factorial(k % 2 == 0 ? 20 : 19);
  for (int i = k; i > 20; i -= 2) r *= i;
  return r;
}

/// k!, exact below 21.
inline double factorial(int k) {
  if (k < 0) throw std::invalid_argument("factorial: negative argument");
  if (k <= 20) {
    std::uint64_t r = 1;
    for (int i = 2; i <= k; ++i) r *= static_cast<std::uint64_t>(i);
    return static_cast<double>(r);
  }
  double r = factorial(20);
  for (int i = 21; i <= k; ++i) r *= i;
  return r;
}

// The polynomial evaluators are templates on the scalar type so that the
// identity checks can be repeated in extended precision; T is deduced from the
// evaluation point only.

/// Generalized Laguerre polynomial L_k^alpha(x).
template <class T>
  requires(!std::is_integral_v<T>)
T laguerre(PolyDegree k, std::type_identity_t<T> alpha, T x) {
  const int n = k.value();
  if (n == 0) return T(1);
  T prev = T(1);
  T cur = T(1) + alpha - x;
  for (int j = 1; j < n; ++j) {
    const T next = ((2 * j + 1 + alpha - x) * cur - (j + alpha) * prev) / (j + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Gegenbauer (ultraspherical) polynomial C_k^lambda(q); q may be any real.
template <class T>
  requires(!std::is_integral_v<T>)
T gegenbauer(PolyDegree k, GegenbauerOrder order, T q) {
  const int n = k.value();
  const T lam = T(order.value());
  if (n == 0) return T(1);
  T prev = T(1);
  T cur = 2 * lam * q;
  for (int j = 1; j < n; ++j) {
    const T next = (2 * (j + lam) * q * cur - (j + 2 * lam - 1) * prev) / (j + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// C_k^lambda(q) with C of negative degree defined as zero.
template <class T>
  requires(!std::is_integral_v<T>)
T gegenbauer_or_zero(int k, GegenbauerOrder order, T q) {
  return k < 0 ? T(0) : gegenbauer(k, order, q);
}

/// Legendre polynomial P_n(t) (Bonnet recurrence).
template <class T>
  requires(!std::is_integral_v<T>)
T legendre(PolyDegree n, T t) {
  const int l = n.value();
  if (l == 0) return T(1);
  T prev = T(1);
  T cur = t;
  for (int j = 1; j < l; ++j) {
    const T next = ((2 * j + 1) * t * cur - j * prev) / (j + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

template <class T>
  requires(!std::is_integral_v<T>)
T assoc_legendre_cs(PolyDegree n, int m, T t, T s);

/// Associated Legendre function P_n^m(t) = (1-t^2)^{m/2} d^m P_n/dt^m,
/// WITHOUT the Condon-Shortley phase. Recurrence in n at fixed m starting from
/// P_m^m = (2m-1)!! (1-t^2)^{m/2}.
template <class T>
  requires(!std::is_integral_v<T>)
T assoc_legendre(PolyDegree n, int m, T t) {
  using std::abs;
  using std::sqrt;
  if (!(abs(t) <= 1)) throw std::domain_error("assoc_legendre: require |t| <= 1");
  return assoc_legendre_cs(n, m, t, sqrt((1 - t) * (1 + t)));
}

/// Same, with s = sqrt(1-t^2) supplied by the caller. Near |t| = 1 this keeps
/// the accuracy that forming 1 - t from a rounded t would lose.
template <class T>
  requires(!std::is_integral_v<T>)
T assoc_legendre_cs(PolyDegree n, int m, T t, T s) {
  const int l = n.value();
  if (m < 0 || m > l) throw std::domain_error("assoc_legendre: require 0 <= m <= n");
  T pmm = T(1);
  for (int i = 1; i <= m; ++i) pmm *= (2 * i - 1) * s;
  if (l == m) return pmm;

  T prev = pmm;
  T cur = t * (2 * m + 1) * pmm;
  for (int j = m + 1; j < l; ++j) {
    const T next = ((2 * j + 1) * t * cur - (j + m) * prev) / (j - m + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace detail {

// Hankel asymptotic expansion for J_nu(x), x large. Terms are summed until
// they stop decreasing.
inline double bessel_j_asymptotic(int nu, double x) {
  const double mu = 4.0 * nu * nu;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double last = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    term *= (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (k * 8.0 * x);
    const double a = std::abs(term);
    if (a > last) break;
    last = a;
    switch (k % 4) {
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
      default: p += term; break;
    }
    if (a < 1e-17 * std::abs(p)) break;
  }
  const double chi = x - (0.5 * nu + 0.25) * std::numbers::pi;
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

// Miller's downward recurrence normalized by J_0 + 2 sum J_{2k} = 1.
inline double bessel_j_miller(int m, double x) {
  const int top = std::max(m, static_cast<int>(x));
  int start = top + 20 + static_cast<int>(std::sqrt(40.0 * top));
  start += start % 2;
  double jp1 = 0.0;
  double j = 1e-300;
  double sum = 0.0;
  double result = 0.0;
  for (int k = start; k > 0; --k) {
    const double jm1 = 2.0 * k / x * j - jp1;
    jp1 = j;
    j = jm1;
    if (std::abs(j) > 1e250) {
      j *= 1e-250;
      jp1 *= 1e-250;
      sum *= 1e-250;
      result *= 1e-250;
    }
    // j now holds the unnormalized J_{k-1}
    if (k - 1 == m) result = j;
    if ((k - 1) % 2 == 0 && k - 1 > 0) sum += 2.0 * j;
  }
  sum += j;
  return result / sum;
}

}  // namespace detail

/// Bessel function of the first kind J_m(x), integer m >= 0, x >= 0.
/// Miller recurrence for x <= 25, Hankel asymptotics plus upward recurrence
/// (stable for m < x) beyond.
inline double bessel_j(int m, double x) {
  if (m < 0) throw std::domain_error("bessel_j: negative order");
  if (!(x >= 0.0)) throw std::domain_error("bessel_j: negative argument");
  if (x == 0.0) return m == 0 ? 1.0 : 0.0;
  if (x < 1e-6) {
    const double h = 0.5 * x;
    return std::pow(h, m) / factorial(m) * (1.0 - h * h / (m + 1));
  }
  if (x <= 25.0 || m >= x) return detail::bessel_j_miller(m, x);
  double j0 = detail::bessel_j_asymptotic(0, x);
  if (m == 0) return j0;
  double j1 = detail::bessel_j_asymptotic(1, x);
  for (int k = 1; k < m; ++k) {
    const double j2 = 2.0 * k / x * j1 - j0;
    j0 = j1;
    j1 = j2;
  }
  return j1;
}

}  // namespace h2d::polys
