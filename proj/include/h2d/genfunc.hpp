#pragma once

// Closed-form generating functions and their truncated series.
//
// Each closed form `foo` comes with `foo_series(..., n_max)` summing the
// defining power series through z^{n_max} from the polynomial evaluators, so
// that the two can be compared independently.

#include "h2d/polys.hpp"
#include "h2d/position.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace h2d::genfunc {

using cplx = std::complex<double>;

inline constexpr int kDefaultNMax = 80;

/// Partial sum plus a geometric estimate of the neglected tail,
/// |last term| |z| / (1 - |z|)^2.
struct SeriesTruncation {
  int n_max = kDefaultNMax;
  double tail_bound = 0.0;
};

struct SeriesValue {
  cplx value;
  SeriesTruncation truncation;
};

namespace detail {
inline void require_disk(cplx z, const char* who) {
  if (!(std::abs(z) < 1.0)) throw std::domain_error(std::string(who) + ": |z| must be < 1");
}
inline double tail_estimate(cplx last_term, cplx z) {
  const double a = std::abs(z);
  return std::abs(last_term) * a / ((1.0 - a) * (1.0 - a));
}
}  // namespace detail

/// sum_n z^n L_n^{(r)}(v) = (1-z)^{-r-1} exp(-z v/(1-z)).
inline cplx laguerre_gf(cplx z, double r, double v) {
  detail::require_disk(z, "laguerre_gf");
  return std::pow(1.0 - z, -(r + 1.0)) * std::exp(-z * v / (1.0 - z));
}

inline SeriesValue laguerre_gf_series(cplx z, double r, double v, int n_max = kDefaultNMax) {
  detail::require_disk(z, "laguerre_gf_series");
  cplx sum{};
  cplx zn = 1.0;
  cplx last{};
  for (int n = 0; n <= n_max; ++n) {
    last = zn * polys::laguerre(n, r, v);
    sum += last;
    zn *= z;
  }
  return {sum, {n_max, detail::tail_estimate(last, z)}};
}

/// sum_n z^n L_{n-m}^{2m}(v) = z^m (1-z)^{-2m-1} exp(-z v/(1-z)), m >= 0.
inline cplx shifted_laguerre_gf(cplx z, int m, double v) {
  detail::require_disk(z, "shifted_laguerre_gf");
  if (m < 0) throw std::invalid_argument("shifted_laguerre_gf: m must be nonnegative");
  return std::pow(z, m) * laguerre_gf(z, 2.0 * m, v);
}

/// Terms n = m .. n_max.
inline SeriesValue shifted_laguerre_gf_series(cplx z, int m, double v, int n_max = kDefaultNMax) {
  detail::require_disk(z, "shifted_laguerre_gf_series");
  cplx sum{};
  cplx last{};
  for (int n = m; n <= n_max; ++n) {
    last = std::pow(z, n) * polys::laguerre(n - m, 2.0 * m, v);
    sum += last;
  }
  return {sum, {n_max, detail::tail_estimate(last, z)}};
}

/// G(z, t; q0, rho, phi) = sum_{n, 0<=m<=n} z^n t^m/m! N_nm^{-1} Psi_nm
///   = (1-z)^{-1} e^{-q0 rho} exp(-2 z q0 rho/(1-z) + 2 t z q0 (x + i y)/(1-z)^2)
/// with fixed q0 and the (x + i y) branch.
inline cplx coordinate_gf(cplx z, cplx t, double q0, const PolarPoint& pt) {
  detail::require_disk(z, "coordinate_gf");
  if (!(q0 > 0.0)) throw std::invalid_argument("coordinate_gf: q0 must be positive");
  const double rho = pt.rho();
  const cplx omz = 1.0 - z;
  const cplx xy = std::polar(rho, pt.phi());
  return std::exp(-q0 * rho) / omz * std::exp(-z * (2.0 * q0 * rho) / omz + 2.0 * t * z * q0 * xy / (omz * omz));
}

/// Double sum over n <= n_max, 0 <= m <= n, of the fixed-q0 basis functions.
inline SeriesValue coordinate_gf_series(cplx z, cplx t, double q0, const PolarPoint& pt,
                                        int n_max = 40) {
  detail::require_disk(z, "coordinate_gf_series");
  cplx sum{};
  cplx last_row{};
  for (int n = 0; n <= n_max; ++n) {
    cplx row{};
    cplx tm = 1.0;
    for (int m = 0; m <= n; ++m) {
      row += tm * position::sturmian_unnormalized(QuantumNumbers(n, m), q0, pt);
      tm *= t / double(m + 1);
    }
    last_row = std::pow(z, n) * row;
    sum += last_row;
  }
  return {sum, {n_max, detail::tail_estimate(last_row, z)}};
}

/// (1 - 2 q z + z^2)^{-alpha}, principal branch.
inline cplx gegenbauer_gf(cplx z, double q, double alpha) {
  detail::require_disk(z, "gegenbauer_gf");
  if (!(q >= -1.0 && q <= 1.0)) throw std::domain_error("gegenbauer_gf: q outside [-1, 1]");
  return std::pow(1.0 - 2.0 * q * z + z * z, -alpha);
}

inline SeriesValue gegenbauer_gf_series(cplx z, double q, double alpha, int n_max = kDefaultNMax) {
  detail::require_disk(z, "gegenbauer_gf_series");
  cplx sum{};
  cplx zn = 1.0;
  cplx last{};
  for (int k = 0; k <= n_max; ++k) {
    last = zn * polys::gegenbauer(k, alpha, q);
    sum += last;
    zn *= z;
  }
  return {sum, {n_max, detail::tail_estimate(last, z)}};
}

/// (1-z^2) z^m (1 - 2 z t + z^2)^{-m-3/2}, the function whose z^n coefficient
/// is C_{n-m}^{m+3/2}(t) - C_{n-m-2}^{m+3/2}(t) = (2n+1)/(2m+1) C_{n-m}^{m+1/2}(t).
inline cplx gegenbauer_shifted_gf(cplx z, double t, int m) {
  detail::require_disk(z, "gegenbauer_shifted_gf");
  if (m < 0) throw std::invalid_argument("gegenbauer_shifted_gf: m must be nonnegative");
  return (1.0 - z * z) * std::pow(z, m) * std::pow(1.0 - 2.0 * z * t + z * z, -(m + 1.5));
}

/// Series sum_{n>=m} z^n (2n+1)/(2m+1) C_{n-m}^{m+1/2}(t).
inline SeriesValue gegenbauer_shifted_gf_series(cplx z, double t, int m, int n_max = kDefaultNMax) {
  detail::require_disk(z, "gegenbauer_shifted_gf_series");
  const auto order = polys::GegenbauerOrder::half_integer(m);
  cplx sum{};
  cplx last{};
  for (int n = m; n <= n_max; ++n) {
    last = std::pow(z, n) * ((2.0 * n + 1.0) / (2.0 * m + 1.0)) * polys::gegenbauer(n - m, order, t);
    sum += last;
  }
  return {sum, {n_max, detail::tail_estimate(last, z)}};
}

/// Generating function of the associated Legendre functions (no
/// Condon-Shortley phase):
///   (1-t^2)^{m/2} (1-z^2) z^m / (1 - 2 z t + z^2)^{m+3/2}
///     = sum_{n>=m} z^n (2n+1)/(2m+1)!! P_n^m(t).
inline cplx new_legendre_gf(cplx z, double t, int m) {
  detail::require_disk(z, "new_legendre_gf");
  if (!(t > -1.0 && t < 1.0)) throw std::domain_error("new_legendre_gf: t must lie in (-1, 1)");
  if (m < 0) throw std::invalid_argument("new_legendre_gf: m must be nonnegative");
  return std::pow((1.0 - t) * (1.0 + t), 0.5 * m) * gegenbauer_shifted_gf(z, t, m);
}

inline SeriesValue new_legendre_gf_series(cplx z, double t, int m, int n_max = kDefaultNMax) {
  detail::require_disk(z, "new_legendre_gf_series");
  if (!(t > -1.0 && t < 1.0)) throw std::domain_error("new_legendre_gf_series: t must lie in (-1, 1)");
  const double dfact = polys::double_factorial(2 * m + 1);
  cplx sum{};
  cplx last{};
  for (int n = m; n <= n_max; ++n) {
    last = std::pow(z, n) * ((2.0 * n + 1.0) / dfact) * polys::assoc_legendre(n, m, t);
    sum += last;
  }
  return {sum, {n_max, detail::tail_estimate(last, z)}};
}

/// Least C with |err(N)| <= C |z|^{N - m} over the sampled cutoffs.
inline double fit_tail_constant(const std::vector<int>& cutoffs, const std::vector<double>& errors,
                                double abs_z, int m = 0) {
  double c = 0.0;
  for (std::size_t i = 0; i < cutoffs.size(); ++i)
    c = std::max(c, errors[i] / std::pow(abs_z, cutoffs[i] - m));
  return c;
}

}  // namespace h2d::genfunc
