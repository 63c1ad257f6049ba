#pragma once

// Value types shared across the library.

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace h2d {

/// (n, m) with n >= 0 and |m| <= n.
class QuantumNumbers {
public:
  QuantumNumbers(int n, int m) : n_(n), m_(m) {
    if (n < 0) throw std::invalid_argument("QuantumNumbers: n must be nonnegative");
    if (std::abs(m) > n)
      throw std::invalid_argument("QuantumNumbers: |m| <= n violated (n=" + std::to_string(n) +
                                  ", m=" + std::to_string(m) + ")");
  }
  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  int abs_m() const noexcept { return std::abs(m_); }

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;

private:
  int n_;
  int m_;
};

struct BoundState {
  QuantumNumbers qn;
  double q0;      // 1/(n+1/2)
  double energy;  // -q0^2
};

/// Polar point, rho >= 0.
class PolarPoint {
public:
  PolarPoint(double rho, double phi) : rho_(rho), phi_(phi) {
    if (!(rho >= 0.0)) throw std::invalid_argument("PolarPoint: rho must be nonnegative");
  }
  double rho() const noexcept { return rho_; }
  double phi() const noexcept { return phi_; }
  double x() const noexcept { return rho_ * std::cos(phi_); }
  double y() const noexcept { return rho_ * std::sin(phi_); }

private:
  double rho_;
  double phi_;
};

class MomentumPoint {
public:
  MomentumPoint(double p, double phi_p) : p_(p), phi_p_(phi_p) {
    if (!(p >= 0.0)) throw std::invalid_argument("MomentumPoint: p must be nonnegative");
  }
  double p() const noexcept { return p_; }
  double phi_p() const noexcept { return phi_p_; }
  double px() const noexcept { return p_ * std::cos(phi_p_); }
  double py() const noexcept { return p_ * std::sin(phi_p_); }

private:
  double p_;
  double phi_p_;
};

/// q in [-1, 1].
class FockVariable {
public:
  explicit FockVariable(double q) : q_(q) {
    if (!(q >= -1.0 && q <= 1.0)) throw std::invalid_argument("FockVariable: q outside [-1, 1]");
  }
  double value() const noexcept { return q_; }

private:
  double q_;
};

}  // namespace h2d
