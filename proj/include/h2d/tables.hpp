#pragma once

// Spectrum and wavefunction tables, and their CSV rendering.

#include "h2d/momentum.hpp"
#include "h2d/position.hpp"
#include "h2d/report.hpp"
#include "h2d/types.hpp"

#include <complex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace h2d::tables {

struct EigenRow {
  int n;
  double q0;
  double energy;
};

inline std::vector<EigenRow> eigen_table(int n_max) {
  if (n_max < 0 || n_max > 50) throw std::invalid_argument("eigen: n_max must be in [0, 50]");
  std::vector<EigenRow> rows;
  for (int n = 0; n <= n_max; ++n) {
    const auto s = position::make_bound_state(n, 0);
    rows.push_back({n, s.q0, s.energy});
  }
  return rows;
}

enum class Space { position, momentum };

struct WaveRow {
  double coordinate;  // rho or p
  double angle;       // phi or phi_p
  std::complex<double> psi;
};

inline std::complex<double> evaluate(Space space, const QuantumNumbers& qn, double r, double angle) {
  return space == Space::position ? position::psi_position(qn, PolarPoint(r, angle))
                                  : momentum::psi_momentum(qn, MomentumPoint(r, angle));
}

/// Rows ordered by coordinate, then angle.
inline std::vector<WaveRow> wave_table(Space space, const QuantumNumbers& qn, const GridSpec& grid,
                                       const std::vector<double>& angles) {
  grid.validate();
  std::vector<WaveRow> rows;
  for (double r : grid.values())
    for (double a : angles) rows.push_back({r, a, evaluate(space, qn, r, a)});
  return rows;
}

inline void write_eigen_csv(std::ostream& os, const std::vector<EigenRow>& rows) {
  os << "n,q0,energy\n";
  for (const auto& r : rows)
    os << r.n << ',' << detail::shortest(r.q0) << ',' << detail::shortest(r.energy) << '\n';
}

/// With `mesh` the angle column is emitted; otherwise rows are a 1D slice.
inline void write_wave_csv(std::ostream& os, Space space, const std::vector<WaveRow>& rows, bool mesh) {
  const char* coord = space == Space::position ? "rho" : "p";
  const char* ang = space == Space::position ? "phi" : "phi_p";
  os << coord << ',';
  if (mesh) os << ang << ',';
  os << "re_psi,im_psi,abs2_psi\n";
  for (const auto& r : rows) {
    os << detail::shortest(r.coordinate) << ',';
    if (mesh) os << detail::shortest(r.angle) << ',';
    os << detail::shortest(r.psi.real()) << ',' << detail::shortest(r.psi.imag()) << ','
       << detail::shortest(std::norm(r.psi)) << '\n';
  }
}

}  // namespace h2d::tables
