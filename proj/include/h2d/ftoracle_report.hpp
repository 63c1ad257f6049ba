#pragma once

// Comparison of the closed-form momentum wavefunctions with the Fourier
// oracle. Kept apart from ftoracle.hpp, which must not see the closed forms.

#include "h2d/ftoracle.hpp"
#include "h2d/momentum.hpp"
#include "h2d/report.hpp"

#include <string>
#include <vector>

namespace h2d::ftoracle {

inline constexpr double kOracleTolerance = 1e-6;

/// max |psi_momentum - ft_hankel| over |m| <= n <= n_max and the grid.
inline VerificationReport oracle_report(int n_max, const std::vector<MomentumPoint>& grid,
                                        const OracleConfig& cfg = {}, double tol = kOracleTolerance) {
  if (n_max < 0 || n_max > 8) throw std::invalid_argument("oracle_report: n_max must lie in [0, 8]");
  ErrorTracker err(1e-300);
  for (int n = 0; n <= n_max; ++n)
    for (int m = -n; m <= n; ++m)
      for (const auto& mp : grid) {
        const QuantumNumbers qn(n, m);
        err.add(ft_hankel(qn, mp, cfg), momentum::psi_momentum(qn, mp));
      }
  std::string grid_desc = "|m|<=n<=" + std::to_string(n_max) + ", " + std::to_string(grid.size()) + " momentum points";
  return make_report("ft.oracle_vs_closed_form", grid_desc, err, tol, ErrorMetric::absolute,
                     "closed form normalized for the unitary 1/(2pi) transform; phase (-i)^|m| e^{i m phi_p} "
                     "with P_n^m lacking the Condon-Shortley factor");
}

}  // namespace h2d::ftoracle
