#include "h2d/levicivita.hpp"
#include "h2d/verify.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace h2d;
using cplx = std::complex<double>;

TEST(LcMap, Examples) {
  auto a = lc::lc_map({1.0, 0.0});
  EXPECT_EQ(a.x, 1.0);
  EXPECT_EQ(a.y, 0.0);
  EXPECT_EQ(a.rho, 1.0);
  auto b = lc::lc_map({0.0, 1.0});
  EXPECT_EQ(b.x, -1.0);
  EXPECT_EQ(b.y, 0.0);
  EXPECT_EQ(b.rho, 1.0);
  auto c = lc::lc_map({1.0, 1.0});
  EXPECT_EQ(c.x, 0.0);
  EXPECT_EQ(c.y, 2.0);
  EXPECT_EQ(c.rho, 2.0);
}

TEST(LcMap, TwoFoldCovering) {
  for (auto u : {lc::UPoint{0.3, -1.2}, lc::UPoint{2.0, 0.7}}) {
    const auto a = lc::lc_map(u), b = lc::lc_map({-u.u1, -u.u2});
    EXPECT_EQ(a.x, b.x);
    EXPECT_EQ(a.y, b.y);
    EXPECT_NEAR(a.rho, std::hypot(a.x, a.y), 1e-15);
  }
}

TEST(LcJacobian, Examples) {
  EXPECT_EQ(lc::lc_jacobian({1.0, 1.0}), 8.0);
  EXPECT_EQ(lc::lc_jacobian({0.0, 0.0}), 0.0);
  EXPECT_TRUE(verify::check_jacobian().pass);
}

TEST(MeasureFactor, IsTwo) {
  EXPECT_NEAR(lc::lc_measure_factor(), 2.0, 1e-8);
  // f = e^{-rho}: 2 pi on the r-plane, pi on the u-plane with weight u^2
  EXPECT_NEAR(lc::measure_factor_ratio([](double x, double y) { return std::exp(-std::hypot(x, y)); }), 2.0, 1e-8);
}

TEST(MeasureFactor, ReportStatesConstant) {
  const auto r = verify::check_measure_factor();
  EXPECT_TRUE(r.pass);
  EXPECT_NE(r.notes.find("measured measure factor c = 2.0"), std::string::npos);
}

TEST(GenFuncParams, Domain) {
  EXPECT_THROW(lc::GenFuncParams(cplx(1.0, 0.0), 0.0, 1.0), std::domain_error);
  EXPECT_THROW(lc::GenFuncParams(0.5, 0.0, 0.0), std::invalid_argument);
  EXPECT_THROW(lc::GenFuncParams(0.5, 0.0, 1.0, -0.1), std::invalid_argument);
}

TEST(QuadraticForm, OriginParameters) {
  const double q0 = 1.3;
  const MomentumPoint p(0.8, 0.6);
  const auto x = lc::quadratic_form_matrix(lc::GenFuncParams(0.0, 0.0, q0), p);
  EXPECT_NEAR(std::abs(x.a11 - cplx(q0, p.px())), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(x.a22 - cplx(q0, -p.px())), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(x.a12 - cplx(0.0, p.py())), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(lc::det_x(lc::GenFuncParams(0.0, 0.0, q0), p) - cplx(q0 * q0 + 0.64)), 0.0, 1e-14);
}

TEST(QuadraticForm, TraceAndSymmetry) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    const auto d = verify::detail::random_draw(rng);
    const auto x = lc::quadratic_form_matrix(d.gp, d.p);
    EXPECT_EQ(x.a12, x.a21);
    const cplx z = d.gp.z();
    const cplx expect = 2.0 * ((1.0 + z) * d.gp.q0() / (1.0 - z) + d.gp.beta());
    EXPECT_LE(std::abs(x.trace() - expect), 1e-12 * std::abs(expect));
  }
}

TEST(QuadraticForm, MatchesExponentUnderMap) {
  // u^T X u = i p.r + [(1+z) q0/(1-z) + beta] rho - 2 t z q0 (x + i y)/(1-z)^2
  const lc::GenFuncParams gp(cplx(0.3, 0.2), cplx(-0.4, 0.5), 0.9, 0.7);
  const MomentumPoint p(1.7, 2.3);
  const auto x = lc::quadratic_form_matrix(gp, p);
  const cplx z = gp.z(), t = gp.t();
  for (auto u : {lc::UPoint{0.4, -1.1}, lc::UPoint{1.5, 0.2}}) {
    const auto r = lc::lc_map(u);
    const cplx expo = cplx(0.0, p.px() * r.x + p.py() * r.y) + ((1.0 + z) * gp.q0() / (1.0 - z) + gp.beta()) * r.rho -
                      2.0 * t * z * gp.q0() * cplx(r.x, r.y) / ((1.0 - z) * (1.0 - z));
    EXPECT_LE(std::abs(x.form(u.u1, u.u2) - expo), 1e-13 * std::abs(expo));
  }
}

TEST(DetX, TZeroReduction) {
  const double q0 = 0.7, beta = 1.2;
  const cplx z(0.4, -0.3);
  const MomentumPoint p(2.0, 0.4);
  const cplx a = (1.0 + z) * q0 + beta * (1.0 - z);
  const cplx expect = (a * a + 4.0 * (1.0 - z) * (1.0 - z)) / ((1.0 - z) * (1.0 - z));
  const cplx got = lc::det_x(lc::GenFuncParams(z, 0.0, q0, beta), p);
  EXPECT_LE(std::abs(got - expect), 1e-13 * std::abs(expect));
}

TEST(GenFuncMomentum, GroundCoefficient) {
  // (0,0) Taylor coefficient = q0/(p^2+q0^2)^{3/2} = N_00^{-1} psi_00(p) at q0 = 2
  for (double p : {0.0, 0.5, 3.0}) {
    const MomentumPoint mp(p, 0.3);
    const auto g = lc::gen_func_momentum(lc::GenFuncParams(0.0, 0.0, 2.0), mp).g;
    EXPECT_NEAR(g.real(), 2.0 / std::pow(p * p + 4.0, 1.5), 1e-15);
    const double psi = momentum::psi_momentum({0, 0}, mp).real() / position::normalization({0, 0});
    EXPECT_NEAR(g.real(), psi, 1e-15);
  }
}

TEST(GenFuncMomentum, BetaDerivativeByFiniteDifference) {
  const lc::GenFuncParams g0(cplx(0.2, 0.1), cplx(0.3, -0.2), 1.1, 0.0);
  const lc::GenFuncParams g2(g0.z(), g0.t(), g0.q0(), 2e-6);
  const lc::GenFuncParams g1(g0.z(), g0.t(), g0.q0(), 1e-6);
  const MomentumPoint p(0.9, 1.4);
  const cplx fd = -(lc::gen_func_momentum(g2, p).with_beta - lc::gen_func_momentum(g0, p).with_beta) / 2e-6;
  const cplx an = lc::gen_func_beta_derivative(g1, p);
  EXPECT_LE(std::abs(fd - an), 1e-6 * std::abs(an));
  EXPECT_LE(std::abs(lc::gen_func_beta_derivative(g0, p) - lc::gen_func_momentum(g0, p).g), 1e-15);
}

TEST(GaussianIntegral, SimpleMatrix) {
  lc::QuadraticFormMatrix x{cplx(2.0, 0.5), cplx(0.3, 0.1), cplx(0.3, 0.1), cplx(1.0, -0.4)};
  const cplx expect = std::numbers::pi / std::sqrt(x.det());
  EXPECT_LE(std::abs(lc::gaussian_integral_quadrature(x) - expect), 1e-10);
  lc::QuadraticFormMatrix bad{cplx(-1.0), cplx(0.0), cplx(0.0), cplx(1.0)};
  EXPECT_THROW(lc::gaussian_integral_quadrature(bad), std::domain_error);
}

TEST(LeviCivitaSuite, AllChecksPass) {
  for (const auto& r : verify::levicivita_suite()) {
    EXPECT_TRUE(r.pass) << r.check_name << " err=" << r.applicable_error() << " tol=" << r.tolerance;
    EXPECT_GT(r.comparisons, 0u) << r.check_name;
  }
}

TEST(LeviCivitaSuite, CoefficientConstantReported) {
  const auto r = verify::check_coefficient_consistency();
  EXPECT_NE(r.notes.find("kappa = 0.5"), std::string::npos) << r.notes;
}
