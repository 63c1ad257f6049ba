#include "h2d/polys.hpp"
#include "h2d/verify.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include <cmath>

using namespace h2d::polys;
using quad_real = boost::multiprecision::cpp_bin_float_quad;

TEST(Pochhammer, Examples) {
  EXPECT_EQ(pochhammer(7.3, 0), 1.0);
  EXPECT_DOUBLE_EQ(pochhammer(1.5, 2), 3.75);
  for (int m = 0; m <= 8; ++m)
    EXPECT_NEAR(pochhammer(1.5, m), factorial(2 * m + 1) / (std::pow(4.0, m) * factorial(m)),
                1e-14 * pochhammer(1.5, m));
}

TEST(DoubleFactorial, Examples) {
  EXPECT_EQ(double_factorial(-1), 1.0);
  EXPECT_EQ(double_factorial(0), 1.0);
  EXPECT_EQ(double_factorial(5), 15.0);
  for (int m = 0; m <= 10; ++m) EXPECT_EQ(double_factorial(2 * m + 1), (2 * m + 1) * double_factorial(2 * m - 1));
  EXPECT_THROW(double_factorial(-2), std::invalid_argument);
}

TEST(Laguerre, Examples) {
  EXPECT_EQ(laguerre(0, 2.0, 5.0), 1.0);
  EXPECT_DOUBLE_EQ(laguerre(1, 2.0, 1.0), 2.0);
  EXPECT_DOUBLE_EQ(laguerre(2, 0.0, 1.0), -0.5);
}

TEST(Laguerre, ExplicitSeries) {
  // L_n^a(x) = sum_k (-1)^k binom(n+a, n-k) x^k / k!
  for (int n = 0; n <= 12; ++n)
    for (double a : {0.0, 1.0, 4.0})
      for (double x : {0.3, 2.0, 7.5}) {
        double s = 0.0;
        for (int k = 0; k <= n; ++k) {
          const double binom = std::tgamma(n + a + 1) / (std::tgamma(n - k + 1) * std::tgamma(a + k + 1));
          s += (k % 2 ? -1.0 : 1.0) * binom * std::pow(x, k) / factorial(k);
        }
        EXPECT_NEAR(laguerre(n, a, x), s, 1e-10 * std::max(1.0, std::abs(s))) << n << " " << a << " " << x;
      }
}

TEST(Gegenbauer, Examples) {
  EXPECT_EQ(gegenbauer(0, 1.5, 0.3), 1.0);
  EXPECT_DOUBLE_EQ(gegenbauer(1, 1.5, 0.5), 1.5);
  EXPECT_DOUBLE_EQ(gegenbauer(2, 1.5, 0.5), 0.375);
  EXPECT_EQ(gegenbauer_or_zero(-1, 2.5, 0.4), 0.0);
  EXPECT_EQ(gegenbauer_or_zero(-2, 2.5, 0.4), 0.0);
}

TEST(Gegenbauer, OrderDomain) {
  EXPECT_THROW(GegenbauerOrder(-0.5), std::invalid_argument);
  EXPECT_EQ(GegenbauerOrder::half_integer(3).value(), 3.5);
  EXPECT_THROW(PolyDegree(-1), std::invalid_argument);
}

TEST(Gegenbauer, EntireOutsideInterval) {
  // C_2^l(q) = 2 l (l+1) q^2 - l
  EXPECT_DOUBLE_EQ(gegenbauer(2, 1.5, 3.0), 2 * 1.5 * 2.5 * 9.0 - 1.5);
}

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre(0, 0.7), 1.0);
  EXPECT_DOUBLE_EQ(legendre(2, 0.0), -0.5);
  EXPECT_DOUBLE_EQ(legendre(3, 1.0), 1.0);
}

TEST(AssocLegendre, Examples) {
  EXPECT_DOUBLE_EQ(assoc_legendre(1, 1, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(assoc_legendre(2, 2, 0.0), 3.0);
  EXPECT_EQ(assoc_legendre(5, 0, 0.4), legendre(5, 0.4));
  EXPECT_THROW(assoc_legendre(2, 3, 0.1), std::domain_error);
  EXPECT_THROW(assoc_legendre(2, 1, 1.1), std::domain_error);
}

TEST(AssocLegendre, NoCondonShortleyPhase) {
  // P_2^1(t) = 3 t sqrt(1-t^2), positive for t in (0,1)
  for (double t : {0.1, 0.5, 0.9}) EXPECT_NEAR(assoc_legendre(2, 1, t), 3 * t * std::sqrt(1 - t * t), 1e-15);
  // P_3^2(t) = 15 t (1-t^2)
  EXPECT_NEAR(assoc_legendre(3, 2, 0.4), 15 * 0.4 * (1 - 0.16), 1e-14);
}

TEST(AssocLegendre, SuppliedSineMatches) {
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= n; ++m)
      for (double t : {-0.8, 0.0, 0.35})
        EXPECT_NEAR(assoc_legendre_cs(n, m, t, std::sqrt(1 - t * t)), assoc_legendre(n, m, t),
                    1e-14 * std::sqrt(factorial(n + m) / factorial(n - m)));
}

TEST(Bessel, Examples) {
  EXPECT_EQ(bessel_j(0, 0.0), 1.0);
  EXPECT_EQ(bessel_j(3, 0.0), 0.0);
  EXPECT_NEAR(bessel_j(0, 2.404825557695773), 0.0, 1e-10);
}

TEST(Bessel, AgainstBoost) {
  double worst = 0.0;
  for (int m = 0; m <= 12; ++m)
    for (int i = 0; i <= 600; ++i) {
      const double x = 0.1 * i;
      worst = std::max(worst, std::abs(bessel_j(m, x) - boost::math::cyl_bessel_j(m, x)));
    }
  EXPECT_LE(worst, 1e-12);
}

TEST(Bessel, LargeArgument) {
  for (int m : {0, 1, 5, 20})
    for (double x : {80.0, 150.0, 400.0})
      EXPECT_NEAR(bessel_j(m, x), boost::math::cyl_bessel_j(m, x), 1e-12) << m << " " << x;
}

// errors measured against the size of the family on [-1, 1]: C_k^l(1) and
// sqrt((n+m)!/(n-m)!), so that roots do not dominate
TEST(Precision, DoubleKernelAgreesWithQuad) {
  double worst = 0.0;
  for (int k = 0; k <= 24; ++k)
    for (double lam : {0.5, 2.5, 5.5, 12.5})
      for (double q : {-1.0, -0.73, 0.0, 0.41, 1.0}) {
        const double d = gegenbauer(k, lam, q);
        const double r = static_cast<double>(gegenbauer(k, lam, quad_real(q)));
        const double scale = std::max(1.0, gegenbauer(k, lam, 1.0));
        worst = std::max(worst, std::abs(d - r) / scale);
      }
  for (int n = 0; n <= 14; ++n)
    for (int m = 0; m <= n; ++m)
      for (double t : {-0.99, -0.2, 0.6, 0.97}) {
        const double d = assoc_legendre(n, m, t);
        const double r = static_cast<double>(assoc_legendre(n, m, quad_real(t)));
        const double scale = std::sqrt(factorial(n + m) / factorial(n - m));
        worst = std::max(worst, std::abs(d - r) / scale);
      }
  EXPECT_LE(worst, 1e-14);
}

TEST(Determinism, BitIdentical) {
  EXPECT_EQ(gegenbauer(17, 3.5, 0.123), gegenbauer(17, 3.5, 0.123));
  EXPECT_EQ(laguerre(9, 4.0, 3.3), laguerre(9, 4.0, 3.3));
  EXPECT_EQ(bessel_j(7, 31.4), bessel_j(7, 31.4));
}

TEST(PolysSuite, AllChecksPass) {
  for (const auto& r : h2d::verify::polys_suite()) {
    EXPECT_TRUE(r.pass) << r.check_name << " err=" << r.applicable_error() << " tol=" << r.tolerance;
    EXPECT_GT(r.comparisons, 0u) << r.check_name;
  }
}
