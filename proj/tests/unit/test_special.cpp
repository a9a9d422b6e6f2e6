#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <gtest/gtest.h>

#include "hexmetric/errors.hpp"
#include "hexmetric/special.hpp"

using namespace hexmetric;
constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

// Reference values from mpmath at 30 digits.
TEST(Dilog, FrozenValues) {
  EXPECT_NEAR(dilog(0.3), 0.32612951007547606953, 1e-15);
  EXPECT_NEAR(dilog(-0.7), -0.60515840233770528397, 1e-15);
  EXPECT_NEAR(dilog(-3.0), -1.9393754207667089531, 1e-14);
  EXPECT_NEAR(dilog(0.9), 1.2997147230049587252, 1e-14);
  EXPECT_NEAR(dilog(0.5), 0.5822405264650125059, 1e-15);
  EXPECT_NEAR(dilog(-0.5), -0.44841420692364620244, 1e-15);
}

TEST(Dilog, SpecialPoints) {
  EXPECT_EQ(dilog(0.0), 0.0);
  EXPECT_NEAR(dilog(1.0), kPi2 / 6.0, 1e-15);
  EXPECT_NEAR(dilog(-1.0), -kPi2 / 12.0, 1e-15);
  const double ln2 = std::numbers::ln2;
  EXPECT_NEAR(dilog(0.5), kPi2 / 12.0 - 0.5 * ln2 * ln2, 1e-15);
}

TEST(Dilog, RejectsAboveOne) { EXPECT_THROW(dilog(1.5), DomainError); }

TEST(Dilog, MatchesQuadrature) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-20.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng);
    // Li2(x) = -int_0^1 ln(1 - x s) / s ds.
    const double ref = -integrator.integrate(
        [x](double s) { return s == 0.0 ? -x : std::log1p(-x * s) / s; }, 0.0, 1.0);
    EXPECT_NEAR(dilog(x), ref, 1e-13 * (1.0 + std::abs(ref))) << "x = " << x;
  }
}

TEST(Dilog, Reflection) {
  // Li2(x) + Li2(1 - x) = pi^2/6 - ln x ln(1 - x).
  for (double x = 0.05; x < 1.0; x += 0.05) {
    EXPECT_NEAR(dilog(x) + dilog(1.0 - x), kPi2 / 6.0 - std::log(x) * std::log1p(-x), 1e-14);
  }
}

TEST(LogHyperbolic, AgreesWithNaiveFormsInSafeRange) {
  for (double u = 0.05; u < 20.0; u *= 1.3) {
    EXPECT_NEAR(log_cosh(u), std::log(std::cosh(u)), 1e-13 * (1.0 + u));
    EXPECT_NEAR(log_sinh(u), std::log(std::sinh(u)), 1e-13 * (1.0 + u));
  }
  EXPECT_NEAR(log_cosh(800.0), 800.0 - std::numbers::ln2, 1e-12);
  EXPECT_NEAR(log_sinh(800.0), 800.0 - std::numbers::ln2, 1e-12);
  EXPECT_NEAR(log_sinh(1e-200), std::log(1e-200), 1e-12);
  EXPECT_EQ(log_cosh(-2.0), log_cosh(2.0));
  EXPECT_THROW(log_sinh(0.0), DomainError);
  EXPECT_THROW(log_sinh(-1.0), DomainError);
}

TEST(LogHyperbolic, Arccosh) {
  EXPECT_EQ(arccosh(1.0), 0.0);
  EXPECT_NEAR(arccosh(2.0), 1.31695789692481671, 1e-15);
  // w - 1 is exact here; arccosh(1 + d) = sqrt(2d) (1 - d / 12 + ...).
  const double w = 1.0 + 1e-12;
  const double d = w - 1.0;
  EXPECT_NEAR(arccosh(w), std::sqrt(2.0 * d) * (1.0 - d / 12.0), 1e-20);
}

TEST(Lambda, FrozenValues) {
  EXPECT_NEAR(lambda1(0.01), 1.6666500003174528221e-7, 1e-19);
  EXPECT_NEAR(lambda1(0.1), 1.665003167127408759467e-4, 1e-19);
  EXPECT_NEAR(lambda1(0.2), 0.0013280402551720958511, 1e-16);
  EXPECT_NEAR(lambda1(0.2499), 0.002584989818704281342456, 1e-17);
  EXPECT_NEAR(lambda1(0.25), 0.002588081574629656180582, 1e-17);
  EXPECT_NEAR(lambda1(0.4999), 0.02032391909011674539566, 1e-17);
  EXPECT_NEAR(lambda1(0.5), 0.02033592823035786449878, 1e-16);
  EXPECT_NEAR(lambda1(1.0), 0.15258009379489941407, 1e-15);
  EXPECT_NEAR(lambda1(3.0), 2.8305533661254995431, 1e-14);
  EXPECT_NEAR(lambda1(-1.0), -0.15258009379489941407, 1e-15);
  EXPECT_NEAR(lambda2(0.01), -0.056051646304436468732, 1e-15);
  EXPECT_NEAR(lambda2(0.2), -0.52144349295443347403, 1e-15);
  EXPECT_NEAR(lambda2(1.0), -0.94550792303861443844, 1e-15);
  EXPECT_NEAR(lambda2(2.0), -0.199561297367539430, 1e-15);
  EXPECT_NEAR(lambda2(3.0), 1.5993315698582197889, 1e-14);
}

TEST(Lambda, MatchesQuadratureOfLogs) {
  boost::math::quadrature::tanh_sinh<double> ts;
  for (double u : {0.001, 0.05, 0.3, 0.7, 1.0, 2.5, 6.0, 12.0}) {
    const double l1 = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [](double s) { return std::log(std::cosh(s)); }, 0.0, u, 10, 1e-15);
    const double l2 = ts.integrate([](double s) { return std::log(std::sinh(s)); }, 0.0, u);
    EXPECT_NEAR(lambda1(u), l1, 1e-13 * (1.0 + std::abs(l1))) << u;
    EXPECT_NEAR(lambda2(u), l2, 1e-12 * (1.0 + std::abs(l2))) << u;
  }
}

TEST(Lambda, DerivativesAreLogs) {
  for (double u : {0.02, 0.3, 0.35, 0.4, 1.0, 4.0}) {
    const double h = std::min(1e-5, 1e-4 * u);
    EXPECT_NEAR((lambda1(u + h) - lambda1(u - h)) / (2 * h), log_cosh(u), 1e-9);
    EXPECT_NEAR((lambda2(u + h) - lambda2(u - h)) / (2 * h), log_sinh(u), 1e-8);
  }
}

TEST(Lambda, ContinuousAcrossBranchSwitch) {
  // lambda2 switches formulas at ln 2 / 2.
  const double b = 0.5 * std::numbers::ln2;
  EXPECT_NEAR(lambda2(std::nextafter(b, 0.0)), lambda2(std::nextafter(b, 1.0)), 1e-15);
  EXPECT_EQ(lambda1(0.0), 0.0);
  EXPECT_EQ(lambda2(0.0), 0.0);
  EXPECT_THROW(lambda2(-0.1), DomainError);
}
