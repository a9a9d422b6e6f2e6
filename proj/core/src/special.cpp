#include "hexmetric/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hexmetric/errors.hpp"

namespace hexmetric {

namespace {

constexpr double kPi2Over6 = std::numbers::pi * std::numbers::pi / 6.0;

// Maclaurin series; only called with |x| <= 1/2, where 50 terms reach 1e-18.
double dilog_series(double x) {
  double sum = 0.0;
  double power = x;
  for (int k = 1; k <= 60; ++k) {
    const double term = power / (static_cast<double>(k) * k);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    power *= x;
  }
  return sum;
}

}  // namespace

double dilog(double x) {
  if (std::isnan(x) || x > 1.0) {
    throw DomainError("dilog: argument " + std::to_string(x) + " > 1 has complex value");
  }
  if (x == 1.0) return kPi2Over6;
  if (x == 0.0) return 0.0;
  if (x < -1.0) {
    // Inversion.
    const double l = std::log(-x);
    return -kPi2Over6 - 0.5 * l * l - dilog(1.0 / x);
  }
  if (x < -0.5) {
    // Landen: x/(x-1) lands in (1/3, 1/2].
    const double l = std::log1p(-x);
    return -dilog_series(x / (x - 1.0)) - 0.5 * l * l;
  }
  if (x <= 0.5) return dilog_series(x);
  // Reflection about 1/2.
  return kPi2Over6 - std::log(x) * std::log1p(-x) - dilog_series(1.0 - x);
}

double log_cosh(double u) {
  const double a = std::abs(u);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

double log_sinh(double u) {
  if (!(u > 0.0)) {
    throw DomainError("log_sinh: argument must be positive, got " + std::to_string(u));
  }
  return u + std::log(-std::expm1(-2.0 * u)) - std::numbers::ln2;
}

double arccosh(double w) {
  if (!(w >= 1.0)) {
    throw DomainError("arccosh: argument must be >= 1, got " + std::to_string(w));
  }
  const double d = w - 1.0;
  return std::log1p(d + std::sqrt(d * (w + 1.0)));
}

double lambda1(double u) {
  if (u < 0.0) return -lambda1(-u);
  if (u == 0.0) return 0.0;
  if (u < 0.5) {
    // Integrated Taylor series of log cosh; the closed form cancels here.
    static constexpr std::array<double, 25> c{
        1.0 / 6.0, -1.0 / 60.0, 1.0 / 315.0, -7.495590828924162257e-4,
        1.988135321468654802e-4, -5.681561237116792672e-5, 1.710537160272610008e-5, -5.352332305335728927e-6,
        1.725226435513409302e-6, -5.69355033913220194e-7, 1.915323706903053424e-7, -6.546387313886139009e-8,
        2.267650294776205804e-8, -7.945430068541170891e-9, 2.81158188310833823e-9, -1.00352919697960742e-9,
        3.609168973339332651e-10, -1.30680322549336695e-10, 4.760213863968264727e-11, -1.743376013600764578e-11,
        6.416192930674890476e-12, -2.371866362742879611e-12, 8.803593126416632384e-13, -3.279733688503002675e-13,
        1.226015508192975312e-13};
    const double u2 = u * u;
    double sum = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) sum = sum * u2 + *it;
    return sum * u2 * u;
  }
  const double q = std::exp(-2.0 * u);
  return 0.5 * u * u - u * std::numbers::ln2 + 0.5 * dilog(-q) + kPi2Over6 / 4.0;
}

double lambda2(double u) {
  if (u < 0.0 || std::isnan(u)) {
    throw DomainError("lambda2: argument must be >= 0, got " + std::to_string(u));
  }
  if (u == 0.0) return 0.0;
  const double base = 0.5 * u * u - u * std::numbers::ln2;
  if (u > 0.5 * std::numbers::ln2) {
    return base + 0.5 * dilog(std::exp(-2.0 * u)) - kPi2Over6 / 2.0;
  }
  // Small u: reflected form avoids the pi^2 cancellation against Li2(~1).
  const double one_minus_q = -std::expm1(-2.0 * u);
  return base + u * std::log(one_minus_q) - 0.5 * dilog(one_minus_q);
}

}  // namespace hexmetric
