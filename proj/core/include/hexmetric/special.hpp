#pragma once

// Special functions used by the hexagon energy: the dilogarithm and the two
// antiderivatives Lambda1(u) = int_0^u ln cosh(s) ds and
// Lambda2(u) = int_0^u ln sinh(s) ds, plus overflow-safe log-cosh/log-sinh.

namespace hexmetric {

/// Real dilogarithm Li2(x) = -int_0^x ln(1 - s)/s ds for x <= 1.
double dilog(double x);

/// ln cosh(u), accurate for all finite u.
double log_cosh(double u);

/// ln sinh(u) for u > 0.
double log_sinh(double u);

/// arccosh(w) for w >= 1, evaluated as ln(w + sqrt((w - 1)(w + 1))).
double arccosh(double w);

/// int_0^u ln cosh(s) ds. Odd in u.
double lambda1(double u);

/// int_0^u ln sinh(s) ds for u >= 0; lambda2(0) == 0. Throws DomainError for u < 0.
double lambda2(double u);

}  // namespace hexmetric
