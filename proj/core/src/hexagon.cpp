#include "hexmetric/hexagon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "hexmetric/errors.hpp"
#include "hexmetric/special.hpp"

namespace hexmetric {

namespace {

std::string describe(const char* what, const std::array<double, 3>& v) {
  std::ostringstream os;
  os.precision(17);
  os << what << " (" << v[0] << ", " << v[1] << ", " << v[2] << ")";
  return os.str();
}

template <class T>
void require_positive(const T& triple, const char* fn) {
  for (double value : triple.v) {
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw DomainError(describe(fn, triple.v) + ": entries must be positive and finite");
    }
  }
}

void require_closed(const TTriple& t, const char* fn) {
  for (double value : t.v) {
    if (!std::isfinite(value)) throw DomainError(describe(fn, t.v) + ": non-finite entry");
  }
  if (pairwise_margin(t) < 0.0) {
    throw DomainError(describe(fn, t.v) + ": outside closed H3");
  }
}

void require_interior(const TTriple& t, const char* fn) {
  require_closed(t, fn);
  if (pairwise_margin(t) <= kInteriorMargin) {
    throw DomainError(describe(fn, t.v) + ": on the boundary of H3");
  }
}

// ln(e^a + e^b + e^c).
double log_sum_exp(double a, double b, double c) {
  const double m = std::max({a, b, c});
  return m + std::log(std::exp(a - m) + std::exp(b - m) + std::exp(c - m));
}

// (cosh a + cosh b cosh c) / (sinh b sinh c), shared by both directions.
double cosine_law_argument(double a, double b, double c) {
  return (std::cosh(a) + std::cosh(b) * std::cosh(c)) / (std::sinh(b) * std::sinh(c));
}

struct GaussRule {
  std::vector<double> nodes;    // on [0, 1]
  std::vector<double> weights;  // sum to 1
};

GaussRule make_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule& gauss16() {
  static const GaussRule rule = make_gauss_legendre(16);
  return rule;
}

// omega(p)[dir] = sum_i ln cosh(y_i(p)/2) dir_i, with ln cosh(y/2) taken as
// (1/2) ln((1 + cosh y)/2) straight from the cosine law.
double one_form(const TTriple& p, const TTriple& dir) {
  const XTriple x = t_to_x(p);
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    const double w = cosine_law_argument(x[i], x[j], x[k]);
    sum += 0.5 * std::log(0.5 * (1.0 + w)) * dir[i];
  }
  return sum;
}

TTriple lerp(const TTriple& a, const TTriple& b, double s) {
  return {a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1]), a[2] + s * (b[2] - a[2])};
}

// Integral over s in [lo, hi] of omega(a + s (b - a))[b - a].
double integrate_panel(const TTriple& a, const TTriple& b, double lo, double hi) {
  const GaussRule& rule = gauss16();
  const TTriple dir{b[0] - a[0], b[1] - a[1], b[2] - a[2]};
  double sum = 0.0;
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const double s = lo + (hi - lo) * rule.nodes[q];
    sum += rule.weights[q] * one_form(lerp(a, b, s), dir);
  }
  return (hi - lo) * sum;
}

// Panels [2^-(k+1), 2^-k] of the parameter accumulate toward the singular
// endpoint a.
double integrate_graded(const TTriple& a, const TTriple& b, int panels) {
  double sum = 0.0;
  double hi = 1.0;
  for (int k = 0; k < panels; ++k) {
    const double lo = 0.5 * hi;
    sum += integrate_panel(a, b, lo, hi);
    hi = lo;
  }
  return sum;
}

}  // namespace

double pairwise_margin(const TTriple& t) {
  return std::min({t[0] + t[1], t[1] + t[2], t[0] + t[2]});
}

YTriple cosine_law_y(const XTriple& x) {
  require_positive(x, "cosine_law_y");
  YTriple y;
  for (int i = 0; i < 3; ++i) {
    y[i] = arccosh(cosine_law_argument(x[i], x[(i + 1) % 3], x[(i + 2) % 3]));
  }
  return y;
}

XTriple cosine_law_x(const YTriple& y) {
  require_positive(y, "cosine_law_x");
  XTriple x;
  for (int i = 0; i < 3; ++i) {
    x[i] = arccosh(cosine_law_argument(y[i], y[(i + 1) % 3], y[(i + 2) % 3]));
  }
  return x;
}

double sine_ratio(const XTriple& x, int i) {
  const YTriple y = cosine_law_y(x);
  return std::sinh(x[i]) / std::sinh(y[i]);
}

double sine_ratio(const XTriple& x) { return sine_ratio(x, 0); }

TTriple x_to_t(const XTriple& x) {
  return {0.5 * (x[1] + x[2] - x[0]), 0.5 * (x[0] + x[2] - x[1]), 0.5 * (x[0] + x[1] - x[2])};
}

XTriple t_to_x(const TTriple& t) {
  require_closed(t, "t_to_x");
  return {t[1] + t[2], t[0] + t[2], t[0] + t[1]};
}

double theta(const TTriple& t) {
  require_closed(t, "theta");
  const double total = t[0] + t[1] + t[2];
  const double twice = lambda1(total) + lambda1(t[0]) + lambda1(t[1]) + lambda1(t[2]) -
                       lambda2(t[0] + t[1]) - lambda2(t[1] + t[2]) - lambda2(t[0] + t[2]);
  return 0.5 * twice;
}

TTriple theta_grad(const TTriple& t) {
  require_interior(t, "theta_grad");
  const double lc_total = log_cosh(t[0] + t[1] + t[2]);
  TTriple g;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    g[i] = 0.5 * (lc_total + log_cosh(t[i]) - log_sinh(t[i] + t[j]) - log_sinh(t[i] + t[k]));
  }
  return g;
}

namespace {

std::array<double, 3> log_half_y_sinh_squared(const TTriple& t) {
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    out[i] = log_cosh(t[j]) + log_cosh(t[k]) - log_sinh(t[i] + t[j]) - log_sinh(t[i] + t[k]);
  }
  return out;
}

}  // namespace

std::array<double, 3> half_y_sinh_squared(const TTriple& t) {
  require_interior(t, "half_y_sinh_squared");
  auto logs = log_half_y_sinh_squared(t);
  for (double& v : logs) v = std::exp(v);
  return logs;
}

YTriple y_from_t(const TTriple& t) {
  const auto s = half_y_sinh_squared(t);
  return {2.0 * std::asinh(std::sqrt(s[0])), 2.0 * std::asinh(std::sqrt(s[1])),
          2.0 * std::asinh(std::sqrt(s[2]))};
}

double derivative_constant(const XTriple& x) {
  const YTriple y = cosine_law_y(x);
  const double sy = std::sinh(y[0]);
  return std::sinh(x[0]) / (sy * sy * std::sinh(x[1]) * std::sinh(x[2]));
}

HexHessian theta_hessian(const TTriple& t) {
  require_interior(t, "theta_hessian");
  const XTriple x = t_to_x(t);
  // A = sinh x1 sinh x2 sinh x3 / (4 cosh(t1+t2+t3) cosh t1 cosh t2 cosh t3),
  // the sine-law constant rewritten symmetrically; kept in log form.
  const double log_a = log_sinh(x[0]) + log_sinh(x[1]) + log_sinh(x[2]) - std::log(4.0) -
                       log_cosh(t[0] + t[1] + t[2]) - log_cosh(t[0]) - log_cosh(t[1]) -
                       log_cosh(t[2]);
  const auto ls = log_half_y_sinh_squared(t);
  const double log_two_a = std::numbers::ln2 + log_a;

  HexHessian h;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    h(i, i) = -std::exp(log_two_a + ls[i] + log_sum_exp(ls[j], ls[k], 0.0));
    h(i, j) = -std::exp(log_two_a + ls[i] + ls[j]);
    h(i, k) = -std::exp(log_two_a + ls[i] + ls[k]);
  }
  return h;
}

double theta_by_path_integral(const TTriple& t, int segments) {
  if (segments <= 0) throw DomainError("theta_by_path_integral: segments must be positive");
  require_closed(t, "theta_by_path_integral");
  if (t[0] == 0.0 && t[1] == 0.0 && t[2] == 0.0) return 0.0;
  return integrate_graded(TTriple{0.0, 0.0, 0.0}, t, segments);
}

double path_integral_segment(const TTriple& a, const TTriple& b, int segments) {
  if (segments <= 0) throw DomainError("path_integral_segment: segments must be positive");
  require_closed(a, "path_integral_segment");
  require_closed(b, "path_integral_segment");
  if (pairwise_margin(a) <= kInteriorMargin) return integrate_graded(a, b, segments);
  if (pairwise_margin(b) <= kInteriorMargin) return -integrate_graded(b, a, segments);
  double sum = 0.0;
  for (int k = 0; k < segments; ++k) {
    sum += integrate_panel(a, b, static_cast<double>(k) / segments,
                           static_cast<double>(k + 1) / segments);
  }
  return sum;
}

}  // namespace hexmetric
