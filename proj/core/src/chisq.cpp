#include "robustwald/chisq.hpp"

#include <cmath>

namespace rw {
namespace {

// Series expansion of P(a, x), good for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x), good for x >= a + 1.
double gamma_q_cf(double a, double x) {
  constexpr double kTiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double gamma_p(double a, double x) {
  if (x < 0.0 || a <= 0.0) {
    throw NumericalError("gamma_p: invalid arguments");
  }
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) {
    throw NumericalError("gamma_q: invalid arguments");
  }
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chisq_cdf(double x, int df) { return gamma_p(0.5 * df, 0.5 * x); }

double chisq_sf(double x, int df) { return gamma_q(0.5 * df, 0.5 * x); }

double chisq_quantile(double alpha, int df) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw NumericalError("chisq_quantile: alpha must lie in (0, 1)");
  }
  double lo = 0.0;
  double hi = 1.0;
  while (chisq_sf(hi, df) > alpha) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (chisq_sf(mid, df) > alpha) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-12 * (1.0 + hi)) break;
  }
  return 0.5 * (lo + hi);
}

double noncentral_chisq_sf(double x, NoncentralChisq dist) {
  if (x < 0.0) throw NumericalError("noncentral_chisq_sf: x must be >= 0");
  if (dist.df < 1 || dist.noncentrality < 0.0) {
    throw NumericalError("noncentral_chisq_sf: invalid distribution");
  }
  const double half = 0.5 * dist.noncentrality;
  double weight = std::exp(-half);  // Poisson(half) mass at v = 0
  double weight_sum = 0.0;
  double result = 0.0;
  for (int v = 0; v < 10000; ++v) {
    const double term = weight * chisq_sf(x, dist.df + 2 * v);
    result += term;
    weight_sum += weight;
    if (term < 1e-12 && weight_sum > 1.0 - 1e-12) return result;
    weight *= half / (v + 1);
  }
  throw NumericalError("noncentral_chisq_sf: series cap of 10000 terms hit");
}

double k_star(double s, int p, double alpha) {
  if (s < 0.0) throw NumericalError("k_star: s must be >= 0");
  const double crit = chisq_quantile(alpha, p);
  const double expf = std::exp(-0.5 * s);
  // v = 0 contribution: s^{-1} (0 - s) = -1 times the tail probability.
  double result = -expf * chisq_sf(crit, p);
  double pow_term = 1.0;  // s^{v-1} / (v! 2^v) at v = 1
  double weight_sum = expf;
  for (int v = 1; v < 10000; ++v) {
    pow_term /= 2.0 * v;  // now s^{v-1}/(v! 2^v)
    const double term = expf * pow_term * (2.0 * v - s) * chisq_sf(crit, p + 2 * v);
    result += term;
    const double poisson_mass = expf * pow_term * s;  // e^{-s/2}(s/2)^v/v!
    weight_sum += poisson_mass;
    if (std::abs(term) < 1e-12 && weight_sum > 1.0 - 1e-12) return result;
    pow_term *= s;
  }
  throw NumericalError("k_star: series cap of 10000 terms hit");
}

}  // namespace rw
