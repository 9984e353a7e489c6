#ifndef ROBUSTWALD_CHISQ_HPP
#define ROBUSTWALD_CHISQ_HPP

#include "robustwald/errors.hpp"

namespace rw {

struct NoncentralChisq {
  int df;                // p or r
  double noncentrality;  // delta >= 0
};

// Standard normal CDF.
double normal_cdf(double x);

// Regularized incomplete gamma functions P(a, x) and Q(a, x) = 1 - P(a, x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

double chisq_cdf(double x, int df);
double chisq_sf(double x, int df);

// Upper quantile: returns q with P(chi2_df > q) = alpha, to 1e-10.
double chisq_quantile(double alpha, int df);

// Survival function of the noncentral chi-square via the Poisson-weighted
// central series. Truncates only once the current term drops below 1e-12 and
// the accumulated Poisson mass exceeds 1 - 1e-12; errors out past 10000 terms.
double noncentral_chisq_sf(double x, NoncentralChisq dist);

// K_p^*(s) power-influence kernel: twice the derivative of the noncentral
// tail in the noncentrality at s, with critical value chi2_{p,alpha}. The
// factor two absorbs the chain rule of the quadratic noncentrality, so the
// power influence is k_star times a plain inner product.
double k_star(double s, int p, double alpha);

}  // namespace rw

#endif
