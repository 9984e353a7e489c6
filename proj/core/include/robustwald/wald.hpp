#ifndef ROBUSTWALD_WALD_HPP
#define ROBUSTWALD_WALD_HPP

#include "robustwald/chisq.hpp"
#include "robustwald/mdpde.hpp"

namespace rw {

// Composite null m(theta) = 0_r with Jacobian M(theta) = d m^T / d theta (p x r).
struct Restriction {
  int r = 0;
  std::function<Vector(const Vector&)> m;
  std::function<Matrix(const Vector&)> jacobian;
  bool affine = false;
};

// m(theta) = L^T theta - l0 for a p x r matrix L.
Restriction linear_restriction(const Matrix& l, const Vector& l0);
// Single-coordinate restriction theta[index] = value in a p-dimensional model.
Restriction coordinate_restriction(int index, double value, int p);

struct WaldResult {
  double statistic = 0.0;
  int df = 0;
  double p_value = 1.0;
  double critical_value = 0.0;
  double alpha = 0.05;
  bool reject = false;
};

// Contiguous alternative theta_n = theta0 + d / sqrt(n), optionally with
// contamination eps at x shrinking at the same rate. For composite nulls
// either the parameter-space direction d or the constraint-space shift
// delta = M^T d may be given.
struct ContiguousSpec {
  std::optional<Vector> d;
  std::optional<Vector> delta;
  double epsilon = 0.0;
  std::optional<Vector> x;
};

// Simple null H0: theta = theta0. Sigma_beta is evaluated at theta0 (not at
// theta_hat); the composite statistic below evaluates everything at theta_hat.
// The asymmetry follows the source formulas and is deliberate.
WaldResult simple_wald(const MdpdeFit& fit, const Vector& theta0,
                       double alpha = 0.05, bool use_closed_forms = true);

WaldResult composite_wald(const MdpdeFit& fit, const Restriction& restriction,
                          double alpha = 0.05);

// Normal approximation to the power at a fixed alternative theta_star.
double power_fixed_alternative(const ParametricModel& model,
                               const Vector& theta_star, const Vector& theta0,
                               double beta, int n, double alpha = 0.05,
                               bool use_closed_forms = true);
double power_fixed_alternative(const ParametricModel& model,
                               const Vector& theta_star,
                               const Restriction& restriction, double beta, int n,
                               double alpha = 0.05, bool use_closed_forms = true);

// Asymptotic power under the contiguous alternative: a noncentral chi-square
// tail with noncentrality d~^T Sigma^{-1} d~ (simple) or the M-projected form
// (composite), d~ = d + eps IF(x).
double contiguous_power(const ParametricModel& model, const Vector& theta0,
                        const Restriction* restriction, double beta,
                        const ContiguousSpec& spec, double alpha = 0.05,
                        bool use_closed_forms = true);

// Same quantity through the explicit Poisson-weighted series expansion.
double contiguous_power_series(const ParametricModel& model, const Vector& theta0,
                               const Restriction* restriction, double beta,
                               const ContiguousSpec& spec, double alpha = 0.05,
                               bool use_closed_forms = true);

}  // namespace rw

#endif
