#include "robustwald/wald.hpp"

#include <cmath>

#include "robustwald/robustness.hpp"

namespace rw {
namespace {

WaldResult make_result(double stat, int df, double alpha) {
  WaldResult r;
  r.statistic = stat;
  r.df = df;
  r.alpha = alpha;
  r.p_value = chisq_sf(stat, df);
  r.critical_value = chisq_quantile(alpha, df);
  r.reject = stat > r.critical_value;
  return r;
}

Matrix sigma_at(const ParametricModel& model, const Vector& theta, double beta,
                bool use_closed_forms) {
  return sandwich(matrices_at_model(model, theta, beta, use_closed_forms));
}

// d~ = d + eps IF(x): the effective direction under contiguous contamination.
Vector effective_direction(const ParametricModel& model, const Vector& theta0,
                           double beta, const ContiguousSpec& spec,
                           bool use_closed_forms) {
  if (!spec.d) throw UsageError("contiguous power: direction d required");
  Vector d = *spec.d;
  if (spec.epsilon != 0.0) {
    if (!spec.x) {
      throw UsageError("contiguous power: contamination point x required");
    }
    const Vector inf =
        if_estimator(model, theta0, beta, *spec.x, use_closed_forms);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] += spec.epsilon * inf[i];
  }
  return d;
}

struct Noncentral {
  double delta;
  int df;
};

Noncentral contiguous_noncentrality(const ParametricModel& model,
                                    const Vector& theta0,
                                    const Restriction* restriction, double beta,
                                    const ContiguousSpec& spec,
                                    bool use_closed_forms) {
  const Matrix sigma = sigma_at(model, theta0, beta, use_closed_forms);
  if (restriction == nullptr) {
    const Vector d = effective_direction(model, theta0, beta, spec,
                                         use_closed_forms);
    const Matrix sigma_inv = invert_spd(sigma, "Sigma_beta(theta0)");
    return {quad_form(sigma_inv, d), model.param_dim()};
  }
  const Matrix m_jac = restriction->jacobian(theta0);
  const Matrix sigma_star = m_jac.transpose() * sigma * m_jac;
  const Matrix star_inv = invert_spd(sigma_star, "M^T Sigma M");
  Vector shift;  // in constraint space
  if (spec.delta) {
    if (spec.d) {
      throw UsageError("contiguous power: give either d or delta, not both");
    }
    if (spec.epsilon != 0.0) {
      throw UsageError(
          "contiguous power: contamination requires the d form, not delta");
    }
    shift = *spec.delta;
  } else {
    shift = m_jac.transpose() *
            effective_direction(model, theta0, beta, spec, use_closed_forms);
  }
  return {quad_form(star_inv, shift), restriction->r};
}

}  // namespace

Restriction linear_restriction(const Matrix& l, const Vector& l0) {
  Restriction res;
  res.r = static_cast<int>(l.cols());
  res.affine = true;
  res.m = [l, l0](const Vector& theta) {
    Vector v = l.transpose() * theta;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= l0[i];
    return v;
  };
  res.jacobian = [l](const Vector&) { return l; };
  return res;
}

Restriction coordinate_restriction(int index, double value, int p) {
  Matrix l(p, 1);
  l(index, 0) = 1.0;
  return linear_restriction(l, {value});
}

WaldResult simple_wald(const MdpdeFit& fit, const Vector& theta0, double alpha,
                       bool use_closed_forms) {
  const Matrix sigma0 =
      sigma_at(*fit.model, theta0, fit.beta, use_closed_forms);
  const Matrix sigma0_inv = invert_spd(sigma0, "Sigma_beta(theta0)");
  Vector diff(fit.theta_hat.size());
  for (std::size_t i = 0; i < diff.size(); ++i) {
    diff[i] = fit.theta_hat[i] - theta0[i];
  }
  const double stat = fit.n * quad_form(sigma0_inv, diff);
  return make_result(stat, fit.model->param_dim(), alpha);
}

WaldResult composite_wald(const MdpdeFit& fit, const Restriction& restriction,
                          double alpha) {
  const Vector m = restriction.m(fit.theta_hat);
  const Matrix m_jac = restriction.jacobian(fit.theta_hat);
  if (static_cast<int>(m_jac.cols()) != restriction.r) {
    throw UsageError("composite_wald: Jacobian has wrong number of columns");
  }
  const Matrix inner = m_jac.transpose() * fit.sigma * m_jac;
  const Matrix inner_inv = invert_spd(inner, "M^T Sigma M");
  const double stat = fit.n * quad_form(inner_inv, m);
  return make_result(stat, restriction.r, alpha);
}

double power_fixed_alternative(const ParametricModel& model,
                               const Vector& theta_star, const Vector& theta0,
                               double beta, int n, double alpha,
                               bool use_closed_forms) {
  const std::size_t p = theta_star.size();
  Vector diff(p);
  for (std::size_t i = 0; i < p; ++i) diff[i] = theta_star[i] - theta0[i];
  const Matrix sigma0_inv = invert_spd(
      sigma_at(model, theta0, beta, use_closed_forms), "Sigma_beta(theta0)");
  const double ell = quad_form(sigma0_inv, diff);
  const Matrix sigma_star_inv = invert_spd(
      sigma_at(model, theta_star, beta, use_closed_forms),
      "Sigma_beta(theta*)");
  const double var = 4.0 * quad_form(sigma_star_inv, diff);
  if (var <= 0.0) {
    throw NumericalError("power_fixed_alternative: degenerate direction");
  }
  const double crit = chisq_quantile(alpha, static_cast<int>(p));
  return 1.0 - normal_cdf(std::sqrt(double(n)) / std::sqrt(var) *
                          (crit / n - ell));
}

double power_fixed_alternative(const ParametricModel& model,
                               const Vector& theta_star,
                               const Restriction& restriction, double beta,
                               int n, double alpha, bool use_closed_forms) {
  const Matrix sigma = sigma_at(model, theta_star, beta, use_closed_forms);
  const Matrix m_jac = restriction.jacobian(theta_star);
  const Matrix inner_inv =
      invert_spd(m_jac.transpose() * sigma * m_jac, "M^T Sigma M");
  auto ell_star = [&](const Vector& theta) {
    return quad_form(inner_inv, restriction.m(theta));
  };
  const double ell = ell_star(theta_star);

  Vector grad(theta_star.size());
  if (restriction.affine) {
    const Vector inner_m = inner_inv * restriction.m(theta_star);
    grad = m_jac * inner_m;
    for (double& g : grad) g *= 2.0;
  } else {
    for (std::size_t i = 0; i < grad.size(); ++i) {
      const double h = 1e-5 * std::max(1.0, std::abs(theta_star[i]));
      auto at = [&](double step) {
        Vector t = theta_star;
        t[i] += step;
        return ell_star(t);
      };
      grad[i] = (-at(2 * h) + 8.0 * at(h) - 8.0 * at(-h) + at(-2 * h)) /
                (12.0 * h);
    }
  }
  const double var = quad_form(sigma, grad);
  if (var <= 0.0) {
    throw NumericalError("power_fixed_alternative: degenerate direction");
  }
  const double crit = chisq_quantile(alpha, restriction.r);
  return 1.0 - normal_cdf(std::sqrt(double(n)) / std::sqrt(var) *
                          (crit / n - ell));
}

double contiguous_power(const ParametricModel& model, const Vector& theta0,
                        const Restriction* restriction, double beta,
                        const ContiguousSpec& spec, double alpha,
                        bool use_closed_forms) {
  const Noncentral nc = contiguous_noncentrality(model, theta0, restriction,
                                                 beta, spec, use_closed_forms);
  const double crit = chisq_quantile(alpha, nc.df);
  return noncentral_chisq_sf(crit, {nc.df, nc.delta});
}

double contiguous_power_series(const ParametricModel& model,
                               const Vector& theta0,
                               const Restriction* restriction, double beta,
                               const ContiguousSpec& spec, double alpha,
                               bool use_closed_forms) {
  const Noncentral nc = contiguous_noncentrality(model, theta0, restriction,
                                                 beta, spec, use_closed_forms);
  const double crit = chisq_quantile(alpha, nc.df);
  const double s = nc.delta;
  // sum_v C_v P(chi2_{df+2v} > crit), C_v = (s/2)^v e^{-s/2} / v! —
  // the Poisson mixture written out term by term.
  const double expf = std::exp(-0.5 * s);
  double term = expf;
  double mass = 0.0;
  double sum = 0.0;
  for (int v = 0; v < 10000; ++v) {
    sum += term * chisq_sf(crit, nc.df + 2 * v);
    mass += term;
    if (term < 1e-12 && mass > 1.0 - 1e-12) return sum;
    term *= 0.5 * s / (v + 1);
  }
  throw NumericalError("contiguous_power_series: series failed to converge");
}

}  // namespace rw
