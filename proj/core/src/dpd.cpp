#include "robustwald/dpd.hpp"

#include <cmath>
#include <string>

namespace rw {
namespace {

bool inside_support(const ParametricModel& model, const Vector& x) {
  for (int c = 0; c < model.obs_dim(); ++c) {
    const IntegrationDomain dom = model.support(c);
    // Finite endpoints are open: densities here vanish or blow up there.
    if (std::isfinite(dom.lower) && !(x[c] > dom.lower)) return false;
    if (std::isfinite(dom.upper) && !(x[c] < dom.upper)) return false;
    if (!std::isfinite(x[c])) return false;
  }
  return true;
}

// Average of int f_theta^{1+beta} over components, closed form preferred.
double density_power_term(const ParametricModel& model, const Vector& theta,
                          double beta) {
  if (auto cf = model.density_power_integral(theta, beta)) return *cf;
  const int comps = model.component_count();
  double sum = 0.0;
  for (int comp = 0; comp < comps; ++comp) {
    if (model.obs_dim() == 1) {
      sum += integrate(
          [&](double x) {
            return std::pow(model.density(theta, {x}, comp), 1.0 + beta);
          },
          model.support(0), 1e-10);
    } else {
      sum += integrate2d(
          [&](double x, double y) {
            return std::pow(model.density(theta, {x, y}, comp), 1.0 + beta);
          },
          model.support(0), model.support(1), 1e-9);
    }
  }
  return sum / comps;
}

}  // namespace

DpdObjectiveSpec::DpdObjectiveSpec(std::shared_ptr<const ParametricModel> model_in,
                                   double beta_in, std::vector<Vector> data_in)
    : model(std::move(model_in)), beta(beta_in), data(std::move(data_in)) {
  if (beta < 0.0) throw UsageError("dpd: beta must be nonnegative");
  if (data.empty()) throw DataError("dpd: empty data");
  const std::size_t d = static_cast<std::size_t>(model->obs_dim());
  if (model->component_count() > 1 &&
      data.size() != static_cast<std::size_t>(model->component_count())) {
    throw DataError("dpd: observation count must match the model's components");
  }
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data[i].size() != d) {
      throw DataError("dpd: row " + std::to_string(i) + " has dimension " +
                      std::to_string(data[i].size()) + ", expected " +
                      std::to_string(d));
    }
    if (!inside_support(*model, data[i])) {
      throw DataError("dpd: row " + std::to_string(i) +
                      " lies outside the model support");
    }
  }
}

double dpd_divergence(const std::function<double(double)>& g,
                      const std::function<double(double)>& f, double beta,
                      IntegrationDomain domain) {
  double d;
  if (beta == 0.0) {
    d = integrate(
        [&](double x) {
          const double gv = g(x);
          if (gv <= 0.0) return 0.0;
          const double fv = f(x);
          if (fv <= 0.0) {
            // Far-tail underflow of f is harmless when g has already
            // underflowed to negligible mass; a real support mismatch is not.
            if (gv < 1e-280) return 0.0;
            throw NumericalError("dpd_divergence: log of zero density");
          }
          return gv * std::log(gv / fv);
        },
        domain, 1e-10);
  } else {
    d = integrate(
        [&](double x) {
          const double gv = g(x);
          const double fv = f(x);
          return std::pow(fv, 1.0 + beta) -
                 (1.0 + 1.0 / beta) * std::pow(fv, beta) * gv +
                 (1.0 / beta) * std::pow(gv, 1.0 + beta);
        },
        domain, 1e-10);
  }
  if (d < -1e-8) {
    throw NumericalError("dpd_divergence: negative divergence " + std::to_string(d));
  }
  return d;
}

double mdpde_objective(const DpdObjectiveSpec& spec, const Vector& theta) {
  const ParametricModel& model = *spec.model;
  const double beta = spec.beta;
  const int comps = model.component_count();
  const std::size_t n = spec.data.size();

  if (beta == 0.0) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double f = model.density(theta, spec.data[i], comps > 1 ? int(i) : 0);
      if (f <= 0.0) {
        throw NumericalError("mdpde_objective: zero density at data row " +
                             std::to_string(i) + " with beta = 0");
      }
      sum += std::log(f);
    }
    return -sum / n;
  }

  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += std::pow(model.density(theta, spec.data[i], comps > 1 ? int(i) : 0), beta);
  }
  return density_power_term(model, theta, beta) -
         (1.0 + 1.0 / beta) * sum / n;
}

}  // namespace rw
