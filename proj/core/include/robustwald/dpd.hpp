#ifndef ROBUSTWALD_DPD_HPP
#define ROBUSTWALD_DPD_HPP

#include <memory>

#include "robustwald/model.hpp"

namespace rw {

// Empirical objective specification: model, tuning parameter, data. Validates
// beta and support membership up front; observations outside the support are
// an error (never silently dropped), reported with their row index.
struct DpdObjectiveSpec {
  DpdObjectiveSpec(std::shared_ptr<const ParametricModel> model, double beta,
                   std::vector<Vector> data);

  std::shared_ptr<const ParametricModel> model;
  double beta;
  std::vector<Vector> data;
};

// Density power divergence d_beta(g, f) between two densities on `domain`.
// beta = 0 is the Kullback-Leibler branch, computed directly (not as a limit).
double dpd_divergence(const std::function<double(double)>& g,
                      const std::function<double(double)>& f, double beta,
                      IntegrationDomain domain);

// The empirical objective: int f_theta^{1+beta} - (1+1/beta)(1/n) sum f^beta(X_i)
// for beta > 0, and the negative mean log-likelihood for beta = 0.
double mdpde_objective(const DpdObjectiveSpec& spec, const Vector& theta);

}  // namespace rw

#endif
