#ifndef ROBUSTWALD_MDPDE_HPP
#define ROBUSTWALD_MDPDE_HPP

#include <memory>

#include "robustwald/dpd.hpp"

namespace rw {

struct MdpdeFit {
  std::shared_ptr<const ParametricModel> model;
  Vector theta_hat;
  double beta = 0.0;
  Matrix sigma;     // J^{-1} K J^{-1} at theta_hat
  Matrix j_matrix;  // J_beta(theta_hat)
  Matrix k_matrix;  // K_beta(theta_hat)
  Vector xi;        // xi_beta(theta_hat)
  int n = 0;
  double objective_value = 0.0;
};

// Point-mass contamination of the model: g = (1-eps) f_{theta0} + eps Delta_y.
struct ContaminatedTruth {
  Vector base_theta;
  double epsilon = 0.0;
  Vector point;
};

struct FitOptions {
  // Prefer model-supplied closed forms for the integral term, the beta = 0
  // estimate, and the J/K/xi matrices.
  bool use_closed_forms = true;
  // Skip the matrix stage entirely (Monte-Carlo loops that only need theta_hat).
  bool compute_matrices = true;
  MinimizeOptions minimize;
};

MdpdeFit fit(std::shared_ptr<const ParametricModel> model,
             const std::vector<Vector>& data, double beta,
             const std::optional<Vector>& init = std::nullopt,
             const FitOptions& opts = {});

// (J_beta, K_beta, xi_beta) at `theta`. With use_closed_forms the model's
// published matrices are used when available; otherwise each entry is the
// component-averaged quadrature of the defining integrals.
JKXi matrices_at_model(const ParametricModel& model, const Vector& theta,
                       double beta, bool use_closed_forms = true);

// Sandwich covariance J^{-1} K J^{-1}.
Matrix sandwich(const JKXi& m);

struct GMatrices {
  Matrix j;
  Matrix k;
  Vector xi;
  Matrix sigma;  // J_g^{-1} K_g J_g^{-1}
};

// The asymptotic matrices when the truth is the contaminated mixture. The
// point mass contributes analytically; only f_{theta0} parts are integrated.
// Homogeneous (single-component) models only.
GMatrices matrices_under_g(const ParametricModel& model,
                           const ContaminatedTruth& truth, double beta);

// Exact eps-derivatives at eps = 0 of the contaminated J_g and K_g for
// point contamination at y (J_g is linear in eps; K_g picks up the xi cross
// terms). Used by the chi-square inflation slope.
struct GDerivatives {
  Matrix j1;
  Matrix k1;
};
GDerivatives matrices_under_g_slope(const ParametricModel& model,
                                    const Vector& theta0, const Vector& y,
                                    double beta);

// The population minimizer T_beta at the contaminated mixture.
Vector population_functional(const ParametricModel& model,
                             const ContaminatedTruth& truth, double beta);

}  // namespace rw

#endif
