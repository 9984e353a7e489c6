#ifndef ROBUSTWALD_MODEL_HPP
#define ROBUSTWALD_MODEL_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "robustwald/linalg.hpp"
#include "robustwald/optimize.hpp"
#include "robustwald/quadrature.hpp"

namespace rw {

struct JKXi {
  Matrix j;
  Matrix k;
  Vector xi;
};

// One parametric family: density, score, information matrix, and metadata.
// Observations are vectors of length obs_dim(). Models with independent but
// non-identically distributed observations (fixed-design regression) report
// component_count() > 1 and receive the component index alongside each
// observation; everything downstream averages over components.
class ParametricModel {
 public:
  virtual ~ParametricModel() = default;

  virtual std::string name() const = 0;
  virtual int param_dim() const = 0;
  virtual int obs_dim() const = 0;
  virtual int component_count() const { return 1; }

  virtual IntegrationDomain support(int coord) const = 0;
  virtual double density(const Vector& theta, const Vector& x, int comp = 0) const = 0;
  virtual Vector score(const Vector& theta, const Vector& x, int comp = 0) const = 0;
  // I_theta(x) = -d u_theta^T(x) / d theta
  virtual Matrix info(const Vector& theta, const Vector& x, int comp = 0) const = 0;

  virtual BoxBounds param_bounds() const = 0;
  virtual Vector initial_guess(const std::vector<Vector>& data) const = 0;

  // Optional closed forms. density_power_integral is the per-component average
  // of int f^{1+beta}. closed_form_matrices returns the model's published
  // (J_beta, K_beta, xi_beta); where a published form deviates from the exact
  // quadrature value the deviation is pinned down in the tests.
  virtual std::optional<double> density_power_integral(const Vector& /*theta*/,
                                                       double /*beta*/) const {
    return std::nullopt;
  }
  virtual std::optional<Vector> closed_form_mle(const std::vector<Vector>& /*data*/) const {
    return std::nullopt;
  }
  virtual std::optional<JKXi> closed_form_matrices(const Vector& /*theta*/,
                                                   double /*beta*/) const {
    return std::nullopt;
  }
};

struct ValidationReport {
  double normalization_residual = 0.0;
  double score_residual = 0.0;
  double info_residual = 0.0;
  bool passed = false;
  std::string failure;  // names the offending component when !passed
};

// Checks density normalization and the finite-difference consistency of score
// and information matrix at `theta`.
ValidationReport validate_model(const ParametricModel& model, const Vector& theta,
                                double tol = 1e-6);

}  // namespace rw

#endif
