#ifndef ROBUSTWALD_MODELS_HPP
#define ROBUSTWALD_MODELS_HPP

#include <memory>

#include "robustwald/model.hpp"

namespace rw {

// ---------------------------------------------------------------------------
// Univariate normal, location parameter only, scale known.
// theta = (mu)
class NormalLocationModel : public ParametricModel {
 public:
  explicit NormalLocationModel(double sigma = 1.0);

  std::string name() const override { return "normal-loc"; }
  int param_dim() const override { return 1; }
  int obs_dim() const override { return 1; }
  IntegrationDomain support(int) const override { return {-kInf, kInf}; }
  double density(const Vector& theta, const Vector& x, int comp = 0) const override;
  Vector score(const Vector& theta, const Vector& x, int comp = 0) const override;
  Matrix info(const Vector& theta, const Vector& x, int comp = 0) const override;
  BoxBounds param_bounds() const override;
  Vector initial_guess(const std::vector<Vector>& data) const override;
  std::optional<double> density_power_integral(const Vector& theta,
                                               double beta) const override;
  std::optional<Vector> closed_form_mle(const std::vector<Vector>& data) const override;
  std::optional<JKXi> closed_form_matrices(const Vector& theta,
                                           double beta) const override;

  double sigma() const { return sigma_; }

 private:
  double sigma_;
};

// Influence function of the location functional as displayed for this model:
// (x - mu) / (sigma^{beta+2} (2 pi)^{beta/2}) exp(-beta (x-mu)^2 / (2 sigma^2)).
// This published curve omits the J_beta^{-1} normalization of the general
// formula; the two differ by the positive constant J_beta.
double normal_location_if_display(double mu0, double sigma, double beta, double x);

// ---------------------------------------------------------------------------
// Univariate normal, theta = (mu, sigma).
class NormalModel : public ParametricModel {
 public:
  std::string name() const override { return "normal"; }
  int param_dim() const override { return 2; }
  int obs_dim() const override { return 1; }
  IntegrationDomain support(int) const override { return {-kInf, kInf}; }
  double density(const Vector& theta, const Vector& x, int comp = 0) const override;
  Vector score(const Vector& theta, const Vector& x, int comp = 0) const override;
  Matrix info(const Vector& theta, const Vector& x, int comp = 0) const override;
  BoxBounds param_bounds() const override;
  Vector initial_guess(const std::vector<Vector>& data) const override;
  std::optional<double> density_power_integral(const Vector& theta,
                                               double beta) const override;
  std::optional<Vector> closed_form_mle(const std::vector<Vector>& data) const override;
  std::optional<JKXi> closed_form_matrices(const Vector& theta,
                                           double beta) const override;
};

// ---------------------------------------------------------------------------
// Weibull with unit scale, theta = (shape).
class WeibullShapeModel : public ParametricModel {
 public:
  std::string name() const override { return "weibull-shape"; }
  int param_dim() const override { return 1; }
  int obs_dim() const override { return 1; }
  IntegrationDomain support(int) const override { return {0.0, kInf}; }
  double density(const Vector& theta, const Vector& x, int comp = 0) const override;
  Vector score(const Vector& theta, const Vector& x, int comp = 0) const override;
  Matrix info(const Vector& theta, const Vector& x, int comp = 0) const override;
  BoxBounds param_bounds() const override;
  Vector initial_guess(const std::vector<Vector>& data) const override;
  std::optional<double> density_power_integral(const Vector& theta,
                                               double beta) const override;
  // Published J = eta_beta, K = eta_{2 beta}, xi = 0; valid at shape = 1 only.
  std::optional<JKXi> closed_form_matrices(const Vector& theta,
                                           double beta) const override;
};

// C_{alpha,beta} = int_0^inf ((1-y) log y)^alpha e^{-(1+beta) y} dy.
double c_alpha_beta(int alpha, double beta);
// eta_beta = 1/(1+beta) + C_{2,beta} + 2 C_{1,beta}, via quadrature.
double eta_beta(double beta);

// Published influence curves for the exponentiality test at shape = 1.
double weibull_if_display(double beta, double x);
double weibull_if2_display(double beta, double x);
double weibull_pif_display(double beta, double d, double alpha, double x);

// ---------------------------------------------------------------------------
// Bivariate normal, theta = (mu1, mu2, sigma1, sigma2, rho).
class BivariateNormalModel : public ParametricModel {
 public:
  std::string name() const override { return "bivariate-normal"; }
  int param_dim() const override { return 5; }
  int obs_dim() const override { return 2; }
  IntegrationDomain support(int) const override { return {-kInf, kInf}; }
  double density(const Vector& theta, const Vector& x, int comp = 0) const override;
  Vector score(const Vector& theta, const Vector& x, int comp = 0) const override;
  Matrix info(const Vector& theta, const Vector& x, int comp = 0) const override;
  BoxBounds param_bounds() const override;
  Vector initial_guess(const std::vector<Vector>& data) const override;
  std::optional<double> density_power_integral(const Vector& theta,
                                               double beta) const override;
  std::optional<Vector> closed_form_mle(const std::vector<Vector>& data) const override;
  // Published block-diagonal J/K at rho = 0 (xi taken as 0 there).
  std::optional<JKXi> closed_form_matrices(const Vector& theta,
                                           double beta) const override;
};

struct ZetaKappa {
  double zeta;
  double kappa1;
  double kappa2;
};
ZetaKappa zeta_kappa(double beta);

// The published 5x5 closed-form Sigma_beta(theta0); requires rho = 0.
Matrix bivnormal_sigma_beta(const Vector& theta0, double beta);

// Published influence curves for the correlation test at rho = 0.
Vector bivnormal_if_display(const Vector& theta0, double beta, const Vector& x);
double bivnormal_if2_display(const Vector& theta0, double beta, const Vector& x);
double bivnormal_pif_display(const Vector& theta0, double beta, double d,
                             double alpha, const Vector& x);
// Gross-error sensitivity of the correlation test; infinite at beta = 0.
double bivnormal_gamma_star(double beta, int n);

// ---------------------------------------------------------------------------
// Fixed-design linear regression, theta = (coef_1..coef_p, sigma).
// Observations are the scalar responses y_i; design row i is component i.
class LinearRegressionModel : public ParametricModel {
 public:
  explicit LinearRegressionModel(Matrix design);

  std::string name() const override { return "linreg"; }
  int param_dim() const override { return static_cast<int>(design_.cols()) + 1; }
  int obs_dim() const override { return 1; }
  int component_count() const override { return static_cast<int>(design_.rows()); }
  IntegrationDomain support(int) const override { return {-kInf, kInf}; }
  double density(const Vector& theta, const Vector& x, int comp = 0) const override;
  Vector score(const Vector& theta, const Vector& x, int comp = 0) const override;
  Matrix info(const Vector& theta, const Vector& x, int comp = 0) const override;
  BoxBounds param_bounds() const override;
  Vector initial_guess(const std::vector<Vector>& data) const override;
  std::optional<double> density_power_integral(const Vector& theta,
                                               double beta) const override;
  std::optional<Vector> closed_form_mle(const std::vector<Vector>& data) const override;
  std::optional<JKXi> closed_form_matrices(const Vector& theta,
                                           double beta) const override;

  const Matrix& design() const { return design_; }
  // X^T X / n: the per-observation design moment all asymptotic formulas use.
  Matrix design_moment() const;
  Vector design_row(int i) const;

 private:
  Matrix design_;
};

struct RegressionMatrices {
  Matrix d;    // D  = A^{-1} L (L^T A^{-1} L)^{-1} L^T A^{-1},  A = X^T X / n
  Matrix d_p;  // D_P = (L^T A^{-1} L)^{-1} L^T A^{-1}
};
RegressionMatrices regression_matrices(const LinearRegressionModel& model,
                                       const Matrix& l);

// Published general-linear-hypothesis pieces (all with A = X^T X / n).
double linreg_wald_display(const LinearRegressionModel& model, const Vector& theta_hat,
                           double beta, const Matrix& l, const Vector& l0, int n);
double linreg_omega_beta(const LinearRegressionModel& model, double beta,
                         const Matrix& l, const Vector& delta, double sigma0);
double linreg_if2_direction(const LinearRegressionModel& model, const Vector& theta0,
                            double beta, const Matrix& l, int i, double t);
double linreg_if2_all(const LinearRegressionModel& model, const Vector& theta0,
                      double beta, const Matrix& l, const Vector& t);
double linreg_pif_direction(const LinearRegressionModel& model, const Vector& theta0,
                            double beta, const Matrix& l, const Vector& delta,
                            double alpha, int i, double t);
double linreg_pif_all(const LinearRegressionModel& model, const Vector& theta0,
                      double beta, const Matrix& l, const Vector& delta,
                      double alpha, const Vector& t);

// ---------------------------------------------------------------------------
std::shared_ptr<ParametricModel> make_model(const std::string& name,
                                            double sigma_known = 1.0,
                                            const Matrix* design = nullptr);

}  // namespace rw

#endif
