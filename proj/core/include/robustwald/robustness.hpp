#ifndef ROBUSTWALD_ROBUSTNESS_HPP
#define ROBUSTWALD_ROBUSTNESS_HPP

#include "robustwald/wald.hpp"

namespace rw {

// Null-point context: matrices needed by every influence quantity, computed
// once. `use_closed_forms = false` forces the quadrature path (needed when a
// result must be consistent with matrices_under_g, which always integrates).
struct NullContext {
  std::shared_ptr<const ParametricModel> model;
  Vector theta0;
  double beta = 0.0;
  JKXi jk;
  Matrix j_inv;
  Matrix sigma;
  Matrix sigma_inv;
};

NullContext make_null_context(std::shared_ptr<const ParametricModel> model,
                              Vector theta0, double beta,
                              bool use_closed_forms = true);

// IF(x) = J^{-1}(u f^beta - xi) of the estimator functional.
Vector if_estimator(const NullContext& ctx, const Vector& x, int comp = 0);
Vector if_estimator(const ParametricModel& model, const Vector& theta0,
                    double beta, const Vector& x, bool use_closed_forms = true);

// Second-order IF of the simple-null statistic:
// 2 (u f^beta - xi)^T J^{-1} Sigma^{-1} J^{-1} (u f^beta - xi).
double if2_simple(const NullContext& ctx, const Vector& x, int comp = 0);
// Equivalent shortcut 2 (u f^beta - xi)^T K^{-1} (u f^beta - xi); requires
// full-rank K and agrees with if2_simple wherever both are defined.
double if2_simple_shortcut(const NullContext& ctx, const Vector& x, int comp = 0);

// Composite analogue with the M-projected kernel.
double if2_composite(const NullContext& ctx, const Restriction& restriction,
                     const Vector& x, int comp = 0);

// Power influence function at direction d (parameter space) and level alpha.
// Pass restriction = nullptr for the simple null.
double pif(const NullContext& ctx, const Restriction* restriction,
           const Vector& d, double alpha, const Vector& x, int comp = 0);

// Level influence function: identically zero; kept so reports can show it and
// tests can assert pif(d = 0) == lif.
double lif(const NullContext& ctx, const Restriction* restriction,
           const Vector& x);

struct InfluenceReport {
  std::vector<Vector> grid;
  std::vector<bool> edge;  // true for points on the grid boundary
  std::vector<double> if_norm;
  std::vector<double> if2;
  std::vector<double> pif_values;
  double beta = 0.0;
  double sup_if = 0.0;
  double sup_if2 = 0.0;
  double sup_pif = 0.0;
  bool bounded = false;  // heuristic: IF2 at far infinite-tail probes < 1e-3 * sup
};

// Model-specific default contamination grid (401 points over theta +- 10 sd
// for the location-type models, 301 points on (0, 15] for the Weibull shape,
// a 61 x 61 lattice for the bivariate normal).
std::vector<Vector> default_grid(const ParametricModel& model,
                                 const Vector& theta0);

InfluenceReport influence_grid(const NullContext& ctx,
                               const Restriction* restriction, const Vector* d,
                               double alpha = 0.05);

// Sup of IF2 over the report grid; infinity when the boundedness heuristic
// fails (the unbounded beta = 0 case).
double gross_error_sensitivity(const InfluenceReport& report);

struct CsifReport {
  std::vector<double> eigenvalues;  // of Sigma^{-1} Sigma_g (or the M-projected pair)
  double c_bar_trace = 1.0;
  double c_bar_eigen = 1.0;
  double tau = 0.0;  // trace(I(y) J^{-1}) at the contamination point
  double epsilon = 0.0;
  Vector point;
};

// Chi-square inflation factor under point contamination. All matrices come
// from the quadrature path so the report is consistent with csif_slope.
CsifReport csif(const ParametricModel& model, const Vector& theta0, double beta,
                const ContaminatedTruth& truth,
                const Restriction* restriction = nullptr);

// Analytic d c_bar / d eps at eps = 0, via the exact eps-derivatives of the
// contaminated J and K.
double csif_slope(const ParametricModel& model, const Vector& theta0, double beta,
                  const Vector& y, const Restriction* restriction = nullptr);

// Central finite-difference cross-check on csif.
double csif_slope_fd(const ParametricModel& model, const Vector& theta0,
                     double beta, const Vector& y,
                     const Restriction* restriction = nullptr,
                     double eps = 1e-4);

}  // namespace rw

#endif
