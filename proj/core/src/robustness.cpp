#include "robustwald/robustness.hpp"

#include <cmath>
#include <limits>

#include "robustwald/models.hpp"

namespace rw {
namespace {

// u f^beta - xi at x: the kernel every influence quantity is built from.
Vector score_kernel(const NullContext& ctx, const Vector& x, int comp) {
  const double w =
      std::pow(ctx.model->density(ctx.theta0, x, comp), ctx.beta);
  Vector a = ctx.model->score(ctx.theta0, x, comp);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = a[i] * w - ctx.jk.xi[i];
  }
  return a;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  return v;
}

}  // namespace

NullContext make_null_context(std::shared_ptr<const ParametricModel> model,
                              Vector theta0, double beta,
                              bool use_closed_forms) {
  NullContext ctx;
  ctx.jk = matrices_at_model(*model, theta0, beta, use_closed_forms);
  ctx.model = std::move(model);
  ctx.theta0 = std::move(theta0);
  ctx.beta = beta;
  ctx.j_inv = invert_spd(ctx.jk.j, "J_beta");
  ctx.sigma = ctx.j_inv * ctx.jk.k * ctx.j_inv;
  ctx.sigma_inv = invert_spd(ctx.sigma, "Sigma_beta");
  return ctx;
}

Vector if_estimator(const NullContext& ctx, const Vector& x, int comp) {
  return ctx.j_inv * score_kernel(ctx, x, comp);
}

Vector if_estimator(const ParametricModel& model, const Vector& theta0,
                    double beta, const Vector& x, bool use_closed_forms) {
  NullContext ctx = make_null_context(
      std::shared_ptr<const ParametricModel>(&model, [](const ParametricModel*) {}),
      theta0, beta, use_closed_forms);
  return if_estimator(ctx, x);
}

double if2_simple(const NullContext& ctx, const Vector& x, int comp) {
  const Vector a = score_kernel(ctx, x, comp);
  const Vector ja = ctx.j_inv * a;
  return 2.0 * quad_form(ctx.sigma_inv, ja);
}

double if2_simple_shortcut(const NullContext& ctx, const Vector& x, int comp) {
  const Matrix k_inv = invert_spd(ctx.jk.k, "K_beta");
  const Vector a = score_kernel(ctx, x, comp);
  return 2.0 * quad_form(k_inv, a);
}

double if2_composite(const NullContext& ctx, const Restriction& restriction,
                     const Vector& x, int comp) {
  const Matrix m_jac = restriction.jacobian(ctx.theta0);
  const Matrix star_inv =
      invert_spd(m_jac.transpose() * ctx.sigma * m_jac, "M^T Sigma M");
  const Vector a = score_kernel(ctx, x, comp);
  const Vector proj = m_jac.transpose() * (ctx.j_inv * a);
  return 2.0 * quad_form(star_inv, proj);
}

double pif(const NullContext& ctx, const Restriction* restriction,
           const Vector& d, double alpha, const Vector& x, int comp) {
  const Vector inf = if_estimator(ctx, x, comp);
  if (restriction == nullptr) {
    const Vector sd = ctx.sigma_inv * d;
    const double s = dot(d, sd);
    return k_star(s, ctx.model->param_dim(), alpha) * dot(sd, inf);
  }
  const Matrix m_jac = restriction->jacobian(ctx.theta0);
  const Matrix star_inv =
      invert_spd(m_jac.transpose() * ctx.sigma * m_jac, "M^T Sigma M");
  const Vector t = m_jac.transpose() * d;
  const Vector st = star_inv * t;
  const double s = dot(t, st);
  const Vector proj = m_jac.transpose() * inf;
  return k_star(s, restriction->r, alpha) * dot(st, proj);
}

double lif(const NullContext&, const Restriction*, const Vector&) { return 0.0; }

std::vector<Vector> default_grid(const ParametricModel& model,
                                 const Vector& theta0) {
  std::vector<Vector> grid;
  const std::string name = model.name();
  if (name == "weibull-shape") {
    for (int i = 1; i <= 301; ++i) grid.push_back({15.0 * i / 301.0});
    return grid;
  }
  if (name == "bivariate-normal") {
    const auto xs = linspace(theta0[0] - 10.0 * theta0[2],
                             theta0[0] + 10.0 * theta0[2], 61);
    const auto ys = linspace(theta0[1] - 10.0 * theta0[3],
                             theta0[1] + 10.0 * theta0[3], 61);
    for (double x : xs)
      for (double y : ys) grid.push_back({x, y});
    return grid;
  }
  double center, scale;
  if (name == "normal") {
    center = theta0[0];
    scale = theta0[1];
  } else if (name == "linreg") {
    // Response grid around the first fitted value.
    center = 0.0;  // adjusted below via the design row
    scale = theta0.back();
    const auto* lr = dynamic_cast<const LinearRegressionModel*>(&model);
    if (lr != nullptr) {
      const Vector x0 = lr->design_row(0);
      for (std::size_t j = 0; j + 1 < theta0.size(); ++j) {
        center += x0[j] * theta0[j];
      }
    }
  } else {
    center = theta0[0];
    const auto* nl = dynamic_cast<const NormalLocationModel*>(&model);
    scale = nl != nullptr ? nl->sigma() : 1.0;
  }
  for (double v : linspace(center - 10.0 * scale, center + 10.0 * scale, 401)) {
    grid.push_back({v});
  }
  return grid;
}

InfluenceReport influence_grid(const NullContext& ctx,
                               const Restriction* restriction, const Vector* d,
                               double alpha) {
  InfluenceReport rep;
  rep.beta = ctx.beta;
  rep.grid = default_grid(*ctx.model, ctx.theta0);
  const std::size_t n = rep.grid.size();
  rep.edge.assign(n, false);
  if (ctx.model->obs_dim() == 2) {
    // 61 x 61 lattice boundary.
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t row = i / 61, col = i % 61;
      rep.edge[i] = row == 0 || row == 60 || col == 0 || col == 60;
    }
  } else if (n > 1) {
    rep.edge[0] = rep.edge[n - 1] = true;
  }
  rep.if_norm.resize(n);
  rep.if2.resize(n);
  rep.pif_values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector inf = if_estimator(ctx, rep.grid[i]);
    rep.if_norm[i] = std::sqrt(dot(inf, inf));
    rep.if2[i] = restriction == nullptr
                     ? if2_simple(ctx, rep.grid[i])
                     : if2_composite(ctx, *restriction, rep.grid[i]);
    rep.pif_values[i] =
        d != nullptr ? pif(ctx, restriction, *d, alpha, rep.grid[i]) : 0.0;
    rep.sup_if = std::max(rep.sup_if, rep.if_norm[i]);
    rep.sup_if2 = std::max(rep.sup_if2, rep.if2[i]);
    rep.sup_pif = std::max(rep.sup_pif, std::abs(rep.pif_values[i]));
  }
  // Decide boundedness by probing far into the infinite-support tails
  // (10x the grid half-width past the center). Finite endpoints are not
  // probed: e.g. the unit-shape Weibull IF2 diverges slowly at x -> 0 for
  // every beta, which says nothing about tail robustness.
  auto probe_if2 = [&](const Vector& x) {
    return restriction == nullptr ? if2_simple(ctx, x)
                                  : if2_composite(ctx, *restriction, x);
  };
  double tail_max = 0.0;
  if (ctx.model->obs_dim() == 2) {
    const Vector center = rep.grid[n / 2];
    const std::size_t corners[] = {0, 60, n - 61, n - 1};
    for (std::size_t c : corners) {
      Vector p(2);
      for (int k = 0; k < 2; ++k)
        p[k] = center[k] + 10.0 * (rep.grid[c][k] - center[k]);
      tail_max = std::max(tail_max, probe_if2(p));
    }
  } else {
    const double center = rep.grid[n / 2][0];
    const IntegrationDomain dom = ctx.model->support(0);
    if (std::isinf(dom.lower)) {
      tail_max = std::max(
          tail_max, probe_if2({center + 10.0 * (rep.grid[0][0] - center)}));
    }
    if (std::isinf(dom.upper)) {
      tail_max = std::max(
          tail_max, probe_if2({center + 10.0 * (rep.grid[n - 1][0] - center)}));
    }
  }
  rep.bounded = rep.sup_if2 > 0.0 && tail_max < 1e-3 * rep.sup_if2;
  return rep;
}

double gross_error_sensitivity(const InfluenceReport& report) {
  if (!report.bounded) return std::numeric_limits<double>::infinity();
  return report.sup_if2;
}

CsifReport csif(const ParametricModel& model, const Vector& theta0, double beta,
                const ContaminatedTruth& truth, const Restriction* restriction) {
  const JKXi base = matrices_at_model(model, theta0, beta, false);
  const Matrix sigma = sandwich(base);
  const GMatrices g = matrices_under_g(model, truth, beta);

  Matrix a = g.sigma;
  Matrix b = sigma;
  int dim = model.param_dim();
  if (restriction != nullptr) {
    const Matrix m_jac = restriction->jacobian(theta0);
    a = m_jac.transpose() * g.sigma * m_jac;
    b = m_jac.transpose() * sigma * m_jac;
    dim = restriction->r;
  }

  CsifReport rep;
  rep.eigenvalues = generalized_eigenvalues(a, b);
  const Matrix b_inv = invert_spd(b, "Sigma_beta");
  rep.c_bar_trace = trace(b_inv * a) / dim;
  double mean = 0.0;
  for (double e : rep.eigenvalues) mean += e;
  rep.c_bar_eigen = mean / dim;
  const Matrix j_inv = invert_spd(base.j, "J_beta");
  rep.tau = trace(model.info(theta0, truth.point) * j_inv);
  rep.epsilon = truth.epsilon;
  rep.point = truth.point;
  return rep;
}

double csif_slope(const ParametricModel& model, const Vector& theta0, double beta,
                  const Vector& y, const Restriction* restriction) {
  const JKXi base = matrices_at_model(model, theta0, beta, false);
  invert_spd(base.k, "K_beta");  // full-rank hypothesis of the slope formula
  const Matrix j_inv = invert_spd(base.j, "J_beta");
  const Matrix sigma = j_inv * base.k * j_inv;
  const GDerivatives der = matrices_under_g_slope(model, theta0, y, beta);
  // d Sigma_g / d eps at 0.
  const Matrix d_sigma = j_inv * der.k1 * j_inv - j_inv * der.j1 * sigma -
                         sigma * der.j1 * j_inv;
  if (restriction == nullptr) {
    const Matrix sigma_inv = invert_spd(sigma, "Sigma_beta");
    return trace(sigma_inv * d_sigma) / model.param_dim();
  }
  const Matrix m_jac = restriction->jacobian(theta0);
  const Matrix star_inv =
      invert_spd(m_jac.transpose() * sigma * m_jac, "M^T Sigma M");
  return trace(star_inv * (m_jac.transpose() * d_sigma * m_jac)) /
         restriction->r;
}

double csif_slope_fd(const ParametricModel& model, const Vector& theta0,
                     double beta, const Vector& y, const Restriction* restriction,
                     double eps) {
  auto c_bar = [&](double e) {
    return csif(model, theta0, beta, {theta0, e, y}, restriction).c_bar_trace;
  };
  // Second-order one-sided difference; c_bar(0) = 1 identically.
  return (-3.0 * c_bar(0.0) + 4.0 * c_bar(eps) - c_bar(2.0 * eps)) /
         (2.0 * eps);
}

}  // namespace rw
