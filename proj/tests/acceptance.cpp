// Acceptance harness: each criterion prints one PASS/FAIL line (plus
// per-cell detail on failure) and the process exit code reflects the result.
// Run as: acceptance <criterion-number>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

#include "robustwald/models.hpp"
#include "robustwald/robustness.hpp"

using namespace rw;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

const double kDGrid[] = {0.0, 2.0, 3.0, 4.0, 5.0, 10.0};
const double kBetaGrid[] = {0.0, 0.01, 0.1, 0.3, 0.5, 0.7, 1.0};

// Reference contiguous-power table for the Weibull shape test at level 5%.
const double kTable1[6][7] = {
    {0.050, 0.050, 0.050, 0.050, 0.050, 0.050, 0.050},
    {0.778, 0.788, 0.747, 0.617, 0.558, 0.502, 0.473},
    {0.981, 0.984, 0.975, 0.930, 0.880, 0.825, 0.790},
    {1.000, 1.000, 1.000, 0.996, 0.983, 0.973, 0.967},
    {1.000, 1.000, 1.000, 1.000, 1.000, 0.999, 0.995},
    {1.000, 1.000, 1.000, 1.000, 1.000, 1.000, 1.000}};

// Reference contiguous-power table for the correlation test at level 5%.
const double kTable2[6][7] = {
    {0.050, 0.050, 0.050, 0.050, 0.050, 0.050, 0.050},
    {0.516, 0.516, 0.508, 0.463, 0.408, 0.354, 0.287},
    {0.851, 0.851, 0.844, 0.800, 0.735, 0.662, 0.553},
    {0.979, 0.979, 0.977, 0.962, 0.932, 0.887, 0.797},
    {0.999, 0.999, 0.999, 0.997, 0.991, 0.978, 0.937},
    {1.000, 1.000, 1.000, 1.000, 1.000, 1.000, 1.000}};

Matrix reg_design(int n = 6) {
  Matrix x(n, 2);
  for (int i = 0; i < n; ++i) {
    x(i, 0) = 1.0;
    x(i, 1) = -1.0 + 2.0 * i / (n - 1.0);
  }
  return x;
}

// --------------------------------------------------------------------------
// 1. Weibull-shape contiguous power grid vs the reference table (+-0.005).
bool criterion1() {
  const auto t0 = clock_type::now();
  const WeibullShapeModel wb;
  bool ok = true;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 7; ++j) {
      ContiguousSpec spec;
      spec.d = Vector{kDGrid[i]};
      const double p =
          contiguous_power(wb, {1.0}, nullptr, kBetaGrid[j], spec);
      const double rounded = std::round(p * 1000.0) / 1000.0;
      if (std::abs(rounded - kTable1[i][j]) > 0.005 + 1e-12) {
        ok = false;
        std::printf("  cell d=%g beta=%g: computed %.3f, reference %.3f "
                    "(deviation %+.3f)\n",
                    kDGrid[i], kBetaGrid[j], rounded, kTable1[i][j],
                    rounded - kTable1[i][j]);
      }
    }
  }
  const double el = seconds_since(t0);
  if (el >= 5.0) {
    ok = false;
    std::printf("  runtime %.2f s exceeds 5 s\n", el);
  }
  return ok;
}

// 2. Correlation-test contiguous power grid vs the reference table (+-0.002).
bool criterion2() {
  const auto t0 = clock_type::now();
  const BivariateNormalModel biv;
  const Restriction rho0 = coordinate_restriction(4, 0.0, 5);
  const Vector th{0.0, 0.0, 1.0, 1.0, 0.0};
  bool ok = true;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 7; ++j) {
      ContiguousSpec spec;
      spec.delta = Vector{kDGrid[i]};
      const double p = contiguous_power(biv, th, &rho0, kBetaGrid[j], spec);
      const double rounded = std::round(p * 1000.0) / 1000.0;
      if (std::abs(rounded - kTable2[i][j]) > 0.002 + 1e-12) {
        ok = false;
        std::printf("  cell d=%g beta=%g: computed %.3f, reference %.3f\n",
                    kDGrid[i], kBetaGrid[j], rounded, kTable2[i][j]);
      }
    }
  }
  const double el = seconds_since(t0);
  if (el >= 1.0) {
    ok = false;
    std::printf("  runtime %.2f s exceeds 1 s\n", el);
  }
  return ok;
}

// 3. beta = 0 estimates equal the closed-form MLEs; Sigma_0 is the inverse
// Fisher information.
bool criterion3() {
  bool ok = true;
  const std::vector<Vector> data{{-1.1}, {0.4}, {0.9}, {-0.3},
                                 {0.5},  {0.1}, {-0.6}, {1.2}};
  auto nl = std::make_shared<NormalLocationModel>(1.0);
  auto nm = std::make_shared<NormalModel>();
  const Matrix x = reg_design(8);
  auto lr = std::make_shared<LinearRegressionModel>(x);
  std::vector<Vector> resp;
  for (int i = 0; i < 8; ++i)
    resp.push_back({0.4 + 0.8 * x(i, 1) + 0.15 * ((i % 3) - 1)});

  struct Case {
    std::shared_ptr<const ParametricModel> model;
    const std::vector<Vector>* data;
    const char* label;
  };
  const Case cases[] = {{nl, &data, "normal-loc"},
                        {nm, &data, "normal"},
                        {lr, &resp, "linreg"}};
  for (const Case& c : cases) {
    const MdpdeFit f = fit(c.model, *c.data, 0.0);
    const Vector mle = *c.model->closed_form_mle(*c.data);
    for (std::size_t i = 0; i < mle.size(); ++i) {
      if (!rel_close(f.theta_hat[i], mle[i], 1e-6)) {
        ok = false;
        std::printf("  %s: theta_hat[%zu]=%.10f vs mle %.10f\n", c.label, i,
                    f.theta_hat[i], mle[i]);
      }
    }
    // Sigma_0 vs the inverse Fisher information at theta_hat.
    const Matrix fisher =
        matrices_at_model(*c.model, f.theta_hat, 0.0, false).j;
    const Matrix fisher_inv = invert_spd(fisher, "Fisher information");
    for (std::size_t i = 0; i < fisher_inv.rows(); ++i) {
      for (std::size_t j = 0; j < fisher_inv.cols(); ++j) {
        if (!rel_close(f.sigma(i, j), fisher_inv(i, j), 1e-6)) {
          ok = false;
          std::printf("  %s: Sigma0(%zu,%zu)=%.10f vs inv Fisher %.10f\n",
                      c.label, i, j, f.sigma(i, j), fisher_inv(i, j));
        }
      }
    }
  }
  return ok;
}

// 4. Closed-form influence displays match the generic formulas on the
// default grids, within 1e-8.
bool criterion4() {
  bool ok = true;
  int bad = 0;
  auto fail = [&](const char* what, double a, double b) {
    ok = false;
    if (++bad <= 10)
      std::printf("  %s: display %.12g vs generic %.12g\n", what, a, b);
  };

  // Location model: the display is J_beta times the influence function.
  {
    auto nl = std::make_shared<NormalLocationModel>(1.0);
    const NullContext ctx = make_null_context(nl, {0.0}, 0.5, true);
    for (const Vector& x : default_grid(*nl, {0.0})) {
      const double disp = normal_location_if_display(0.0, 1.0, 0.5, x[0]);
      const double generic = ctx.jk.j(0, 0) * if_estimator(ctx, x)[0];
      if (!rel_close(disp, generic, 1e-8)) fail("normal-loc IF", disp, generic);
    }
  }

  // Weibull shape test at shape 1.
  {
    auto wb = std::make_shared<WeibullShapeModel>();
    for (double beta : {0.25, 0.5}) {
      const NullContext ctx = make_null_context(wb, {1.0}, beta, true);
      for (const Vector& x : default_grid(*wb, {1.0})) {
        const double a1 = weibull_if_display(beta, x[0]);
        const double b1 = if_estimator(ctx, x)[0];
        if (!rel_close(a1, b1, 1e-8)) fail("weibull IF", a1, b1);
        const double a2 = weibull_if2_display(beta, x[0]);
        const double b2 = if2_simple(ctx, x);
        if (!rel_close(a2, b2, 1e-8)) fail("weibull IF2", a2, b2);
        const double a3 = weibull_pif_display(beta, 2.0, 0.05, x[0]);
        const double b3 = pif(ctx, nullptr, {2.0}, 0.05, x);
        if (!rel_close(a3, b3, 1e-8)) fail("weibull PIF", a3, b3);
      }
    }
  }

  // Correlation test at rho = 0. The mean and correlation components of the
  // influence vector follow the generic formula; the printed sigma components
  // of that vector do not reduce to it and are excluded here.
  {
    auto biv = std::make_shared<BivariateNormalModel>();
    const Vector th{0.0, 0.0, 1.0, 1.0, 0.0};
    const Restriction rho0 = coordinate_restriction(4, 0.0, 5);
    const NullContext ctx = make_null_context(biv, th, 0.5, true);
    const Vector d{0.0, 0.0, 0.0, 0.0, 1.5};
    for (const Vector& x : default_grid(*biv, th)) {
      const Vector disp = bivnormal_if_display(th, 0.5, x);
      const Vector generic = if_estimator(ctx, x);
      for (int i : {0, 1, 4}) {
        if (!rel_close(disp[i], generic[i], 1e-8))
          fail("bivariate IF", disp[i], generic[i]);
      }
      const double a2 = bivnormal_if2_display(th, 0.5, x);
      const double b2 = if2_composite(ctx, rho0, x);
      if (!rel_close(a2, b2, 1e-8)) fail("bivariate IF2", a2, b2);
      const double a3 = bivnormal_pif_display(th, 0.5, 1.5, 0.05, x);
      const double b3 = pif(ctx, &rho0, d, 0.05, x);
      if (!rel_close(a3, b3, 1e-8)) fail("bivariate PIF", a3, b3);
    }
  }

  // Regression general linear hypothesis, per design row.
  {
    const Matrix x = reg_design(6);
    auto lr = std::make_shared<LinearRegressionModel>(x);
    const Vector th{0.5, -0.3, 1.0};
    Matrix lmat(2, 1);
    lmat(1, 0) = 1.0;
    Matrix lfull(3, 1);
    lfull(1, 0) = 1.0;
    const Restriction res = linear_restriction(lfull, {0.0});
    const NullContext ctx = make_null_context(lr, th, 0.4, true);
    const Vector delta{0.7};
    for (const Vector& t : default_grid(*lr, th)) {
      for (int i = 0; i < 6; ++i) {
        const double a2 = linreg_if2_direction(*lr, th, 0.4, lmat, i, t[0]);
        const double b2 = if2_composite(ctx, res, t, i);
        if (!rel_close(a2, b2, 1e-8)) fail("linreg IF2", a2, b2);
        const double a3 =
            linreg_pif_direction(*lr, th, 0.4, lmat, delta, 0.05, i, t[0]);
        const double b3 = pif(ctx, &res, {0.0, delta[0], 0.0}, 0.05, t, i);
        if (!rel_close(a3, b3, 1e-8)) fail("linreg PIF", a3, b3);
      }
    }
  }
  return ok;
}

// 5. Finite-difference influence oracle through the population functional.
bool criterion5() {
  bool ok = true;
  const NormalLocationModel nl(1.0);
  const WeibullShapeModel wb;
  struct Case {
    const ParametricModel* model;
    Vector theta0;
    double pts[3];
  };
  const Case cases[] = {{&nl, {0.0}, {-1.5, 0.7, 2.5}},
                        {&wb, {1.0}, {0.5, 1.5, 3.0}}};
  const double eps = 1e-4;
  for (const Case& c : cases) {
    for (double beta : {0.25, 0.5}) {
      for (double y : c.pts) {
        const Vector t_eps =
            population_functional(*c.model, {c.theta0, eps, {y}}, beta);
        const double fd = (t_eps[0] - c.theta0[0]) / eps;
        const double exact =
            if_estimator(*c.model, c.theta0, beta, {y}, false)[0];
        if (!rel_close(fd, exact, 1e-3)) {
          ok = false;
          std::printf("  %s beta=%g y=%g: fd %.8f vs IF %.8f\n",
                      c.model->name().c_str(), beta, y, fd, exact);
        }
      }
    }
  }
  return ok;
}

// 6. The power influence vanishes with the direction, and the level is flat
// in the contamination fraction to first order.
bool criterion6() {
  bool ok = true;
  auto wb = std::make_shared<WeibullShapeModel>();
  const NullContext ctx = make_null_context(wb, {1.0}, 0.5, true);
  for (double x : {0.3, 1.0, 2.0, 5.0}) {
    const double p = pif(ctx, nullptr, {0.0}, 0.05, {x});
    if (p != 0.0) {
      ok = false;
      std::printf("  pif(d=0) at x=%g is %g, expected exactly 0\n", x, p);
    }
    if (lif(ctx, nullptr, {x}) != 0.0) ok = false;
  }

  auto level_slope = [&](const ParametricModel& m, const Vector& th,
                         const Restriction* r, const Vector& x) {
    auto level = [&](double eps) {
      ContiguousSpec spec;
      spec.d = Vector(th.size(), 0.0);
      spec.epsilon = eps;
      spec.x = x;
      return contiguous_power_series(m, th, r, 0.5, spec);
    };
    const double h = 1e-4;
    return (level(h) - level(-h)) / (2.0 * h);
  };
  const double s1 = level_slope(*wb, {1.0}, nullptr, {3.0});
  const BivariateNormalModel biv;
  const Restriction rho0 = coordinate_restriction(4, 0.0, 5);
  const double s2 = level_slope(biv, {0, 0, 1, 1, 0}, &rho0, {2.0, 1.0});
  for (double s : {s1, s2}) {
    if (std::abs(s) >= 1e-6) {
      ok = false;
      std::printf("  level slope %.3g exceeds 1e-6\n", s);
    }
  }
  return ok;
}

// 7. Inflation factor: exact unity at eps = 0, trace/eigen agreement, and
// analytic slope vs finite differences on six cases.
bool criterion7() {
  bool ok = true;
  const NormalLocationModel nl(1.0);
  const WeibullShapeModel wb;
  const BivariateNormalModel biv;
  const Restriction rho0 = coordinate_restriction(4, 0.0, 5);
  const Vector bth{0.0, 0.0, 1.0, 1.0, 0.0};

  const CsifReport clean = csif(wb, {1.0}, 0.4, {{1.0}, 0.0, {3.0}});
  if (std::abs(clean.c_bar_trace - 1.0) > 1e-9 ||
      std::abs(clean.c_bar_eigen - 1.0) > 1e-9) {
    ok = false;
    std::printf("  eps=0 inflation %.12f / %.12f, expected 1\n",
                clean.c_bar_trace, clean.c_bar_eigen);
  }

  const CsifReport dirty = csif(biv, bth, 0.4, {bth, 0.05, {2.0, 2.0}});
  if (std::abs(dirty.c_bar_trace - dirty.c_bar_eigen) > 1e-10) {
    ok = false;
    std::printf("  trace %.14f vs eigen-mean %.14f disagree\n",
                dirty.c_bar_trace, dirty.c_bar_eigen);
  }

  struct Case {
    const ParametricModel* model;
    Vector theta0;
    double beta;
    Vector y;
    const Restriction* restriction;
  };
  const Case cases[] = {
      {&nl, {0.0}, 0.3, {2.0}, nullptr},
      {&nl, {0.0}, 0.6, {-1.5}, nullptr},
      {&nl, {0.0}, 1.0, {3.0}, nullptr},
      {&wb, {1.0}, 0.4, {3.0}, nullptr},
      {&wb, {1.0}, 0.25, {0.5}, nullptr},
      {&biv, bth, 0.4, {2.0, 1.0}, &rho0},
  };
  for (const Case& c : cases) {
    const double an =
        csif_slope(*c.model, c.theta0, c.beta, c.y, c.restriction);
    const double fd =
        csif_slope_fd(*c.model, c.theta0, c.beta, c.y, c.restriction);
    if (!rel_close(an, fd, 1e-3)) {
      ok = false;
      std::printf("  %s beta=%g: slope %.8f vs fd %.8f\n",
                  c.model->name().c_str(), c.beta, an, fd);
    }
  }
  return ok;
}

// 8. Boundedness of the second-order influence for beta > 0; monotone growth
// at beta = 0.
bool criterion8() {
  bool ok = true;
  auto wb = std::make_shared<WeibullShapeModel>();
  auto nl = std::make_shared<NormalLocationModel>(1.0);
  for (double beta : {0.3, 0.5, 1.0}) {
    for (const auto& pair :
         {std::pair<std::shared_ptr<ParametricModel>, Vector>{wb, {1.0}},
          {nl, {0.0}}}) {
      const NullContext ctx =
          make_null_context(pair.first, pair.second, beta, true);
      const InfluenceReport rep = influence_grid(ctx, nullptr, nullptr);
      if (!rep.bounded || !std::isfinite(gross_error_sensitivity(rep))) {
        ok = false;
        std::printf("  %s beta=%g: influence not flagged bounded\n",
                    pair.first->name().c_str(), beta);
      }
    }
  }
  // beta = 0: the tail of IF2 strictly increases on both models.
  for (const auto& pair :
       {std::pair<std::shared_ptr<ParametricModel>, Vector>{wb, {1.0}},
        {nl, {0.0}}}) {
    const NullContext ctx = make_null_context(pair.first, pair.second, 0.0, true);
    const InfluenceReport rep = influence_grid(ctx, nullptr, nullptr);
    if (rep.bounded) {
      ok = false;
      std::printf("  %s beta=0 wrongly flagged bounded\n",
                  pair.first->name().c_str());
    }
    const std::size_t n = rep.if2.size();
    for (std::size_t i = n - 10; i + 1 < n; ++i) {
      if (rep.if2[i + 1] <= rep.if2[i]) {
        ok = false;
        std::printf("  %s beta=0 tail not increasing at grid index %zu\n",
                    pair.first->name().c_str(), i);
        break;
      }
    }
  }
  return ok;
}

// 9. Seeded Monte-Carlo size of the correlation test under 2% contamination.
bool criterion9() {
  const auto t0 = clock_type::now();
  auto biv = std::make_shared<BivariateNormalModel>();
  const int n = 500, reps = 2000;
  const double crit = chisq_quantile(0.05, 1);
  std::mt19937 rng(987654321);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  int reject0 = 0, reject5 = 0;
  FitOptions opts;
  opts.compute_matrices = false;
  const double z5 = std::pow(zeta_kappa(0.5).zeta, 2.5);
  for (int r = 0; r < reps; ++r) {
    std::vector<Vector> data;
    data.reserve(n);
    for (int i = 0; i < n; ++i) {
      if (unif(rng) < 0.02) {
        data.push_back({8.0, 8.0});
      } else {
        data.push_back({gauss(rng), gauss(rng)});
      }
    }
    const Vector mle = *biv->closed_form_mle(data);
    if (n * mle[4] * mle[4] > crit) ++reject0;
    const MdpdeFit f = fit(biv, data, 0.5, mle, opts);
    if (n * f.theta_hat[4] * f.theta_hat[4] / z5 > crit) ++reject5;
  }
  const double size0 = reject0 / static_cast<double>(reps);
  const double size5 = reject5 / static_cast<double>(reps);
  const double el = seconds_since(t0);
  std::printf("  empirical size: beta=0 %.4f, beta=0.5 %.4f (%.1f s)\n",
              size0, size5, el);
  bool ok = true;
  if (!(size5 >= 0.03 && size5 <= 0.08)) {
    ok = false;
    std::printf("  beta=0.5 size outside [0.03, 0.08]\n");
  }
  if (!(size0 > 0.15)) {
    ok = false;
    std::printf("  beta=0 size does not exceed 0.15\n");
  }
  if (el >= 60.0) {
    ok = false;
    std::printf("  runtime %.1f s exceeds 60 s\n", el);
  }
  return ok;
}

// 10. beta = 0 statistics equal hand-coded classical Wald statistics.
bool criterion10() {
  bool ok = true;

  // Weibull shape, simple null at 1. Classical Wald: n (th - 1)^2 I(1) with
  // the Fisher information written directly as an integral of the squared
  // score under the unit exponential.
  {
    auto wb = std::make_shared<WeibullShapeModel>();
    std::vector<Vector> data;
    for (int i = 1; i <= 30; ++i) data.push_back({-std::log(i / 31.0)});
    const MdpdeFit f = fit(wb, data, 0.0);
    const WaldResult w = simple_wald(f, {1.0});
    const double info = integrate(
        [](double x) {
          const double u = 1.0 + (1.0 - x) * std::log(x);
          return u * u * std::exp(-x);
        },
        {0.0, kInf}, 1e-12);
    const double hand =
        f.n * (f.theta_hat[0] - 1.0) * (f.theta_hat[0] - 1.0) * info;
    if (!rel_close(w.statistic, hand, 1e-8)) {
      ok = false;
      std::printf("  weibull: %.12f vs hand-coded %.12f\n", w.statistic, hand);
    }
  }

  // Correlation composite null. Classical Wald from the textbook bivariate
  // normal Fisher information, assembled entry by entry.
  {
    auto biv = std::make_shared<BivariateNormalModel>();
    std::vector<Vector> data;
    std::mt19937 rng(424242);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < 60; ++i) {
      const double a = gauss(rng), b = gauss(rng);
      data.push_back({a, 0.3 * a + std::sqrt(1.0 - 0.09) * b});
    }
    const MdpdeFit f = fit(biv, data, 0.0);
    const WaldResult w = composite_wald(f, coordinate_restriction(4, 0.0, 5));
    const double s1 = f.theta_hat[2], s2 = f.theta_hat[3], rho = f.theta_hat[4];
    const double q = 1.0 - rho * rho;
    Matrix fisher(5, 5);
    fisher(0, 0) = 1.0 / (q * s1 * s1);
    fisher(1, 1) = 1.0 / (q * s2 * s2);
    fisher(0, 1) = fisher(1, 0) = -rho / (q * s1 * s2);
    fisher(2, 2) = (2.0 - rho * rho) / (q * s1 * s1);
    fisher(3, 3) = (2.0 - rho * rho) / (q * s2 * s2);
    fisher(2, 3) = fisher(3, 2) = -rho * rho / (q * s1 * s2);
    fisher(2, 4) = fisher(4, 2) = -rho / (q * s1);
    fisher(3, 4) = fisher(4, 3) = -rho / (q * s2);
    fisher(4, 4) = (1.0 + rho * rho) / (q * q);
    const Matrix cov = invert_spd(fisher, "Fisher information");
    const double hand = f.n * rho * rho / cov(4, 4);
    if (!rel_close(w.statistic, hand, 1e-8)) {
      ok = false;
      std::printf("  correlation: %.12f vs hand-coded %.12f\n", w.statistic,
                  hand);
    }
  }

  // Regression slope. Classical Wald from ordinary least squares algebra.
  {
    const Matrix x = reg_design(10);
    auto lr = std::make_shared<LinearRegressionModel>(x);
    std::vector<Vector> resp;
    for (int i = 0; i < 10; ++i)
      resp.push_back({0.2 + 0.9 * x(i, 1) + 0.2 * ((i * 3) % 5 - 2)});
    const MdpdeFit f = fit(lr, resp, 0.0);
    Matrix lfull(3, 1);
    lfull(1, 0) = 1.0;
    const WaldResult w = composite_wald(f, linear_restriction(lfull, {0.0}));
    const Matrix a_inv = invert_spd(lr->design_moment(), "X^T X / n");
    const double sig2 = f.theta_hat[2] * f.theta_hat[2];
    const double hand =
        f.n * f.theta_hat[1] * f.theta_hat[1] / (sig2 * a_inv(1, 1));
    if (!rel_close(w.statistic, hand, 1e-8)) {
      ok = false;
      std::printf("  linreg: %.12f vs hand-coded %.12f\n", w.statistic, hand);
    }
  }
  return ok;
}

const char* kDescriptions[10] = {
    "Weibull-shape contiguous power table within 0.005",
    "correlation-test contiguous power table within 0.002",
    "beta=0 estimates equal closed-form MLEs, Sigma_0 = inverse Fisher",
    "influence displays match generic formulas on default grids",
    "finite-difference influence oracle within 1e-3 relative",
    "pif(d=0) = 0 and first-order level stability",
    "inflation factor unity, trace/eigen agreement, slope cross-check",
    "influence bounded for beta > 0, unbounded growth at beta = 0",
    "Monte-Carlo size under 2% contamination",
    "beta=0 statistics equal hand-coded classical Wald",
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: acceptance <criterion 1..10>\n");
    return 2;
  }
  const int n = std::atoi(argv[1]);
  if (n < 1 || n > 10) {
    std::fprintf(stderr, "criterion number must be 1..10\n");
    return 2;
  }
  bool (*const fns[10])() = {criterion1, criterion2, criterion3, criterion4,
                             criterion5, criterion6, criterion7, criterion8,
                             criterion9, criterion10};
  const bool ok = fns[n - 1]();
  std::printf("CRITERION %d: %s - %s\n", n, ok ? "PASS" : "FAIL",
              kDescriptions[n - 1]);
  return ok ? 0 : 1;
}
