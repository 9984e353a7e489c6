#include "robustwald/mdpde.hpp"

#include <cmath>

namespace rw {
namespace {

using MatrixIntegrand = std::function<Matrix(const Vector&)>;

// Entrywise quadrature of a matrix-valued integrand against a scalar weight.
Matrix integrate_matrix(const ParametricModel& model, int dim,
                        const MatrixIntegrand& f, double rel_tol) {
  Matrix out(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      double v;
      if (model.obs_dim() == 1) {
        v = integrate([&](double x) { return f({x})(i, j); }, model.support(0),
                      rel_tol);
      } else {
        v = integrate2d([&](double x, double y) { return f({x, y})(i, j); },
                        model.support(0), model.support(1), rel_tol);
      }
      out(i, j) = out(j, i) = v;
    }
  }
  return out;
}

Vector integrate_vector(const ParametricModel& model, int dim,
                        const std::function<Vector(const Vector&)>& f,
                        double rel_tol) {
  Vector out(dim);
  for (int i = 0; i < dim; ++i) {
    if (model.obs_dim() == 1) {
      out[i] = integrate([&](double x) { return f({x})[i]; }, model.support(0),
                         rel_tol);
    } else {
      out[i] = integrate2d([&](double x, double y) { return f({x, y})[i]; },
                           model.support(0), model.support(1), rel_tol);
    }
  }
  return out;
}

struct RawMatrices {
  Matrix j_raw;  // int u u^T f^{1+beta}
  Matrix k_raw;  // int u u^T f^{1+2beta}
  Vector xi;     // int u f^{1+beta}
};

RawMatrices raw_matrices_quadrature(const ParametricModel& model,
                                    const Vector& theta, double beta) {
  const int p = model.param_dim();
  const int comps = model.component_count();
  const double tol = model.obs_dim() == 1 ? 1e-10 : 1e-8;
  RawMatrices out{Matrix(p, p), Matrix(p, p), Vector(p, 0.0)};
  for (int comp = 0; comp < comps; ++comp) {
    auto weighted_outer = [&](double expo) {
      return [&model, &theta, comp, expo](const Vector& x) {
        const Vector u = model.score(theta, x, comp);
        return outer(u, u) * std::pow(model.density(theta, x, comp), expo);
      };
    };
    out.j_raw += integrate_matrix(model, p, weighted_outer(1.0 + beta), tol);
    out.k_raw +=
        integrate_matrix(model, p, weighted_outer(1.0 + 2.0 * beta), tol);
    const Vector xi_c = integrate_vector(
        model, p,
        [&](const Vector& x) {
          Vector u = model.score(theta, x, comp);
          const double w = std::pow(model.density(theta, x, comp), 1.0 + beta);
          for (double& v : u) v *= w;
          return u;
        },
        tol);
    for (int i = 0; i < p; ++i) out.xi[i] += xi_c[i];
  }
  const double inv = 1.0 / comps;
  out.j_raw *= inv;
  out.k_raw *= inv;
  for (double& v : out.xi) v *= inv;
  return out;
}

}  // namespace

JKXi matrices_at_model(const ParametricModel& model, const Vector& theta,
                       double beta, bool use_closed_forms) {
  if (use_closed_forms) {
    if (auto cf = model.closed_form_matrices(theta, beta)) return *cf;
  }
  RawMatrices raw = raw_matrices_quadrature(model, theta, beta);
  JKXi out{std::move(raw.j_raw), std::move(raw.k_raw), std::move(raw.xi)};
  out.k -= outer(out.xi, out.xi);
  return out;
}

Matrix sandwich(const JKXi& m) {
  const Matrix j_inv = invert_spd(m.j, "J_beta");
  return j_inv * m.k * j_inv;
}

MdpdeFit fit(std::shared_ptr<const ParametricModel> model,
             const std::vector<Vector>& data, double beta,
             const std::optional<Vector>& init, const FitOptions& opts) {
  DpdObjectiveSpec spec(model, beta, data);
  MdpdeFit out;
  out.model = model;
  out.beta = beta;
  out.n = static_cast<int>(data.size());

  bool solved = false;
  if (beta == 0.0 && opts.use_closed_forms && !init) {
    if (auto mle = model->closed_form_mle(data)) {
      out.theta_hat = *mle;
      out.objective_value = mdpde_objective(spec, out.theta_hat);
      solved = true;
    }
  }
  if (!solved) {
    const Vector start = init ? *init : model->initial_guess(data);
    const Objective obj = [&spec](const Vector& theta) {
      return mdpde_objective(spec, theta);
    };
    const MinimizeResult res = minimize(obj, start, model->param_bounds(),
                                        opts.minimize);
    out.theta_hat = res.x;
    out.objective_value = res.value;
  }

  if (opts.compute_matrices) {
    JKXi m = matrices_at_model(*model, out.theta_hat, beta, opts.use_closed_forms);
    out.sigma = sandwich(m);
    out.j_matrix = std::move(m.j);
    out.k_matrix = std::move(m.k);
    out.xi = std::move(m.xi);
  }
  return out;
}

GMatrices matrices_under_g(const ParametricModel& model,
                           const ContaminatedTruth& truth, double beta) {
  if (model.component_count() > 1) {
    throw UsageError(
        "matrices_under_g: only homogeneous (single-component) models");
  }
  if (truth.epsilon < 0.0 || truth.epsilon >= 1.0) {
    throw DataError("matrices_under_g: epsilon must lie in [0, 1)");
  }
  const int p = model.param_dim();
  const Vector& th = truth.base_theta;
  const double eps = truth.epsilon;
  const Vector& y = truth.point;
  const double tol = model.obs_dim() == 1 ? 1e-10 : 1e-8;

  const RawMatrices raw = raw_matrices_quadrature(model, th, beta);
  // int I_theta f^{1+beta}, reusing the model's information matrix.
  const Matrix info_int = integrate_matrix(
      model, p,
      [&](const Vector& x) {
        return model.info(th, x) * std::pow(model.density(th, x), 1.0 + beta);
      },
      tol);

  const double fy = model.density(th, y);
  const double fyb = std::pow(fy, beta);
  const Vector uy = model.score(th, y);
  const Matrix uy_outer = outer(uy, uy);

  GMatrices out;
  // J_g = J + eps[(I(y) - beta u u^T) f^beta(y) - int (I - beta u u^T) f^{1+beta}]
  out.j = raw.j_raw +
          eps * ((model.info(th, y) - beta * uy_outer) * fyb -
                 (info_int - beta * raw.j_raw));

  Vector xi_g(p);
  for (int i = 0; i < p; ++i) {
    xi_g[i] = (1.0 - eps) * raw.xi[i] + eps * uy[i] * fyb;
  }
  out.xi = xi_g;
  out.k = (1.0 - eps) * raw.k_raw + eps * std::pow(fy, 2.0 * beta) * uy_outer -
          outer(xi_g, xi_g);

  const Matrix j_inv = invert_spd(out.j, "J_{beta,g}");
  out.sigma = j_inv * out.k * j_inv;
  return out;
}

GDerivatives matrices_under_g_slope(const ParametricModel& model,
                                    const Vector& theta0, const Vector& y,
                                    double beta) {
  if (model.component_count() > 1) {
    throw UsageError(
        "matrices_under_g_slope: only homogeneous (single-component) models");
  }
  const int p = model.param_dim();
  const double tol = model.obs_dim() == 1 ? 1e-10 : 1e-8;
  const RawMatrices raw = raw_matrices_quadrature(model, theta0, beta);
  const Matrix info_int = integrate_matrix(
      model, p,
      [&](const Vector& x) {
        return model.info(theta0, x) *
               std::pow(model.density(theta0, x), 1.0 + beta);
      },
      tol);

  const double fy = model.density(theta0, y);
  const double fyb = std::pow(fy, beta);
  const Vector uy = model.score(theta0, y);
  const Matrix uy_outer = outer(uy, uy);

  GDerivatives out;
  out.j1 = (model.info(theta0, y) - beta * uy_outer) * fyb -
           (info_int - beta * raw.j_raw);
  Vector xi1(p);
  for (int i = 0; i < p; ++i) xi1[i] = uy[i] * fyb - raw.xi[i];
  out.k1 = std::pow(fy, 2.0 * beta) * uy_outer - raw.k_raw -
           outer(xi1, raw.xi) - outer(raw.xi, xi1);
  return out;
}

Vector population_functional(const ParametricModel& model,
                             const ContaminatedTruth& truth, double beta) {
  if (model.component_count() > 1) {
    throw UsageError(
        "population_functional: only homogeneous (single-component) models");
  }
  const Vector& th0 = truth.base_theta;
  const double eps = truth.epsilon;
  const Vector& y = truth.point;

  auto cross = [&](const Vector& theta) {
    // (1-eps) E_{theta0}[f_theta^beta] for beta > 0, or the cross-entropy
    // E_{theta0}[log f_theta] for beta = 0.
    auto g = [&](const Vector& x) {
      const double base = model.density(th0, x);
      if (base <= 0.0) return 0.0;
      const double f = model.density(theta, x);
      if (beta == 0.0) {
        if (f <= 0.0) {
          throw NumericalError("population_functional: log of zero density");
        }
        return base * std::log(f);
      }
      return base * std::pow(f, beta);
    };
    if (model.obs_dim() == 1) {
      return integrate([&](double x) { return g({x}); }, model.support(0), 1e-11);
    }
    return integrate2d([&](double x, double yy) { return g({x, yy}); },
                       model.support(0), model.support(1), 1e-9);
  };

  const Objective obj = [&](const Vector& theta) {
    const double fy = model.density(theta, y);
    if (beta == 0.0) {
      if (fy <= 0.0) {
        throw NumericalError("population_functional: log of zero density");
      }
      return -((1.0 - eps) * cross(theta) + eps * std::log(fy));
    }
    double first;
    if (auto cf = model.density_power_integral(theta, beta)) {
      first = *cf;
    } else if (model.obs_dim() == 1) {
      first = integrate(
          [&](double x) { return std::pow(model.density(theta, {x}), 1.0 + beta); },
          model.support(0), 1e-11);
    } else {
      first = integrate2d(
          [&](double x, double yy) {
            return std::pow(model.density(theta, {x, yy}), 1.0 + beta);
          },
          model.support(0), model.support(1), 1e-9);
    }
    return first - (1.0 + 1.0 / beta) *
                       ((1.0 - eps) * cross(theta) + eps * std::pow(fy, beta));
  };

  MinimizeOptions mo;
  mo.diameter_tol = 1e-10;
  Vector theta = minimize(obj, th0, model.param_bounds(), mo).x;

  // The simplex stalls once objective differences fall below the quadrature
  // noise floor (around 1e-8 in theta). Polish by Newton iteration on the
  // stationarity condition, whose terms integrate to full precision:
  //   psi_k = int f^{1+b} u_k - (1-eps) int g f^b u_k - eps f^b(y) u_k(y).
  const int p = model.param_dim();
  auto psi = [&](const Vector& t) {
    Vector out(p, 0.0);
    for (int k = 0; k < p; ++k) {
      auto comp = [&](const Vector& x) {
        const double f = model.density(t, x);
        if (f <= 0.0) return 0.0;
        return std::pow(f, beta) * model.score(t, x)[k] *
               (f - (1.0 - eps) * model.density(th0, x));
      };
      double v;
      if (model.obs_dim() == 1) {
        v = integrate([&](double x) { return comp({x}); }, model.support(0),
                      1e-11);
      } else {
        v = integrate2d([&](double x, double yy) { return comp({x, yy}); },
                        model.support(0), model.support(1), 1e-9);
      }
      out[k] = v - eps * std::pow(model.density(t, y), beta) *
                       model.score(t, y)[k];
    }
    return out;
  };
  const BoxBounds bounds = model.param_bounds();
  try {
    for (int it = 0; it < 4; ++it) {
      const Vector r = psi(theta);
      double rn = 0.0;
      for (int k = 0; k < p; ++k) rn = std::max(rn, std::abs(r[k]));
      if (rn < 1e-13) break;
      Matrix jac(p, p);
      const double h = 1e-6;
      for (int k = 0; k < p; ++k) {
        Vector tp = theta, tm = theta;
        tp[k] += h;
        tm[k] -= h;
        const Vector rp = psi(tp), rm = psi(tm);
        for (int i = 0; i < p; ++i) jac(i, k) = (rp[i] - rm[i]) / (2.0 * h);
      }
      for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
          jac(i, j) = jac(j, i) = 0.5 * (jac(i, j) + jac(j, i));
      const Vector step = cholesky_solve(cholesky(jac, "psi jacobian"), r);
      for (int k = 0; k < p; ++k) {
        theta[k] = std::min(std::max(theta[k] - step[k], bounds.lower[k]),
                            bounds.upper[k]);
      }
    }
  } catch (const NumericalError&) {
    // Keep the simplex solution when the polish cannot proceed.
  }
  return theta;
}

}  // namespace rw
