#include "robustwald/model.hpp"

#include <cmath>

namespace rw {
namespace {

// Representative interior points of the observation space used for the
// finite-difference checks.
std::vector<Vector> probe_points(const ParametricModel& model) {
  std::vector<Vector> pts;
  const int d = model.obs_dim();
  std::vector<std::vector<double>> coords(d);
  for (int c = 0; c < d; ++c) {
    const IntegrationDomain dom = model.support(c);
    if (std::isinf(dom.lower)) {
      coords[c] = {-1.7, -0.3, 0.9, 2.1};
    } else {
      const double base = dom.lower;
      coords[c] = {base + 0.2, base + 0.8, base + 1.9, base + 3.1};
    }
  }
  if (d == 1) {
    for (double v : coords[0]) pts.push_back({v});
  } else {
    for (std::size_t i = 0; i < coords[0].size(); ++i)
      pts.push_back({coords[0][i], coords[1][coords[1].size() - 1 - i]});
  }
  return pts;
}

}  // namespace

ValidationReport validate_model(const ParametricModel& model, const Vector& theta,
                                double tol) {
  ValidationReport rep;
  const int p = model.param_dim();
  const int comps = std::min(model.component_count(), 3);

  for (int comp = 0; comp < comps; ++comp) {
    double mass;
    if (model.obs_dim() == 1) {
      mass = integrate([&](double x) { return model.density(theta, {x}, comp); },
                       model.support(0), 1e-10);
    } else {
      mass = integrate2d(
          [&](double x, double y) { return model.density(theta, {x, y}, comp); },
          model.support(0), model.support(1), 1e-9);
    }
    rep.normalization_residual =
        std::max(rep.normalization_residual, std::abs(mass - 1.0));
  }

  for (int comp = 0; comp < comps; ++comp) {
    for (const Vector& x : probe_points(model)) {
      const Vector u = model.score(theta, x, comp);
      const Matrix im = model.info(theta, x, comp);
      for (int i = 0; i < p; ++i) {
        const double h = 1e-6 * std::max(1.0, std::abs(theta[i]));
        Vector tp = theta, tm = theta;
        tp[i] += h;
        tm[i] -= h;
        const double fd_score = (std::log(model.density(tp, x, comp)) -
                                 std::log(model.density(tm, x, comp))) /
                                (2.0 * h);
        rep.score_residual = std::max(rep.score_residual, std::abs(fd_score - u[i]));
        const Vector up = model.score(tp, x, comp);
        const Vector um = model.score(tm, x, comp);
        for (int j = 0; j < p; ++j) {
          const double fd_info = -(up[j] - um[j]) / (2.0 * h);
          rep.info_residual =
              std::max(rep.info_residual, std::abs(fd_info - im(j, i)));
        }
      }
    }
  }

  rep.passed = true;
  if (rep.normalization_residual > tol) {
    rep.passed = false;
    rep.failure = "density normalization residual exceeds tolerance";
  } else if (rep.score_residual > tol) {
    rep.passed = false;
    rep.failure = "score finite-difference residual exceeds tolerance";
  } else if (rep.info_residual > tol) {
    rep.passed = false;
    rep.failure = "information-matrix finite-difference residual exceeds tolerance";
  }
  return rep;
}

}  // namespace rw
