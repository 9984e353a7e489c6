#include "robustwald/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rw {
namespace {

Vector clamp_to_box(Vector x, const BoxBounds& b) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!b.lower.empty()) x[i] = std::max(x[i], b.lower[i]);
    if (!b.upper.empty()) x[i] = std::min(x[i], b.upper[i]);
  }
  return x;
}

double checked_eval(const Objective& f, const Vector& x) {
  const double v = f(x);
  if (std::isnan(v)) {
    throw NumericalError("minimize: objective evaluated to NaN");
  }
  return v;
}

double scaled_diameter(const std::vector<Vector>& simplex) {
  double diam = 0.0;
  const Vector& base = simplex[0];
  for (std::size_t k = 1; k < simplex.size(); ++k) {
    for (std::size_t i = 0; i < base.size(); ++i) {
      const double scale = std::max(1.0, std::abs(base[i]));
      diam = std::max(diam, std::abs(simplex[k][i] - base[i]) / scale);
    }
  }
  return diam;
}

std::string point_string(const Vector& x) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  os << ")";
  return os.str();
}

}  // namespace

MinimizeResult nelder_mead(const Objective& f, const Vector& init,
                           const BoxBounds& bounds, const MinimizeOptions& opts) {
  const std::size_t n = init.size();
  std::vector<Vector> simplex;
  simplex.push_back(clamp_to_box(init, bounds));
  for (std::size_t i = 0; i < n; ++i) {
    Vector v = simplex[0];
    const double step = opts.init_step * std::max(1.0, std::abs(v[i]));
    v[i] += step;
    v = clamp_to_box(v, bounds);
    if (v == simplex[0]) v[i] = simplex[0][i] - step;  // flipped at a bound
    simplex.push_back(clamp_to_box(v, bounds));
  }
  std::vector<double> fv(n + 1);
  for (std::size_t k = 0; k <= n; ++k) fv[k] = checked_eval(f, simplex[k]);

  auto order = [&]() {
    std::vector<std::size_t> idx(n + 1);
    for (std::size_t k = 0; k <= n; ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    std::vector<Vector> s2(n + 1);
    std::vector<double> f2(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      s2[k] = simplex[idx[k]];
      f2[k] = fv[idx[k]];
    }
    simplex.swap(s2);
    fv.swap(f2);
  };

  int iter = 0;
  for (; iter < opts.max_iter; ++iter) {
    order();
    if (scaled_diameter(simplex) < opts.diameter_tol) {
      return {simplex[0], fv[0], iter};
    }
    Vector centroid(n, 0.0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k][i] / n;

    auto blend = [&](double t) {
      Vector p(n);
      for (std::size_t i = 0; i < n; ++i)
        p[i] = centroid[i] + t * (simplex[n][i] - centroid[i]);
      return clamp_to_box(p, bounds);
    };

    const Vector xr = blend(-1.0);
    const double fr = checked_eval(f, xr);
    if (fr < fv[0]) {
      const Vector xe = blend(-2.0);
      const double fe = checked_eval(f, xe);
      if (fe < fr) {
        simplex[n] = xe;
        fv[n] = fe;
      } else {
        simplex[n] = xr;
        fv[n] = fr;
      }
      continue;
    }
    if (fr < fv[n - 1]) {
      simplex[n] = xr;
      fv[n] = fr;
      continue;
    }
    const Vector xc = blend(fr < fv[n] ? -0.5 : 0.5);
    const double fc = checked_eval(f, xc);
    if (fc < std::min(fr, fv[n])) {
      simplex[n] = xc;
      fv[n] = fc;
      continue;
    }
    // Shrink toward the best vertex.
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t i = 0; i < n; ++i)
        simplex[k][i] = simplex[0][i] + 0.5 * (simplex[k][i] - simplex[0][i]);
      simplex[k] = clamp_to_box(simplex[k], bounds);
      fv[k] = checked_eval(f, simplex[k]);
    }
  }
  order();
  throw NumericalError("minimize: iteration budget exceeded; best point " +
                       point_string(simplex[0]));
}

double golden_section(const std::function<double(double)>& f, double lo, double hi,
                      double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < 400 && (b - a) > tol * (1.0 + std::abs(a) + std::abs(b)); ++i) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

MinimizeResult minimize(const Objective& f, const Vector& init,
                        const BoxBounds& bounds, const MinimizeOptions& opts) {
  std::vector<Vector> starts{init};
  starts.insert(starts.end(), opts.extra_starts.begin(), opts.extra_starts.end());
  MinimizeResult best;
  bool have = false;
  for (const Vector& s : starts) {
    MinimizeResult r = nelder_mead(f, s, bounds, opts);
    if (!have || r.value < best.value) {
      best = r;
      have = true;
    }
  }
  if (init.size() == 1) {
    // Polish with a bracketed golden-section pass around the simplex result.
    const double x0 = best.x[0];
    const double h = std::max(1e-6, 1e-3 * std::abs(x0));
    double lo = x0 - h, hi = x0 + h;
    if (!bounds.lower.empty()) lo = std::max(lo, bounds.lower[0]);
    if (!bounds.upper.empty()) hi = std::min(hi, bounds.upper[0]);
    auto f1 = [&f](double x) { return f(Vector{x}); };
    const double xg = golden_section(f1, lo, hi);
    const double fg = checked_eval(f, Vector{xg});
    if (fg < best.value) {
      best.x[0] = xg;
      best.value = fg;
    }
  }
  return best;
}

}  // namespace rw
