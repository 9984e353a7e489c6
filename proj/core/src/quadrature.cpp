#include "robustwald/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace rw {
namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
  double a, b;
  double integral;
  double error;
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);
  double kronrod = 0.0;
  for (int i = 0; i < 7; ++i) kronrod += kWgk[i] * (fv[i] + fv[14 - i]);
  kronrod += kWgk[7] * fv[7];
  kronrod *= h;
  double gauss = 0.0;
  // Gauss nodes sit at the odd Kronrod indices 1,3,5 and the center.
  for (int i = 0; i < 3; ++i) gauss += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  gauss += kWg[3] * fv[7];
  gauss *= h;
  double err = std::abs(kronrod - gauss);
  // QUADPACK-style sharpening of the raw difference estimate.
  if (err > 0.0) err = std::pow(200.0 * err, 1.5);
  if (!std::isfinite(kronrod)) {
    throw NumericalError("quadrature: non-finite integrand value");
  }
  return {a, b, kronrod, err};
}

struct PanelCompare {
  bool operator()(const Panel& x, const Panel& y) const {
    return x.error < y.error;
  }
};

double adaptive_finite(const std::function<double(double)>& f, double a, double b,
                       double rel_tol, int initial_splits = 1) {
  constexpr int kMaxPanels = 4000;
  constexpr double kAbsFloor = 1e-13;
  std::priority_queue<Panel, std::vector<Panel>, PanelCompare> heap;
  double total = 0.0;
  double total_err = 0.0;
  for (int i = 0; i < initial_splits; ++i) {
    const double lo = a + (b - a) * i / initial_splits;
    const double hi = a + (b - a) * (i + 1) / initial_splits;
    Panel p = evaluate_panel(f, lo, hi);
    total += p.integral;
    total_err += p.error;
    heap.push(p);
  }
  int n_panels = initial_splits;
  while (total_err > std::max(rel_tol * std::abs(total), kAbsFloor)) {
    if (n_panels >= kMaxPanels) {
      throw QuadratureError("quadrature: subdivision budget exhausted", total,
                            total_err);
    }
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = evaluate_panel(f, worst.a, mid);
    Panel right = evaluate_panel(f, mid, worst.b);
    total += left.integral + right.integral - worst.integral;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++n_panels;
  }
  return total;
}

// Sharply peaked integrands (a regression component with a small fitted
// scale, say) can hide inside one panel of the compactifying transform.
// Retry once with a fine initial partition before giving up.
double adaptive_with_retry(const std::function<double(double)>& f, double a,
                           double b, double rel_tol) {
  try {
    return adaptive_finite(f, a, b, rel_tol);
  } catch (const QuadratureError&) {
    return adaptive_finite(f, a, b, rel_tol, 64);
  }
}

}  // namespace

double integrate(const std::function<double(double)>& f, IntegrationDomain domain,
                 double rel_tol) {
  if (!(domain.lower < domain.upper)) {
    throw NumericalError("quadrature: empty integration domain");
  }
  if (!(rel_tol > 0.0) || rel_tol > 1e-3) {
    throw NumericalError("quadrature: rel_tol must lie in (0, 1e-3]");
  }
  const bool lo_inf = std::isinf(domain.lower);
  const bool hi_inf = std::isinf(domain.upper);
  if (!lo_inf && !hi_inf) {
    return adaptive_with_retry(f, domain.lower, domain.upper, rel_tol);
  }
  if (lo_inf && hi_inf) {
    // x = t / (1 - t^2), t in (-1, 1)
    auto g = [&f](double t) {
      const double q = 1.0 - t * t;
      const double x = t / q;
      const double jac = (1.0 + t * t) / (q * q);
      return f(x) * jac;
    };
    return adaptive_with_retry(g, -1.0 + 1e-14, 1.0 - 1e-14, rel_tol);
  }
  if (!lo_inf && hi_inf) {
    // x = a + t / (1 - t), t in (0, 1)
    const double a = domain.lower;
    auto g = [&f, a](double t) {
      const double q = 1.0 - t;
      const double x = a + t / q;
      return f(x) / (q * q);
    };
    return adaptive_with_retry(g, 1e-14, 1.0 - 1e-14, rel_tol);
  }
  // x = b - t / (1 - t)
  const double b = domain.upper;
  auto g = [&f, b](double t) {
    const double q = 1.0 - t;
    const double x = b - t / q;
    return f(x) / (q * q);
  };
  return adaptive_with_retry(g, 1e-14, 1.0 - 1e-14, rel_tol);
}

double integrate2d(const std::function<double(double, double)>& f,
                   IntegrationDomain dx, IntegrationDomain dy, double rel_tol) {
  auto outer = [&](double x) {
    auto inner = [&f, x](double y) { return f(x, y); };
    return integrate(inner, dy, rel_tol);
  };
  return integrate(outer, dx, rel_tol);
}

}  // namespace rw
