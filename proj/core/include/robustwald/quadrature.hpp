#ifndef ROBUSTWALD_QUADRATURE_HPP
#define ROBUSTWALD_QUADRATURE_HPP

#include <functional>
#include <limits>

#include "robustwald/errors.hpp"

namespace rw {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct IntegrationDomain {
  double lower;  // may be -inf
  double upper;  // may be +inf
};

struct QuadratureError : NumericalError {
  QuadratureError(const std::string& msg, double best, double bound)
      : NumericalError(msg), best_estimate(best), error_bound(bound) {}
  double best_estimate;
  double error_bound;
};

// Adaptive Gauss-Kronrod 7-15 integration. Infinite endpoints are mapped to a
// finite interval by rational transforms before subdivision. Throws
// QuadratureError (carrying the best estimate) when the subdivision budget is
// exhausted without meeting the tolerance.
double integrate(const std::function<double(double)>& f, IntegrationDomain domain,
                 double rel_tol = 1e-10);

// Iterated 1-D integration over a rectangle, used for bivariate models.
double integrate2d(const std::function<double(double, double)>& f,
                   IntegrationDomain dx, IntegrationDomain dy,
                   double rel_tol = 1e-9);

}  // namespace rw

#endif
