#ifndef ROBUSTWALD_OPTIMIZE_HPP
#define ROBUSTWALD_OPTIMIZE_HPP

#include <functional>
#include <vector>

#include "robustwald/errors.hpp"
#include "robustwald/linalg.hpp"

namespace rw {

struct BoxBounds {
  Vector lower;  // entries may be -inf
  Vector upper;  // entries may be +inf
};

struct MinimizeOptions {
  double diameter_tol = 1e-8;  // simplex diameter in scaled parameters
  int max_iter = 20000;
  double init_step = 0.25;
  // Extra starting points tried in addition to `init`; the best final value wins.
  std::vector<Vector> extra_starts;
};

struct MinimizeResult {
  Vector x;
  double value;
  int iterations;
};

using Objective = std::function<double(const Vector&)>;

// Derivative-free Nelder-Mead with box projection. Throws NumericalError on a
// NaN objective or when the iteration budget runs out (message carries the
// best point seen).
MinimizeResult nelder_mead(const Objective& f, const Vector& init,
                           const BoxBounds& bounds, const MinimizeOptions& opts = {});

// Golden-section search on a bracketing interval, for 1-D refinement.
double golden_section(const std::function<double(double)>& f, double lo, double hi,
                      double tol = 1e-12);

// Multi-start front-end: Nelder-Mead from every start, plus golden-section
// polish for one-dimensional problems.
MinimizeResult minimize(const Objective& f, const Vector& init,
                        const BoxBounds& bounds, const MinimizeOptions& opts = {});

}  // namespace rw

#endif
