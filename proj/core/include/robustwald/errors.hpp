#ifndef ROBUSTWALD_ERRORS_HPP
#define ROBUSTWALD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rw {

// Bad invocation or configuration (CLI exit code 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid or inconsistent input data (CLI exit code 2).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical failure: quadrature, optimization, linear algebra (CLI exit code 3).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rw

#endif
