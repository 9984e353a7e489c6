#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "robustwald/chisq.hpp"
#include "robustwald/linalg.hpp"
#include "robustwald/optimize.hpp"
#include "robustwald/quadrature.hpp"

using namespace rw;

namespace {
constexpr double kPi = 3.14159265358979323846;
double phi(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi); }
}  // namespace

TEST_CASE("quadrature on finite and infinite domains") {
  CHECK(integrate([](double x) { return x * x; }, {0.0, 1.0}) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(integrate(phi, {-kInf, kInf}) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(integrate([](double x) { return std::exp(-x); }, {0.0, kInf}) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(integrate([](double x) { return x * x * phi(x); }, {-kInf, kInf}) ==
        doctest::Approx(1.0).epsilon(1e-10));
  // Semi-infinite with a finite left endpoint away from zero.
  CHECK(integrate([](double x) { return std::exp(-(x - 2.0)); }, {2.0, kInf}) ==
        doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("quadrature rejects nonsense tolerances") {
  CHECK_THROWS_AS(integrate(phi, {-kInf, kInf}, 0.5), NumericalError);
  CHECK_THROWS_AS(integrate(phi, {-kInf, kInf}, -1.0), NumericalError);
}

TEST_CASE("2d quadrature") {
  const double v = integrate2d(
      [](double x, double y) { return phi(x) * phi(y); }, {-kInf, kInf},
      {-kInf, kInf});
  CHECK(v == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("chi-square distribution functions") {
  CHECK(chisq_quantile(0.05, 1) == doctest::Approx(3.841458820694124).epsilon(1e-10));
  CHECK(chisq_quantile(0.05, 5) == doctest::Approx(11.070497693516351).epsilon(1e-10));
  CHECK(chisq_sf(7.3, 3) == doctest::Approx(0.06292623645904312).epsilon(1e-10));
  CHECK(chisq_sf(chisq_quantile(0.05, 4), 4) == doctest::Approx(0.05).epsilon(1e-10));
  CHECK(normal_cdf(1.96) == doctest::Approx(0.9750021048517795).epsilon(1e-12));
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5));
}

TEST_CASE("noncentral chi-square") {
  const double c1 = chisq_quantile(0.05, 1);
  // Zero noncentrality reduces to the central case.
  CHECK(noncentral_chisq_sf(c1, {1, 0.0}) == doctest::Approx(0.05).epsilon(1e-10));
  // Reference values: scipy.stats.ncx2.sf.
  CHECK(noncentral_chisq_sf(c1, {1, 4.0}) ==
        doctest::Approx(0.5160052739761747).epsilon(1e-10));
  CHECK(noncentral_chisq_sf(chisq_quantile(0.05, 5), {5, 2.5}) ==
        doctest::Approx(0.18897592795127685).epsilon(1e-10));
  // A noncentrality so large the Poisson mass cannot be accumulated.
  CHECK_THROWS_AS(noncentral_chisq_sf(c1, {1, 1e9}), NumericalError);
}

TEST_CASE("k_star kernel is twice the noncentrality derivative") {
  // Reference values: 2x central differences of scipy.stats.ncx2.sf, alpha=0.05.
  CHECK(k_star(0.0, 1, 0.05) == doctest::Approx(2 * 0.11455024010592618).epsilon(1e-6));
  CHECK(k_star(1.7, 1, 0.05) == doctest::Approx(2 * 0.12261604306895713).epsilon(1e-6));
  CHECK(k_star(4.0, 1, 0.05) == doctest::Approx(2 * 0.09961643288036726).epsilon(1e-6));
  CHECK(k_star(2.0, 3, 0.05) == doctest::Approx(2 * 0.08028425635409064).epsilon(1e-6));
  // Internal consistency against our own noncentral survival function.
  for (double s : {0.3, 2.7, 6.0}) {
    const double h = 1e-6;
    const double c = chisq_quantile(0.05, 2);
    const double fd = (noncentral_chisq_sf(c, {2, s + h}) -
                       noncentral_chisq_sf(c, {2, s - h})) /
                      (2.0 * h);
    CHECK(k_star(s, 2, 0.05) == doctest::Approx(2.0 * fd).epsilon(1e-5));
  }
}

TEST_CASE("cholesky, inverse, quadratic form") {
  Matrix a(2, 2);
  a(0, 0) = 4.0;
  a(0, 1) = a(1, 0) = 2.0;
  a(1, 1) = 3.0;
  const Matrix l = cholesky(a);
  CHECK(l(0, 0) == doctest::Approx(2.0));
  CHECK(l(1, 0) == doctest::Approx(1.0));
  CHECK(l(1, 1) == doctest::Approx(std::sqrt(2.0)));
  const Matrix inv = invert_spd(a);
  const Matrix prod = a * inv;
  CHECK(prod(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(prod(0, 1) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(quad_form(a, {1.0, -1.0}) == doctest::Approx(3.0));

  Matrix bad(2, 2);
  bad(0, 0) = 1.0;
  bad(0, 1) = bad(1, 0) = 2.0;
  bad(1, 1) = 1.0;
  CHECK_THROWS_AS(cholesky(bad), NumericalError);
}

TEST_CASE("symmetric and generalized eigenvalues") {
  Matrix d = Matrix::diag({3.0, 1.0, 2.0});
  const auto ev = symmetric_eigenvalues(d);
  CHECK(ev[0] == doctest::Approx(3.0));
  CHECK(ev[1] == doctest::Approx(2.0));
  CHECK(ev[2] == doctest::Approx(1.0));

  // Identity pencil: eigenvalues all one.
  Matrix a(2, 2);
  a(0, 0) = 2.0;
  a(0, 1) = a(1, 0) = 0.5;
  a(1, 1) = 1.5;
  const auto gev = generalized_eigenvalues(a, a);
  CHECK(gev[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(gev[1] == doctest::Approx(1.0).epsilon(1e-12));

  // Diagonal pencil with known ratios.
  const auto gev2 =
      generalized_eigenvalues(Matrix::diag({6.0, 1.0}), Matrix::diag({2.0, 4.0}));
  CHECK(gev2[0] == doctest::Approx(3.0));
  CHECK(gev2[1] == doctest::Approx(0.25));
}

TEST_CASE("nelder-mead and golden section") {
  const Objective quad = [](const Vector& x) {
    return (x[0] - 1.5) * (x[0] - 1.5) + 2.0 * (x[1] + 0.5) * (x[1] + 0.5);
  };
  const MinimizeResult r = minimize(quad, {0.0, 0.0}, {});
  CHECK(r.x[0] == doctest::Approx(1.5).epsilon(1e-5));
  CHECK(r.x[1] == doctest::Approx(-0.5).epsilon(1e-5));

  const Objective rosen = [](const Vector& x) {
    const double a = 1.0 - x[0];
    const double b = x[1] - x[0] * x[0];
    return a * a + 100.0 * b * b;
  };
  const MinimizeResult r2 = minimize(rosen, {-1.2, 1.0}, {});
  CHECK(r2.x[0] == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(r2.x[1] == doctest::Approx(1.0).epsilon(1e-4));

  const double xg = golden_section(
      [](double x) { return std::cos(x); }, 2.0, 4.5);
  CHECK(xg == doctest::Approx(kPi).epsilon(1e-8));

  // Box bound is respected.
  const MinimizeResult r3 =
      minimize(quad, {0.0, 0.0}, {{-10.0, 0.0}, {10.0, 10.0}});
  CHECK(r3.x[1] == doctest::Approx(0.0).epsilon(1e-6));

  CHECK_THROWS_AS(
      minimize([](const Vector&) { return std::nan(""); }, {0.0}, {}),
      NumericalError);
}
