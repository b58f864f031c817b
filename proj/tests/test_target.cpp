#include "doctest.h"
#include "latsamp/target.hpp"

#include <cmath>

#include "latsamp/quadrature.hpp"
#include "latsamp/rng.hpp"

using namespace latsamp;

TEST_SUITE("target") {

TEST_CASE("softplus matches the naive formula where that does not overflow") {
  for (double a = -30.0; a <= 30.0; a += 0.01) {
    const double naive = std::log(1.0 + std::exp(a));
    CHECK(std::abs(softplus(a) - naive) <= 1e-10 * std::max(1.0, naive));
  }
  CHECK(softplus(100.0) == 100.0);
  CHECK(softplus(-100.0) == doctest::Approx(std::exp(-100.0)));
}

TEST_CASE("log_pi values for the isotropic gaussian") {
  IsotropicGaussianPotential p(2, 1.0);
  Vec x(2);
  x << 0, 0;
  CHECK(log_pi_unnorm(p, x) == 0.0);
  x << 1, 1;
  CHECK(log_pi_unnorm(p, x) == doctest::Approx(-1.0));
}

TEST_CASE("smoothed target collapses at integer points and flat cubes") {
  IsotropicGaussianPotential p(1, 1.0);
  Vec x(1);
  // integer input: sigmoid argument 0, log 2 and softplus(0) cancel
  x << 3.0;
  CHECK(log_pi_bar_unnorm(p, x) == doctest::Approx(-p.value(x)).epsilon(1e-14));
  // zero gradient at the rounded point: flat on the whole central cube
  x << 0.3;
  CHECK(log_pi_bar_unnorm(p, x) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("smoothed target frozen value off the flat cube") {
  IsotropicGaussianPotential p(1, 1.0);
  Vec x(1);
  x << 1.3;
  // log 2 - 1/2 - log(1 + e^{0.6})
  CHECK(log_pi_bar_unnorm(p, x) == doctest::Approx(-0.8443407699259403).epsilon(1e-14));
}

TEST_CASE("unit-cube integral of the smoothed density recovers the lattice weight") {
  IsotropicGaussianPotential p(1, 1.0);
  for (int z = -5; z <= 5; ++z) {
    const double integral = gl32_integrate(
        [&](double x) {
          Vec v(1);
          v << x;
          return std::exp(log_pi_bar_unnorm(p, v));
        },
        z - 0.5, z + 0.5);
    const double want = std::exp(-0.5 * z * z);
    CHECK(std::abs(integral - want) <= 1e-8 * want);
  }
}

TEST_CASE("ratio bound against the smoothed target, 1-D") {
  IsotropicGaussianPotential p(1, 1.0);
  Rng rng(21);
  const double bound = std::exp(-1.0 / 8.0);
  double worst = 1e300;
  for (int i = 0; i < 20000; ++i) {
    Vec x(1);
    x << -5.0 + 10.0 * rng.uniform();
    const Vec xb = round_nearest_vec(x);
    const double ratio = std::exp(-p.value(x)) * (1.0 + std::exp(2.0 * (x - xb).dot(p.grad(xb)))) /
                         (2.0 * std::exp(-p.value(xb)));
    worst = std::min(worst, ratio);
    CHECK(ratio >= bound);
  }
  CHECK(worst < 1.0);  // the bound actually bites below 1
}

TEST_CASE("piecewise-constant target: cube constancy") {
  IsotropicGaussianPotential p(1, 1.0);
  Vec x(1);
  x << 0.49;
  CHECK(piecewise_constant_log_target(p, x) == 0.0);
  x << 0.51;
  CHECK(piecewise_constant_log_target(p, x) == doctest::Approx(-0.5));
  Vec a(1), b(1);
  a << 2.1;
  b << 2.4;
  CHECK(piecewise_constant_log_target(p, a) == piecewise_constant_log_target(p, b));
}

TEST_CASE("acceptance pieces are invariant to constant potential shifts") {
  // phi and phi + 17.3 give identical acceptance log-ratios
  struct Shifted final : Potential {
    const Potential* base;
    double shift;
    Shifted(const Potential& b, double s) : Potential(b.dim, b.smoothness_L), base(&b), shift(s) {}
    double value(const Vec& x) const override { return base->value(x) + shift; }
    Vec grad(const Vec& x) const override { return base->grad(x); }
  };
  IsotropicGaussianPotential p(2, 1.0);
  Shifted q(p, 17.3);
  Rng rng(33);
  for (int i = 0; i < 200; ++i) {
    Vec x(2), y(2);
    for (int k = 0; k < 2; ++k) {
      x[k] = 3 * rng.normal();
      y[k] = 3 * rng.normal();
    }
    const double lp = (log_pi_bar_unnorm(p, y) + log_pi_unnorm(p, x)) -
                      (log_pi_bar_unnorm(p, x) + log_pi_unnorm(p, y));
    const double lq = (log_pi_bar_unnorm(q, y) + log_pi_unnorm(q, x)) -
                      (log_pi_bar_unnorm(q, x) + log_pi_unnorm(q, y));
    CHECK(lp == doctest::Approx(lq).epsilon(1e-11));
  }
}

}  // TEST_SUITE
