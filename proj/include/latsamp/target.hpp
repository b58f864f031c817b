#pragma once

#include "latsamp/common.hpp"
#include "latsamp/potentials.hpp"

namespace latsamp {

// log(1 + e^a) without overflow: a for a > 35, e^a for a < -35.
double softplus(double a);

// -phi(x). Throws std::domain_error when phi is not finite at x.
double log_pi_unnorm(const Potential& p, const Vec& x);

// Smoothed acceptance target: log 2 - phi(xbar) - softplus(2 (x - xbar).grad phi(xbar))
// with xbar the coordinate-wise rounding of x. Integrating its density over the unit
// cube centered at any integer point recovers exp(-phi) there, so rounded chain
// states follow the lattice law. Throws std::domain_error on non-finite intermediates.
double log_pi_bar_unnorm(const Potential& p, const Vec& x);

// -phi([x]): the piecewise-constant alternative kept for the degeneracy probe.
double piecewise_constant_log_target(const Potential& p, const Vec& x);

// Pairs a potential with the smoothed target; the form samplers consume.
struct SigmoidTarget {
  const Potential* pot;

  explicit SigmoidTarget(const Potential& p) : pot(&p) {}
  double log_pi(const Vec& x) const { return log_pi_unnorm(*pot, x); }
  double log_pi_bar(const Vec& x) const { return log_pi_bar_unnorm(*pot, x); }
  int dim() const { return pot->dim; }
};

}  // namespace latsamp
