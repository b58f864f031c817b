#include "latsamp/target.hpp"

#include <cmath>
#include <stdexcept>

namespace latsamp {

double softplus(double a) {
  if (a > 35.0) return a;
  if (a < -35.0) return std::exp(a);
  return std::log1p(std::exp(a));
}

double log_pi_unnorm(const Potential& p, const Vec& x) {
  const double phi = p.value(x);
  if (!std::isfinite(phi)) throw std::domain_error("log_pi_unnorm: potential not finite");
  return -phi;
}

double log_pi_bar_unnorm(const Potential& p, const Vec& x) {
  const Vec xbar = round_nearest_vec(x);
  const double phi_bar = p.value(xbar);
  if (!std::isfinite(phi_bar)) throw std::domain_error("log_pi_bar_unnorm: potential not finite at rounded point");
  const double a = 2.0 * (x - xbar).dot(p.grad(xbar));
  if (!std::isfinite(a)) throw std::domain_error("log_pi_bar_unnorm: non-finite sigmoid argument");
  return std::log(2.0) - phi_bar - softplus(a);
}

double piecewise_constant_log_target(const Potential& p, const Vec& x) {
  return -p.value(round_nearest_vec(x));
}

}  // namespace latsamp
