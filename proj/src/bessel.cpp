#include "latsamp/bessel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace latsamp {
namespace {

constexpr double kMaxU = 50.0;
constexpr double kMaxNu = 15.0;
constexpr double kPi = 3.14159265358979323846;

void check_args(double nu, double u) {
  const double two_nu = 2.0 * nu;
  if (!(nu >= 0.0) || nu > kMaxNu || two_nu != std::floor(two_nu))
    throw std::domain_error("bessel_j: order must be a multiple of 1/2 in [0, 15]");
  if (!(u >= 0.0) || u > kMaxU)
    throw std::domain_error("bessel_j: argument must lie in [0, 50]");
}

bool is_half_order(double nu) { return std::floor(nu) != nu; }

// Ascending series sum_k (-1)^k (u/2)^(nu+2k) / (k! Gamma(nu+k+1)).
// At u = 12 the worst cancellation is ~4e3 in the largest term, keeping the
// absolute error near 4e-13.
double series_j(double nu, double u) {
  const double q = 0.25 * u * u;
  double term = std::pow(0.5 * u, nu) / std::tgamma(nu + 1.0);
  double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= -q / (k * (nu + k));
    sum += term;
    if (k > 4 && std::abs(term) < 1e-18 * (std::abs(sum) + 1e-30)) break;
  }
  return sum;
}

// J_{1/2} and J_{3/2} in closed form, then upward recurrence. Stable in the
// oscillatory regime u >= nu where both independent solutions stay bounded.
double half_order_upward(double nu, double u) {
  const double pref = std::sqrt(2.0 / (kPi * u));
  double a = pref * std::sin(u);
  if (nu == 0.5) return a;
  double b = pref * (std::sin(u) / u - std::cos(u));
  const int k = static_cast<int>(nu - 0.5);
  for (int i = 1; i < k; ++i) {
    const double c = (2.0 * (i + 0.5) / u) * b - a;
    a = b;
    b = c;
  }
  return b;
}

// Downward recurrence from a high starting order with arbitrary scale, then
// normalization by J_0 + 2 sum_{k even} J_k = 1. Used for integer orders at
// large u where the ascending series cancels too hard.
double integer_downward(int n, double u) {
  const int start = std::max(n, static_cast<int>(u)) + 40;
  double above = 0.0;
  double here = 1e-300;
  double target = (start == n) ? here : 0.0;
  double norm = (start % 2 == 0) ? 2.0 * here : 0.0;
  for (int m = start; m >= 1; --m) {
    const double below = (2.0 * m / u) * here - above;
    above = here;
    here = below;
    const int order = m - 1;
    if (order == n) target = here;
    if (order == 0)
      norm += here;
    else if (order % 2 == 0)
      norm += 2.0 * here;
    if (std::abs(here) > 1e250) {
      above *= 1e-250;
      here *= 1e-250;
      target *= 1e-250;
      norm *= 1e-250;
    }
  }
  return target / norm;
}

}  // namespace

double bessel_j(double nu, double u) {
  check_args(nu, u);
  if (u == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  if (is_half_order(nu)) {
    if (u >= nu) return half_order_upward(nu, u);
    return series_j(nu, u);
  }
  if (u <= 12.0) return series_j(nu, u);
  return integer_downward(static_cast<int>(nu), u);
}

double omega_d(int d, double u) {
  if (d < 2 || d > 32) throw std::domain_error("omega_d: dimension must lie in [2, 32]");
  const double nu = 0.5 * (d - 2);
  if (u < 1e-6) {
    // two series terms; the k=2 term is below 1e-26 here
    return 1.0 / std::tgamma(0.5 * d) - 0.25 * u * u / std::tgamma(0.5 * d + 1.0);
  }
  if (d == 2) return bessel_j(0.0, u);
  return std::pow(2.0 / u, nu) * bessel_j(nu, u);
}

namespace {

// Scans for a sign change from `from` in 0.25 steps (zeros of J_nu are separated
// by more than pi), then bisects to width 1e-13.
double bracketed_zero(double nu, double from) {
  const double step = 0.25;
  double a = from;
  double fa = bessel_j(nu, a);
  for (double b = a + step; b <= kMaxU; b += step) {
    const double fb = bessel_j(nu, b);
    if (fa == 0.0) return a;
    if (fa * fb < 0.0) {
      double lo = a, hi = b, flo = fa;
      while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = bessel_j(nu, mid);
        if (fmid == 0.0) return mid;
        if (flo * fmid < 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fmid;
        }
      }
      return 0.5 * (lo + hi);
    }
    a = b;
    fa = fb;
  }
  throw std::runtime_error("bessel zero: no sign change before u=50 for order " + std::to_string(nu));
}

}  // namespace

double first_zero(double nu) {
  if (!(nu >= 0.0) || nu > 12.0 || 2.0 * nu != std::floor(2.0 * nu))
    throw std::domain_error("first_zero: order must be a multiple of 1/2 in [0, 12]");
  return bracketed_zero(nu, nu + 0.1);
}

double second_zero(double nu) {
  const double j1 = first_zero(nu);
  return bracketed_zero(nu, j1 + 0.1);
}

}  // namespace latsamp
