#pragma once

namespace latsamp {

// J_nu(u), nu a multiple of 1/2 in [0, 15], u in [0, 50]; absolute error <= 1e-10.
// Ascending series for u <= 12 (all orders) and for half-integer orders below the
// oscillatory regime; closed trigonometric forms with upward recurrence for
// half-integer orders once u >= nu; downward recurrence normalized by the
// even-order sum for integer orders at large u.
double bessel_j(double nu, double u);

// (2/u)^((d-2)/2) * J_{(d-2)/2}(u), with the analytic limit 1/Gamma(d/2) at u = 0.
// Supported for 2 <= d <= 32 within the bessel_j argument range.
double omega_d(int d, double u);

// First and second positive zeros of J_nu, nu in [0, 12]; absolute error <= 1e-10.
double first_zero(double nu);
double second_zero(double nu);

}  // namespace latsamp
