#pragma once

#include <optional>

#include "latsamp/common.hpp"
#include "latsamp/lattice.hpp"

namespace latsamp {

// Negative log of an unnormalized density: pi(x) proportional to exp(-value(x)).
// smoothness_L carries the Lipschitz constant of grad when one is known.
struct Potential {
  int dim;
  std::optional<double> smoothness_L;

  virtual double value(const Vec& x) const = 0;
  virtual Vec grad(const Vec& x) const = 0;
  virtual ~Potential() = default;

 protected:
  Potential(int d, std::optional<double> L) : dim(d), smoothness_L(L) {}
};

// phi(x) = ||x - c||^2 / (2 sigma2); grad is (1/sigma2)-Lipschitz.
struct IsotropicGaussianPotential final : Potential {
  double sigma2;
  Vec center;

  IsotropicGaussianPotential(int d, double sigma2_, Vec center_);
  IsotropicGaussianPotential(int d, double sigma2_);

  double value(const Vec& x) const override;
  Vec grad(const Vec& x) const override;
};

// phi(x) = ||B x||^2 / (2 sigma2); grad is (lambda_max(B^T B)/sigma2)-Lipschitz.
struct PullbackGaussianPotential final : Potential {
  GeneratorMatrix basis;
  double sigma2;
  Mat btb;

  PullbackGaussianPotential(GeneratorMatrix B, double sigma2_);

  double value(const Vec& x) const override;
  Vec grad(const Vec& x) const override;
};

// Compact-support radial density (M * (Omega_d(u) / (j^2 - u^2))^2 with
// u = ||x|| / (2 rho) and j the first zero of J_{(d-2)/2}). The 0/0 point at
// u = j is removable and evaluated by a two-term series in a 1e-6 window.
// Evaluation is supported for u <= 45 (inside the Bessel range); the potential
// returns +infinity beyond, and at the density's true interior zeros. Not
// L-smooth: the gradient diverges at those zeros, so smoothness_L is absent.
struct PerfectSecurityPotential final : Potential {
  double rho;
  double j1;

  static constexpr double kMaxRadialArg = 45.0;

  PerfectSecurityPotential(int d, double rho_);

  double value(const Vec& x) const override;
  Vec grad(const Vec& x) const override;

  // log density at radial argument u, up to the normalization constant
  double log_density_radial(double u) const;
  double radial_arg(const Vec& x) const;
};

// 2 [log|Omega_d(u)| - log(j^2 - u^2)] at u = ||x|| / (2 rho), unnormalized.
// Throws std::domain_error when u exceeds the supported radial range.
double perfect_security_log_density(const PerfectSecurityPotential& p, const Vec& x);

// rho = sqrt(d) / (2 j_{(d-2)/2}), making the per-coordinate variance 1.
double perfect_security_rho_for_unit_variance(int d);

}  // namespace latsamp
