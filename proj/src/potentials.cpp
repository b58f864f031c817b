#include "latsamp/potentials.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "latsamp/bessel.hpp"

namespace latsamp {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_dim(const Potential& p, const Vec& x) {
  if (x.size() != p.dim) throw std::invalid_argument("potential: dimension mismatch");
}
}  // namespace

IsotropicGaussianPotential::IsotropicGaussianPotential(int d, double sigma2_, Vec center_)
    : Potential(d, 1.0 / sigma2_), sigma2(sigma2_), center(std::move(center_)) {
  if (d <= 0 || !(sigma2_ > 0.0)) throw std::invalid_argument("gaussian potential: bad parameters");
  if (center.size() != d) throw std::invalid_argument("gaussian potential: center dimension mismatch");
}

IsotropicGaussianPotential::IsotropicGaussianPotential(int d, double sigma2_)
    : IsotropicGaussianPotential(d, sigma2_, Vec::Zero(d)) {}

double IsotropicGaussianPotential::value(const Vec& x) const {
  check_dim(*this, x);
  return (x - center).squaredNorm() / (2.0 * sigma2);
}

Vec IsotropicGaussianPotential::grad(const Vec& x) const {
  check_dim(*this, x);
  return (x - center) / sigma2;
}

PullbackGaussianPotential::PullbackGaussianPotential(GeneratorMatrix B, double sigma2_)
    : Potential(B.dim, std::nullopt), basis(std::move(B)), sigma2(sigma2_) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("pullback potential: variance must be positive");
  btb = basis.entries.transpose() * basis.entries;
  Eigen::SelfAdjointEigenSolver<Mat> es(btb);
  smoothness_L = es.eigenvalues().maxCoeff() / sigma2;
}

double PullbackGaussianPotential::value(const Vec& x) const {
  check_dim(*this, x);
  return (basis.entries * x).squaredNorm() / (2.0 * sigma2);
}

Vec PullbackGaussianPotential::grad(const Vec& x) const {
  check_dim(*this, x);
  return (btb * x) / sigma2;
}

namespace {
double checked_first_zero(int d, double rho) {
  if (d < 2 || d > 26) throw std::invalid_argument("compact-support potential: dimension must lie in [2, 26]");
  if (!(rho > 0.0)) throw std::invalid_argument("compact-support potential: scale must be positive");
  return first_zero(0.5 * (d - 2));
}
}  // namespace

PerfectSecurityPotential::PerfectSecurityPotential(int d, double rho_)
    : Potential(d, std::nullopt), rho(rho_), j1(checked_first_zero(d, rho_)) {}

double PerfectSecurityPotential::radial_arg(const Vec& x) const {
  check_dim(*this, x);
  return x.norm() / (2.0 * rho);
}

double PerfectSecurityPotential::log_density_radial(double u) const {
  if (u > kMaxRadialArg) return -kInf;
  if (std::abs(u - j1) < 1e-6) {
    // ratio = -(a + (u - j1) b / 2) / (u + j1) from the series of Omega around j1
    const double a = -(j1 / 2.0) * omega_d(dim + 2, j1);
    const double b = -0.5 * omega_d(dim + 2, j1) + (j1 * j1 / 4.0) * omega_d(dim + 4, j1);
    const double ratio = -(a + (u - j1) * b / 2.0) / (u + j1);
    return 2.0 * std::log(std::abs(ratio));
  }
  const double om = omega_d(dim, u);
  return 2.0 * (std::log(std::abs(om)) - std::log(std::abs(j1 * j1 - u * u)));
}

double PerfectSecurityPotential::value(const Vec& x) const { return -log_density_radial(radial_arg(x)); }

Vec PerfectSecurityPotential::grad(const Vec& x) const {
  const double u = radial_arg(x);
  if (u > kMaxRadialArg) throw std::domain_error("compact-support potential: gradient outside supported range");
  if (u < 1e-8) {
    // dphi/du is linear near zero; slope from the series limits of Omega
    const double slope = omega_d(dim + 2, 0.0) / omega_d(dim, 0.0) - 4.0 / (j1 * j1);
    return (slope / (4.0 * rho * rho)) * x;
  }
  double dphi_du;
  if (std::abs(u - j1) < 1e-6) {
    const double a = -(j1 / 2.0) * omega_d(dim + 2, j1);
    const double b = -0.5 * omega_d(dim + 2, j1) + (j1 * j1 / 4.0) * omega_d(dim + 4, j1);
    const double ratio = -(a + (u - j1) * b / 2.0) / (u + j1);
    const double dratio = -(b / 2.0) / (u + j1) + (a + (u - j1) * b / 2.0) / ((u + j1) * (u + j1));
    dphi_du = -2.0 * dratio / ratio;
  } else {
    dphi_du = u * omega_d(dim + 2, u) / omega_d(dim, u) - 4.0 * u / (j1 * j1 - u * u);
  }
  return (dphi_du / (2.0 * rho * x.norm())) * x;
}

double perfect_security_log_density(const PerfectSecurityPotential& p, const Vec& x) {
  const double u = p.radial_arg(x);
  if (u > PerfectSecurityPotential::kMaxRadialArg)
    throw std::domain_error("compact-support density: radial argument beyond supported range");
  return p.log_density_radial(u);
}

double perfect_security_rho_for_unit_variance(int d) {
  if (d < 2 || d > 26) throw std::invalid_argument("unit-variance scale: dimension must lie in [2, 26]");
  return std::sqrt(static_cast<double>(d)) / (2.0 * first_zero(0.5 * (d - 2)));
}

}  // namespace latsamp
