#include "latsamp/klein.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace latsamp {

void DiscreteGaussian1D::rebuild(double center, double sigma) {
  center_ = center;
  sigma_ = sigma;
  lo_ = static_cast<std::int64_t>(std::ceil(center - 12.0 * sigma));
  const auto hi = static_cast<std::int64_t>(std::floor(center + 12.0 * sigma));
  if (hi < lo_) throw std::invalid_argument("discrete gaussian: window empty, sigma degenerate");
  cdf_.assign(static_cast<std::size_t>(hi - lo_ + 1), 0.0);
  double acc = 0.0;
  for (std::size_t k = 0; k < cdf_.size(); ++k) {
    const double dz = (static_cast<double>(lo_ + static_cast<std::int64_t>(k)) - center) / sigma;
    acc += std::exp(-0.5 * dz * dz);
    cdf_[k] = acc;
  }
}

std::int64_t DiscreteGaussian1D::operator()(double center, double sigma, Rng& rng) {
  if (!(sigma >= 1e-6)) throw std::invalid_argument("discrete gaussian: sigma below 1e-6");
  if (std::abs(center - center_) > 1e-12 || std::abs(sigma - sigma_) > 1e-12)
    rebuild(center, sigma);
  const double u = rng.uniform() * cdf_.back();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  const auto k = std::min<std::size_t>(static_cast<std::size_t>(it - cdf_.begin()), cdf_.size() - 1);
  return lo_ + static_cast<std::int64_t>(k);
}

std::int64_t discrete_gaussian_1d(double center, double sigma, Rng& rng) {
  thread_local DiscreteGaussian1D table;
  return table(center, sigma, rng);
}

double KleinParams::level_sigma(int i) const {
  return sigma / gso.btilde.col(i).norm();
}

KleinParams make_klein_params(GeneratorMatrix B, double sigma, Vec c) {
  if (!(sigma > 0.0)) throw std::invalid_argument("klein: sigma must be positive");
  if (c.size() != B.dim) throw std::invalid_argument("klein: center dimension mismatch");
  Gso gso = gram_schmidt(B.entries);
  KleinParams p{std::move(B), sigma, std::move(c), std::move(gso)};
  for (int i = 0; i < p.B.dim; ++i)
    if (p.level_sigma(i) < 1e-6) throw std::invalid_argument("klein: degenerate level width");
  return p;
}

IntPoint klein_sample(const KleinParams& params, Rng& rng) {
  const int d = params.B.dim;
  // c in the orthogonalized basis: t_i = <c, btilde_i> / ||btilde_i||^2.
  Vec t(d);
  for (int i = 0; i < d; ++i) {
    const double n2 = params.gso.btilde.col(i).squaredNorm();
    t[i] = params.gso.btilde.col(i).dot(params.c) / n2;
  }
  IntPoint z(static_cast<std::size_t>(d), 0);
  thread_local std::vector<DiscreteGaussian1D> tables;
  if (tables.size() < static_cast<std::size_t>(d)) tables.resize(static_cast<std::size_t>(d));
  for (int i = d - 1; i >= 0; --i) {
    double center = t[i];
    for (int j = i + 1; j < d; ++j)
      center -= static_cast<double>(z[static_cast<std::size_t>(j)]) * params.gso.mu(j, i);
    z[static_cast<std::size_t>(i)] = tables[static_cast<std::size_t>(i)](center, params.level_sigma(i), rng);
  }
  return z;
}

}  // namespace latsamp
