#include "latsamp/rwm.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "latsamp/parallel.hpp"

namespace latsamp {

RwmResult rwm_chain(const Potential& p, const Mat& increment_factor, Vec x0, int iters, Rng& rng) {
  if (x0.size() != p.dim || increment_factor.rows() != p.dim)
    throw std::invalid_argument("rwm: dimension mismatch");
  Vec x = std::move(x0);
  double phi_x = p.value(round_nearest_vec(x));
  std::uint64_t accepts = 0;
  Vec w(increment_factor.cols());
  for (int it = 0; it < iters; ++it) {
    for (Eigen::Index i = 0; i < w.size(); ++i) w[i] = rng.normal();
    const Vec y = x + increment_factor * w;
    const double phi_y = p.value(round_nearest_vec(y));
    const double log_alpha = phi_x - phi_y;
    if (log_alpha >= 0.0 || std::log(rng.uniform()) <= log_alpha) {
      x = y;
      phi_x = phi_y;
      ++accepts;
    }
  }
  return {std::move(x), accepts};
}

std::vector<IntPoint> rwm_marginal_oracle(const Potential& p, const Mat& sigma, const Vec& x0,
                                          int n_samples, std::uint64_t seed) {
  if (n_samples <= 0) throw std::invalid_argument("rwm oracle: n_samples must be positive");
  if (sigma.rows() != p.dim || sigma.cols() != p.dim || !sigma.isApprox(sigma.transpose(), 1e-12))
    throw std::invalid_argument("rwm oracle: sigma must be symmetric with matching dimension");
  Eigen::LLT<Mat> llt(sigma);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument("rwm oracle: sigma must be positive definite");
  const Mat factor = llt.matrixL();

  std::vector<IntPoint> out(static_cast<std::size_t>(n_samples));
  constexpr std::uint64_t kRwmStream = 0x52574d;
  parallel_for(n_samples, [&](std::int64_t i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i), kRwmStream));
    const RwmResult r = rwm_chain(p, factor, x0, kRwmItersPerSample, rng);
    out[static_cast<std::size_t>(i)] = round_nearest(r.x);
  });
  return out;
}

Mat rwm_default_covariance(int d, const Mat& target_cov) {
  if (d <= 0 || target_cov.rows() != d || target_cov.cols() != d)
    throw std::invalid_argument("rwm covariance: dimension mismatch");
  return (2.38 * 2.38 / static_cast<double>(d)) * target_cov;
}

}  // namespace latsamp
