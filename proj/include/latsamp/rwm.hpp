#pragma once

#include <cstdint>
#include <vector>

#include "latsamp/common.hpp"
#include "latsamp/potentials.hpp"
#include "latsamp/rng.hpp"

namespace latsamp {

struct RwmResult {
  Vec x;
  std::uint64_t accepts = 0;
};

// One random-walk chain: proposals y = x + F w with w standard normal, accepted
// with probability 1 ^ exp(phi(round(x)) - phi(round(y))). F may be singular
// (F = 0 freezes the chain); the marginal oracle below validates its Sigma.
RwmResult rwm_chain(const Potential& p, const Mat& increment_factor, Vec x0, int iters, Rng& rng);

// Marginal oracle: n_samples independent restarts, 500 RWM iterations each,
// emitting the rounded final state. Work is split across threads; sample i is
// driven by a stream derived from (seed, i), so the output is identical for
// any thread count.
std::vector<IntPoint> rwm_marginal_oracle(const Potential& p, const Mat& sigma, const Vec& x0,
                                          int n_samples, std::uint64_t seed);

constexpr int kRwmItersPerSample = 500;
constexpr int kRwmDefaultSamples = 200000;

// Scaled-covariance default: (2.38^2 / d) * target_cov.
Mat rwm_default_covariance(int d, const Mat& target_cov);

}  // namespace latsamp
