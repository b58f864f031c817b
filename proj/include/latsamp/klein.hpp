#pragma once

#include <cstdint>
#include <vector>

#include "latsamp/common.hpp"
#include "latsamp/lattice.hpp"
#include "latsamp/rng.hpp"

namespace latsamp {

// Truncated inverse-CDF sampler for the integer Gaussian with weight
// e^{-(z - center)^2 / (2 sigma^2)} on [ceil(center - 12 sigma),
// floor(center + 12 sigma)]; the discarded tail is below 1e-30. The table is
// reused until (center, sigma) moves by more than 1e-12.
class DiscreteGaussian1D {
 public:
  std::int64_t operator()(double center, double sigma, Rng& rng);

 private:
  void rebuild(double center, double sigma);

  double center_ = 0.0;
  double sigma_ = -1.0;
  std::int64_t lo_ = 0;
  std::vector<double> cdf_;
};

// Stateless form; keeps one table per thread behind the scenes.
std::int64_t discrete_gaussian_1d(double center, double sigma, Rng& rng);

struct KleinParams {
  GeneratorMatrix B;
  double sigma;
  Vec c;
  Gso gso;

  // sigma / ||btilde_i||, the width used at level i.
  double level_sigma(int i) const;
};

KleinParams make_klein_params(GeneratorMatrix B, double sigma, Vec c);

// Randomized nearest-plane walk from the last column down; returns the
// coefficient vector z, so the lattice point is B z.
IntPoint klein_sample(const KleinParams& params, Rng& rng);

}  // namespace latsamp
