#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "latsamp/backends.hpp"
#include "latsamp/common.hpp"
#include "latsamp/imhr.hpp"
#include "latsamp/target.hpp"

namespace latsamp {

// Probabilities over the consecutive integers lo, lo+1, ...; sums to 1.
struct MarginalPMF {
  std::int64_t lo = 0;
  std::vector<double> probs;

  double at(std::int64_t z) const;
};

struct TVDMCurve {
  std::vector<int> iterations;
  std::vector<double> values;
};

// pmf proportional to e^{-z^2/(2 sigma2)} on [-window, window]. Requires
// window >= 8 sigma so the discarded tail is below 1e-12.
MarginalPMF exact_marginal_isotropic(double sigma2, int window);

// Half the L1 distance over the union of supports; in [0, 1].
double tvd(const MarginalPMF& p, const MarginalPMF& q);

// Worst-coordinate TVD between replica ensembles and the per-coordinate
// oracle, one value per entry of t_values. Replica r of entry ti draws its
// stream from (seed, ti, r), and histograms are merged as integer counts, so
// the result does not depend on the thread count. Samples falling outside an
// oracle's range are clamped to the nearest edge bin and counted in
// *clamped_count when given.
TVDMCurve tvd_m_curve(const SigmoidTarget& target, const ProposalBackend& backend, const Vec& x0,
                      int replicas, const std::vector<int>& t_values,
                      const std::vector<MarginalPMF>& oracle, std::uint64_t seed,
                      std::uint64_t* clamped_count = nullptr);

// Multinomial sampling floor: max_i sqrt(support_i / replicas).
double noise_floor(const std::vector<MarginalPMF>& oracle, int replicas);

// Uncentred autocorrelation sum_t <x_t, x_{t+tau}> / sum_t <x_t, x_t> for
// tau = 0..max_lag.
std::vector<double> acf(const std::vector<Vec>& series, int max_lag);

double average_acceptance(const ChainState& state);

// (1 - delta)^t with delta = z_over_k e^{-d L / 8}, clamped to [0, 1].
double uniform_ergodicity_bound(double L, int d, double z_over_k, std::uint64_t t);

// Truncated-sum Z over closed-form K for the isotropic Gaussian; product form
// across d coordinates.
double gaussian_z_over_k(int d, double sigma2);

// Both endpoints of the inexact-proposal bound (1 - C delta)^k
// + (1 + 1/(C delta)) V rho^n / delta over C in [1 -+ 2 V rho^n / delta].
struct BoundInterval {
  double lower;
  double upper;
};
BoundInterval inexact_alg_bound(double V, double rho, int n, double delta, std::uint64_t k);

// Per-window infimum over a 1e-3 grid of the density-to-piecewise-constant
// ratio exp(-(2 m y + y^2) / (2 sigma2)), windows m = 0..window_max.
std::vector<double> appendix_a_degeneracy_probe(double sigma2, int window_max);

}  // namespace latsamp
