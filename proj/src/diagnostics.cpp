#include "latsamp/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "latsamp/parallel.hpp"
#include "latsamp/rng.hpp"

namespace latsamp {

double MarginalPMF::at(std::int64_t z) const {
  if (z < lo || z >= lo + static_cast<std::int64_t>(probs.size())) return 0.0;
  return probs[static_cast<std::size_t>(z - lo)];
}

MarginalPMF exact_marginal_isotropic(double sigma2, int window) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("exact marginal: sigma2 must be positive");
  if (window < 8.0 * std::sqrt(sigma2))
    throw std::invalid_argument("exact marginal: window smaller than 8 sigma");
  MarginalPMF pmf;
  pmf.lo = -window;
  pmf.probs.resize(static_cast<std::size_t>(2 * window + 1));
  double norm = 0.0;
  for (int z = -window; z <= window; ++z) {
    const double w = std::exp(-0.5 * z * z / sigma2);
    pmf.probs[static_cast<std::size_t>(z + window)] = w;
    norm += w;
  }
  for (double& p : pmf.probs) p /= norm;
  return pmf;
}

double tvd(const MarginalPMF& p, const MarginalPMF& q) {
  const std::int64_t lo = std::min(p.lo, q.lo);
  const std::int64_t hi = std::max(p.lo + static_cast<std::int64_t>(p.probs.size()),
                                   q.lo + static_cast<std::int64_t>(q.probs.size()));
  double l1 = 0.0;
  for (std::int64_t z = lo; z < hi; ++z) l1 += std::abs(p.at(z) - q.at(z));
  return 0.5 * l1;
}

TVDMCurve tvd_m_curve(const SigmoidTarget& target, const ProposalBackend& backend, const Vec& x0,
                      int replicas, const std::vector<int>& t_values,
                      const std::vector<MarginalPMF>& oracle, std::uint64_t seed,
                      std::uint64_t* clamped_count) {
  const int d = target.dim();
  if (replicas <= 0) throw std::invalid_argument("tvd_m: replicas must be positive");
  if (static_cast<int>(oracle.size()) != d)
    throw std::invalid_argument("tvd_m: oracle must cover every coordinate");
  for (const MarginalPMF& pmf : oracle)
    if (pmf.probs.empty()) throw std::invalid_argument("tvd_m: empty oracle pmf");
  for (int t : t_values)
    if (t < 0) throw std::invalid_argument("tvd_m: negative iteration count");

  TVDMCurve curve;
  curve.iterations = t_values;
  curve.values.resize(t_values.size());
  std::uint64_t clamped = 0;

  std::vector<IntPoint> finals(static_cast<std::size_t>(replicas));
  for (std::size_t ti = 0; ti < t_values.size(); ++ti) {
    const int t = t_values[ti];
    parallel_for(replicas, [&](std::int64_t r) {
      ChainState state =
          make_chain_state(target, x0, derive_seed(seed, ti, static_cast<std::uint64_t>(r)));
      for (int s = 0; s < t; ++s) imhr_step(state, backend, target);
      finals[static_cast<std::size_t>(r)] = round_nearest(state.x);
    });

    // Integer-count merge keeps the aggregation order-independent.
    double worst = 0.0;
    for (int i = 0; i < d; ++i) {
      const MarginalPMF& ref = oracle[static_cast<std::size_t>(i)];
      const auto support = static_cast<std::int64_t>(ref.probs.size());
      std::vector<std::uint64_t> counts(ref.probs.size(), 0);
      for (const IntPoint& z : finals) {
        std::int64_t v = z[static_cast<std::size_t>(i)] - ref.lo;
        if (v < 0 || v >= support) {
          ++clamped;
          v = std::clamp<std::int64_t>(v, 0, support - 1);
        }
        ++counts[static_cast<std::size_t>(v)];
      }
      double l1 = 0.0;
      for (std::size_t k = 0; k < counts.size(); ++k)
        l1 += std::abs(static_cast<double>(counts[k]) / static_cast<double>(replicas) -
                       ref.probs[k]);
      worst = std::max(worst, 0.5 * l1);
    }
    curve.values[ti] = worst;
  }
  if (clamped_count != nullptr) *clamped_count = clamped;
  return curve;
}

double noise_floor(const std::vector<MarginalPMF>& oracle, int replicas) {
  if (replicas <= 0) throw std::invalid_argument("noise floor: replicas must be positive");
  double floor = 0.0;
  for (const MarginalPMF& pmf : oracle)
    floor = std::max(floor, std::sqrt(static_cast<double>(pmf.probs.size()) /
                                      static_cast<double>(replicas)));
  return floor;
}

std::vector<double> acf(const std::vector<Vec>& series, int max_lag) {
  const auto n = static_cast<int>(series.size());
  if (max_lag <= 0) throw std::invalid_argument("acf: max_lag must be positive");
  if (n <= max_lag) throw std::invalid_argument("acf: series shorter than max_lag");
  double denom = 0.0;
  for (const Vec& x : series) denom += x.squaredNorm();
  if (denom == 0.0) throw std::invalid_argument("acf: all-zero series");
  std::vector<double> out(static_cast<std::size_t>(max_lag) + 1);
  for (int tau = 0; tau <= max_lag; ++tau) {
    double num = 0.0;
    for (int t = 0; t + tau < n; ++t)
      num += series[static_cast<std::size_t>(t)].dot(series[static_cast<std::size_t>(t + tau)]);
    out[static_cast<std::size_t>(tau)] = num / denom;
  }
  return out;
}

double average_acceptance(const ChainState& state) {
  if (state.steps == 0) throw std::invalid_argument("average acceptance: no steps taken");
  return static_cast<double>(state.accepts) / static_cast<double>(state.steps);
}

double uniform_ergodicity_bound(double L, int d, double z_over_k, std::uint64_t t) {
  if (!(L > 0.0) || d <= 0 || !(z_over_k > 0.0))
    throw std::invalid_argument("ergodicity bound: inputs must be positive");
  const double delta = z_over_k * std::exp(-static_cast<double>(d) * L / 8.0);
  if (delta > 1.0)
    throw std::invalid_argument("ergodicity bound: delta exceeds 1, inputs inconsistent");
  return std::clamp(std::pow(1.0 - delta, static_cast<double>(t)), 0.0, 1.0);
}

double gaussian_z_over_k(int d, double sigma2) {
  if (d <= 0 || !(sigma2 > 0.0))
    throw std::invalid_argument("z over k: inputs must be positive");
  const double sigma = std::sqrt(sigma2);
  const auto window = static_cast<int>(std::ceil(10.0 * sigma));
  double z1 = 0.0;
  for (int z = -window; z <= window; ++z) z1 += std::exp(-0.5 * z * z / sigma2);
  const double k1 = std::sqrt(2.0 * M_PI) * sigma;
  return std::pow(z1 / k1, d);
}

BoundInterval inexact_alg_bound(double V, double rho, int n, double delta, std::uint64_t k) {
  if (V < 0.0 || !(rho > 0.0) || !(rho < 1.0) || n <= 0 || !(delta > 0.0) || delta > 1.0)
    throw std::invalid_argument("inexact bound: parameters out of range");
  const double eps = V * std::pow(rho, n) / delta;
  if (!(2.0 * eps < 1.0))
    throw std::invalid_argument("inexact bound: 2 V rho^n / delta >= 1, bound vacuous");
  const auto eval = [&](double c) {
    return std::pow(1.0 - c * delta, static_cast<double>(k)) + (1.0 + 1.0 / (c * delta)) * eps;
  };
  const double a = eval(1.0 - 2.0 * eps);
  const double b = eval(1.0 + 2.0 * eps);
  return {std::min(a, b), std::max(a, b)};
}

std::vector<double> appendix_a_degeneracy_probe(double sigma2, int window_max) {
  if (!(sigma2 > 0.0) || window_max < 0)
    throw std::invalid_argument("degeneracy probe: bad parameters");
  std::vector<double> out(static_cast<std::size_t>(window_max) + 1);
  for (int m = 0; m <= window_max; ++m) {
    double inf = std::numeric_limits<double>::infinity();
    for (int k = -500; k <= 500; ++k) {
      const double y = static_cast<double>(k) * 1e-3;
      const double ratio = std::exp(-(2.0 * m * y + y * y) / (2.0 * sigma2));
      inf = std::min(inf, ratio);
    }
    out[static_cast<std::size_t>(m)] = inf;
  }
  return out;
}

}  // namespace latsamp
