#include "doctest.h"
#include "latsamp/diagnostics.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "latsamp/backends.hpp"
#include "latsamp/potentials.hpp"
#include "latsamp/rng.hpp"

using namespace latsamp;

namespace {

MarginalPMF pmf_from(std::int64_t lo, std::vector<double> probs) {
  MarginalPMF p;
  p.lo = lo;
  p.probs = std::move(probs);
  return p;
}

MarginalPMF random_pmf(Rng& rng, std::int64_t lo, int size) {
  std::vector<double> w(static_cast<std::size_t>(size));
  double norm = 0.0;
  for (double& v : w) {
    v = rng.uniform() + 1e-3;
    norm += v;
  }
  for (double& v : w) v /= norm;
  return pmf_from(lo, std::move(w));
}

}  // namespace

TEST_SUITE("diagnostics") {

TEST_CASE("exact isotropic marginal: mass ratio, symmetry, frozen P(0)") {
  const MarginalPMF p = exact_marginal_isotropic(1.0, 10);
  CHECK(p.at(0) / p.at(1) == doctest::Approx(std::exp(0.5)).epsilon(1e-12));
  for (int z = 0; z <= 10; ++z) CHECK(p.at(z) == p.at(-z));
  // Truncated-sum oracle: 1 / sum_{|z|<=10} e^{-z^2/2}.
  CHECK(p.at(0) == doctest::Approx(0.3989422782668617).epsilon(1e-12));
  double total = 0.0;
  for (double v : p.probs) total += v;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("too small a marginal window is rejected") {
  CHECK_THROWS_AS(exact_marginal_isotropic(1.0, 7), std::invalid_argument);
  CHECK_THROWS_AS(exact_marginal_isotropic(4.0, 15), std::invalid_argument);
}

TEST_CASE("tvd basics: identity, disjoint supports, direct formula") {
  const MarginalPMF p = pmf_from(0, {0.5, 0.5});
  const MarginalPMF q = pmf_from(0, {1.0, 0.0});
  const MarginalPMF r = pmf_from(10, {0.25, 0.75});
  CHECK(tvd(p, p) == 0.0);
  CHECK(tvd(p, r) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(tvd(p, q) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("tvd is a metric on random triples") {
  Rng rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const MarginalPMF a = random_pmf(rng, -2, 7);
    const MarginalPMF b = random_pmf(rng, -4, 9);
    const MarginalPMF c = random_pmf(rng, 0, 5);
    CHECK(tvd(a, b) == tvd(b, a));
    CHECK(tvd(a, a) == 0.0);
    CHECK(tvd(a, c) <= tvd(a, b) + tvd(b, c) + 1e-12);
    CHECK(tvd(a, b) >= 0.0);
    CHECK(tvd(a, b) <= 1.0);
  }
}

TEST_CASE("zero-iteration curve equals one minus the oracle mass at the start") {
  IsotropicGaussianPotential pot(2, 1.0);
  SigmoidTarget target(pot);
  ProposalBackend backend = exact_gaussian_backend(2, 1.0);
  const std::vector<MarginalPMF> oracle(2, exact_marginal_isotropic(1.0, 10));
  const TVDMCurve curve = tvd_m_curve(target, backend, Vec::Zero(2), 2000, {0}, oracle, 52);
  REQUIRE(curve.values.size() == 1);
  CHECK(curve.values[0] ==
        doctest::Approx(1.0 - oracle[0].at(0)).epsilon(1e-12));
}

TEST_CASE("curve decreases with t up to three noise floors and reaches the floor") {
  IsotropicGaussianPotential pot(1, 1.0);
  SigmoidTarget target(pot);
  ProposalBackend backend = exact_gaussian_backend(1, 1.0);
  const std::vector<MarginalPMF> oracle{exact_marginal_isotropic(1.0, 10)};
  const int replicas = 20000;
  const std::vector<int> ts{0, 1, 2, 3, 5, 8};
  const TVDMCurve curve = tvd_m_curve(target, backend, Vec::Zero(1), replicas, ts, oracle, 53);
  const double slack = 3.0 * noise_floor(oracle, replicas);
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j)
      CHECK(curve.values[j] <= curve.values[i] + slack);
  CHECK(curve.values.back() < slack);
}

TEST_CASE("curve values are independent of the thread count") {
  IsotropicGaussianPotential pot(1, 1.0);
  SigmoidTarget target(pot);
  ProposalBackend backend = exact_gaussian_backend(1, 1.0);
  const std::vector<MarginalPMF> oracle{exact_marginal_isotropic(1.0, 10)};
  setenv("LS_THREADS", "4", 1);
  const TVDMCurve a = tvd_m_curve(target, backend, Vec::Zero(1), 3000, {0, 2, 4}, oracle, 54);
  setenv("LS_THREADS", "1", 1);
  const TVDMCurve b = tvd_m_curve(target, backend, Vec::Zero(1), 3000, {0, 2, 4}, oracle, 54);
  unsetenv("LS_THREADS");
  CHECK(a.values == b.values);
}

TEST_CASE("out-of-window samples are clamped and flagged") {
  IsotropicGaussianPotential pot(1, 1.0);
  SigmoidTarget target(pot);
  ProposalBackend backend = exact_gaussian_backend(1, 1.0);
  // A deliberately narrow oracle window forces clamping.
  const std::vector<MarginalPMF> oracle{pmf_from(0, {0.5, 0.5})};
  std::uint64_t clamped = 0;
  tvd_m_curve(target, backend, Vec::Zero(1), 2000, {3}, oracle, 55, &clamped);
  CHECK(clamped > 0);
}

TEST_CASE("noise floor follows the support-over-replicas formula") {
  const std::vector<MarginalPMF> oracle{exact_marginal_isotropic(1.0, 10)};
  CHECK(noise_floor(oracle, 100000) == doctest::Approx(0.014491376746189438).epsilon(1e-12));
}

TEST_CASE("acf normalizes to 1 at lag zero and handles constants") {
  std::vector<Vec> series;
  Vec c(2);
  c << 0.7, -0.3;
  for (int i = 0; i < 100; ++i) series.push_back(c);
  const auto a = acf(series, 10);
  CHECK(a[0] == 1.0);
  for (int tau = 1; tau <= 10; ++tau)
    CHECK(a[static_cast<std::size_t>(tau)] ==
          doctest::Approx((100.0 - tau) / 100.0).epsilon(1e-12));
}

TEST_CASE("acf of i.i.d. zero-mean draws stays within the CLT band") {
  Rng rng(56);
  const int n = 10000;
  std::vector<Vec> series;
  series.reserve(n);
  for (int i = 0; i < n; ++i) {
    Vec x(1);
    x << rng.normal();
    series.push_back(x);
  }
  const auto a = acf(series, 20);
  CHECK(a[0] == 1.0);
  for (int tau = 1; tau <= 20; ++tau)
    CHECK(std::abs(a[static_cast<std::size_t>(tau)]) <= 4.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("acf rejects an all-zero series and a too-short series") {
  std::vector<Vec> zeros(50, Vec::Zero(2));
  CHECK_THROWS_AS(acf(zeros, 5), std::invalid_argument);
  std::vector<Vec> shorty(5, Vec::Ones(1));
  CHECK_THROWS_AS(acf(shorty, 5), std::invalid_argument);
}

TEST_CASE("average acceptance is the accept fraction") {
  ChainState s;
  s.steps = 10;
  s.accepts = 10;
  CHECK(average_acceptance(s) == 1.0);
  s.accepts = 0;
  CHECK(average_acceptance(s) == 0.0);
  s.steps = 0;
  CHECK_THROWS_AS(average_acceptance(s), std::invalid_argument);
}

TEST_CASE("ergodicity bound: closed-form spot values and clamping") {
  CHECK(uniform_ergodicity_bound(1.0, 8, 1.0, 1) ==
        doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
  CHECK(uniform_ergodicity_bound(1.0, 8, 1.0, 0) == 1.0);
  CHECK_THROWS_AS(uniform_ergodicity_bound(0.01, 1, 3.0, 1), std::invalid_argument);
}

TEST_CASE("gaussian Z over K at unit variance") {
  // Z = sum_{|z|<=10} e^{-z^2/2}, K = sqrt(2 pi).
  CHECK(gaussian_z_over_k(1, 1.0) == doctest::Approx(1.000000005350576).epsilon(1e-12));
  CHECK(gaussian_z_over_k(2, 1.0) ==
        doctest::Approx(1.000000005350576 * 1.000000005350576).epsilon(1e-12));
}

TEST_CASE("measured d=1 TVD decay is dominated by the ergodicity bound") {
  IsotropicGaussianPotential pot(1, 1.0);
  SigmoidTarget target(pot);
  ProposalBackend backend = exact_gaussian_backend(1, 1.0);
  const std::vector<MarginalPMF> oracle{exact_marginal_isotropic(1.0, 10)};
  const int replicas = 20000;
  const std::vector<int> ts{0, 1, 2, 3, 4, 6};
  const TVDMCurve curve = tvd_m_curve(target, backend, Vec::Zero(1), replicas, ts, oracle, 57);
  const double z_over_k = gaussian_z_over_k(1, 1.0);
  const double slack = 3.0 * noise_floor(oracle, replicas);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double bound =
        uniform_ergodicity_bound(1.0, 1, z_over_k, static_cast<std::uint64_t>(ts[i]));
    CHECK(curve.values[i] <= bound + slack);
  }
}

TEST_CASE("inexact-proposal bound: ideal limit and frozen dual-path endpoints") {
  const BoundInterval ideal = inexact_alg_bound(0.0, 0.5, 10, 0.5, 5);
  CHECK(ideal.lower == ideal.upper);
  CHECK(ideal.lower == doctest::Approx(std::pow(0.5, 5)).epsilon(1e-12));
  const BoundInterval unit = inexact_alg_bound(0.0, 0.5, 10, 0.5, 0);
  CHECK(unit.lower == 1.0);
  CHECK(unit.upper == 1.0);

  const BoundInterval b = inexact_alg_bound(1.0, 0.5, 10, 0.5, 5);
  CHECK(b.lower == doctest::Approx(0.03648857380263949).epsilon(1e-12));
  CHECK(b.upper == doctest::Approx(0.037739832224392714).epsilon(1e-12));
  CHECK_THROWS_AS(inexact_alg_bound(1.0, 0.9, 1, 0.5, 5), std::invalid_argument);
}

TEST_CASE("degeneracy probe: frozen head value, strict decay, fast collapse") {
  const auto probe = appendix_a_degeneracy_probe(0.5, 10);
  REQUIRE(probe.size() == 11);
  CHECK(probe[0] == doctest::Approx(std::exp(-0.25)).epsilon(1e-12));
  for (std::size_t m = 1; m < probe.size(); ++m) CHECK(probe[m] < probe[m - 1]);
  CHECK(probe[10] < 1e-4 * probe[0]);
}

}  // TEST_SUITE
