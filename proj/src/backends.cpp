#include "latsamp/backends.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace latsamp {

HMCParams HMCParams::defaults(int d) {
  const double scale = std::pow(2.0 / d, 0.25);
  HMCParams p;
  p.leapfrog_steps = static_cast<int>(std::floor(5.0 * scale));
  p.step_size = 1.2 * scale;
  p.momentum_variance = 9.0;
  p.inner_iterations = 5;
  return p;
}

ProposalBackend exact_gaussian_backend(int d, double sigma2, Vec center) {
  if (d <= 0 || !(sigma2 > 0.0)) throw std::invalid_argument("exact backend: bad parameters");
  if (center.size() != d) throw std::invalid_argument("exact backend: center dimension mismatch");
  const double sigma = std::sqrt(sigma2);
  ProposalBackend b;
  b.kind = ProposalBackend::Kind::exact_gaussian;
  b.dim = d;
  b.draw = [d, sigma, center](Rng& rng) {
    Vec x(d);
    for (int i = 0; i < d; ++i) x[i] = center[i] + sigma * rng.normal();
    return x;
  };
  return b;
}

ProposalBackend exact_gaussian_backend(int d, double sigma2) {
  return exact_gaussian_backend(d, sigma2, Vec::Zero(d));
}

ProposalBackend exact_gaussian_backend(const GeneratorMatrix& B, double sigma2) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("exact backend: variance must be positive");
  const double sigma = std::sqrt(sigma2);
  const int d = B.dim;
  auto lu = std::make_shared<Eigen::PartialPivLU<Mat>>(B.entries);
  ProposalBackend b;
  b.kind = ProposalBackend::Kind::exact_gaussian;
  b.dim = d;
  b.draw = [d, sigma, lu](Rng& rng) {
    Vec g(d);
    for (int i = 0; i < d; ++i) g[i] = sigma * rng.normal();
    return Vec(lu->solve(g));
  };
  return b;
}

void leapfrog(const Potential& pot, Vec& x, Vec& mom, int steps, double eps, double mvar) {
  mom -= (eps / 2.0) * pot.grad(x);
  for (int l = 0; l < steps; ++l) {
    x += (eps / mvar) * mom;
    if (l + 1 < steps) mom -= eps * pot.grad(x);
  }
  mom -= (eps / 2.0) * pot.grad(x);
}

ProposalBackend hmc_backend(const Potential& p, HMCParams params, Vec x_init) {
  if (params.leapfrog_steps <= 0 || !(params.step_size > 0.0) || !(params.momentum_variance > 0.0) ||
      params.inner_iterations <= 0)
    throw std::invalid_argument("hmc backend: bad parameters");
  if (x_init.size() != p.dim) throw std::invalid_argument("hmc backend: x_init dimension mismatch");
  ProposalBackend b;
  b.kind = ProposalBackend::Kind::hmc;
  b.dim = p.dim;
  b.stats = std::make_shared<BackendStats>();
  const Potential* pot = &p;
  auto stats = b.stats;
  b.draw = [pot, params, x_init, stats](Rng& rng) {
    const int d = static_cast<int>(x_init.size());
    const double mvar = params.momentum_variance;
    const double mstd = std::sqrt(mvar);
    for (int attempt = 0; attempt < 2; ++attempt) {
      Vec x = x_init;
      double phi = pot->value(x);
      bool divergent = false;
      for (int it = 0; it < params.inner_iterations; ++it) {
        Vec mom(d);
        for (int i = 0; i < d; ++i) mom[i] = mstd * rng.normal();
        const double h0 = phi + mom.squaredNorm() / (2.0 * mvar);
        Vec x1 = x;
        Vec mom1 = mom;
        try {
          leapfrog(*pot, x1, mom1, params.leapfrog_steps, params.step_size, mvar);
        } catch (const std::domain_error&) {
          divergent = true;
          break;
        }
        const double phi1 = pot->value(x1);
        const double dh = (phi1 + mom1.squaredNorm() / (2.0 * mvar)) - h0;
        if (!std::isfinite(dh) || std::abs(dh) > 1000.0) {
          divergent = true;
          break;
        }
        ++stats->transitions;
        if (std::log(rng.uniform()) <= -dh) {
          x = x1;
          phi = phi1;
          ++stats->accepted_transitions;
        }
      }
      if (!divergent) return x;
      if (attempt == 1) {
        ++stats->divergent_draws;
        return x;
      }
    }
    return x_init;  // unreachable
  };
  return b;
}

ProposalBackend perfect_security_backend(const PerfectSecurityPotential& p) {
  return hmc_backend(p, HMCParams::defaults(p.dim), Vec::Zero(p.dim));
}

ProposalBackend rejection_radial_backend(const PerfectSecurityPotential& p) {
  constexpr int kCells = 16384;
  const double umax = PerfectSecurityPotential::kMaxRadialArg;
  const double du = umax / kCells;
  const int d = p.dim;

  // log radial density up to a constant: (d-1) log u + log density(u)
  auto log_f = [&p, d](double u) {
    if (u <= 0.0) return -std::numeric_limits<double>::infinity();
    return (d - 1) * std::log(u) + p.log_density_radial(u);
  };

  // per-cell envelope from five probes with 5% headroom
  std::vector<double> logenv(kCells, -std::numeric_limits<double>::infinity());
  double logmax = -std::numeric_limits<double>::infinity();
  for (int c = 0; c < kCells; ++c) {
    for (int k = 0; k <= 4; ++k) {
      const double u = (c + 0.25 * k) * du;
      logenv[static_cast<std::size_t>(c)] = std::max(logenv[static_cast<std::size_t>(c)], log_f(u));
    }
    logmax = std::max(logmax, logenv[static_cast<std::size_t>(c)]);
  }
  auto cum = std::make_shared<std::vector<double>>(kCells + 1, 0.0);
  auto env = std::make_shared<std::vector<double>>(kCells);
  for (int c = 0; c < kCells; ++c) {
    (*env)[static_cast<std::size_t>(c)] = std::exp(logenv[static_cast<std::size_t>(c)] - logmax) * 1.05;
    (*cum)[static_cast<std::size_t>(c) + 1] = (*cum)[static_cast<std::size_t>(c)] + (*env)[static_cast<std::size_t>(c)];
  }

  ProposalBackend b;
  b.kind = ProposalBackend::Kind::rejection_radial;
  b.dim = d;
  const PerfectSecurityPotential* pot = &p;
  b.draw = [pot, d, du, logmax, cum, env](Rng& rng) {
    auto log_f = [pot, d](double u) {
      if (u <= 0.0) return -std::numeric_limits<double>::infinity();
      return (d - 1) * std::log(u) + pot->log_density_radial(u);
    };
    const double total = cum->back();
    double u = 0.0;
    for (;;) {
      const double target = total * rng.uniform();
      const auto it = std::upper_bound(cum->begin(), cum->end(), target);
      const auto c = static_cast<std::size_t>(it - cum->begin()) - 1;
      u = (static_cast<double>(c) + rng.uniform()) * du;
      const double ratio = std::exp(log_f(u) - logmax) / (*env)[c];
      if (rng.uniform() < ratio) break;
    }
    Vec dir(d);
    double n2 = 0.0;
    do {
      for (int i = 0; i < d; ++i) dir[i] = rng.normal();
      n2 = dir.squaredNorm();
    } while (n2 == 0.0);
    return Vec((2.0 * pot->rho * u / std::sqrt(n2)) * dir);
  };
  return b;
}

}  // namespace latsamp
