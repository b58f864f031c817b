#pragma once

#include <cstdint>
#include <functional>
#include <memory>

#include "latsamp/common.hpp"
#include "latsamp/lattice.hpp"
#include "latsamp/potentials.hpp"
#include "latsamp/rng.hpp"

namespace latsamp {

struct HMCParams {
  int leapfrog_steps;
  double step_size;
  double momentum_variance;
  int inner_iterations;

  // L = floor(5 (2/d)^{1/4}), eps = 1.2 (2/d)^{1/4}, momentum variance 9,
  // 5 transitions per draw.
  static HMCParams defaults(int d);
};

struct BackendStats {
  std::uint64_t transitions = 0;
  std::uint64_t accepted_transitions = 0;
  std::uint64_t divergent_draws = 0;
};

// Independence proposal source: draw() never depends on the chain's current
// state. The closure borrows any referenced potential; keep it alive.
struct ProposalBackend {
  enum class Kind { exact_gaussian, hmc, rejection_radial };

  Kind kind;
  int dim;
  std::function<Vec(Rng&)> draw;
  std::shared_ptr<BackendStats> stats;  // populated by the hmc kind
};

// Exact isotropic draws: center + sigma * standard normal vector.
ProposalBackend exact_gaussian_backend(int d, double sigma2, Vec center);
ProposalBackend exact_gaussian_backend(int d, double sigma2);

// Exact draws from the pulled-back density exp(-||Bx||^2/(2 sigma2)): solve
// B x = g for an isotropic draw g.
ProposalBackend exact_gaussian_backend(const GeneratorMatrix& B, double sigma2);

// One leapfrog trajectory in place; kinetic energy ||p||^2 / (2 mvar).
void leapfrog(const Potential& pot, Vec& x, Vec& mom, int steps, double eps, double mvar);

// Each draw restarts from x_init and runs inner_iterations Metropolis-adjusted
// trajectories. A trajectory with |H change| > 1000 (or a non-finite one) marks
// the draw divergent; the draw is retried once, then flagged in stats.
ProposalBackend hmc_backend(const Potential& p, HMCParams params, Vec x_init);

// The hmc kind specialized with the dimension defaults and x_init = 0.
ProposalBackend perfect_security_backend(const PerfectSecurityPotential& p);

// Exact sampler for the compact-support radial density: cell-envelope rejection
// on the radial coordinate, uniform direction.
ProposalBackend rejection_radial_backend(const PerfectSecurityPotential& p);

}  // namespace latsamp
