#include "latsamp/imhr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace latsamp {

ChainState make_chain_state(const SigmoidTarget& target, Vec x0, std::uint64_t seed) {
  if (x0.size() != target.dim()) throw std::invalid_argument("chain state: dimension mismatch");
  if (!x0.allFinite()) throw std::invalid_argument("chain state: x0 must be finite");
  ChainState s;
  s.x = std::move(x0);
  s.log_pi_x = target.log_pi(s.x);
  s.log_pi_bar_x = target.log_pi_bar(s.x);
  s.rng = Rng(seed);
  return s;
}

bool imhr_step(ChainState& state, const ProposalBackend& backend, const SigmoidTarget& target) {
  if (backend.dim != target.dim()) throw std::invalid_argument("imhr step: dimension mismatch");
  const Vec y = backend.draw(state.rng);
  double log_pi_y = 0.0;
  double log_pi_bar_y = 0.0;
  try {
    log_pi_y = target.log_pi(y);
    log_pi_bar_y = target.log_pi_bar(y);
  } catch (const std::domain_error&) {
    ++state.steps;
    ++state.flagged_proposals;
    return false;
  }
  const double log_alpha =
      std::min(0.0, (log_pi_bar_y + state.log_pi_x) - (state.log_pi_bar_x + log_pi_y));
  ++state.steps;
  const bool accept = std::log(state.rng.uniform()) <= log_alpha;
  if (accept) {
    state.x = y;
    state.log_pi_x = log_pi_y;
    state.log_pi_bar_x = log_pi_bar_y;
    ++state.accepts;
  }
  return accept;
}

std::vector<IntPoint> imhr_run(ChainState& state, const ProposalBackend& backend,
                               const SigmoidTarget& target, std::uint64_t burn_in,
                               std::uint64_t n_samples, std::uint64_t thin) {
  if (n_samples == 0 || thin == 0) throw std::invalid_argument("imhr run: n_samples and thin must be positive");
  for (std::uint64_t t = 0; t < burn_in; ++t) imhr_step(state, backend, target);
  std::vector<IntPoint> out;
  out.reserve(n_samples);
  for (std::uint64_t s = 0; s < n_samples; ++s) {
    for (std::uint64_t t = 0; t < thin; ++t) imhr_step(state, backend, target);
    out.push_back(round_nearest(state.x));
  }
  return out;
}

std::vector<IntPoint> imhr_run(const SigmoidTarget& target, const ProposalBackend& backend,
                               const Vec& x0, std::uint64_t burn_in, std::uint64_t n_samples,
                               std::uint64_t thin, std::uint64_t seed, ChainState* final_state) {
  ChainState state = make_chain_state(target, x0, seed);
  auto out = imhr_run(state, backend, target, burn_in, n_samples, thin);
  if (final_state != nullptr) *final_state = std::move(state);
  return out;
}

}  // namespace latsamp
