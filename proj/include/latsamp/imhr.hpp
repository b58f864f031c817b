#pragma once

#include <cstdint>
#include <vector>

#include "latsamp/backends.hpp"
#include "latsamp/common.hpp"
#include "latsamp/rng.hpp"
#include "latsamp/target.hpp"

namespace latsamp {

struct ChainState {
  Vec x;
  std::uint64_t steps = 0;
  std::uint64_t accepts = 0;
  std::uint64_t flagged_proposals = 0;
  double log_pi_x = 0.0;
  double log_pi_bar_x = 0.0;
  Rng rng{0};
};

ChainState make_chain_state(const SigmoidTarget& target, Vec x0, std::uint64_t seed);

// One independence-MH transition; true iff the proposal was accepted.
// A proposal with non-finite log-density is rejected and counted in
// flagged_proposals instead of raising.
bool imhr_step(ChainState& state, const ProposalBackend& backend, const SigmoidTarget& target);

// burn_in steps, then `thin` steps per emitted sample; outputs are the
// rounded chain positions. Acceptance counters accumulate in `state`.
std::vector<IntPoint> imhr_run(ChainState& state, const ProposalBackend& backend,
                               const SigmoidTarget& target, std::uint64_t burn_in,
                               std::uint64_t n_samples, std::uint64_t thin);

std::vector<IntPoint> imhr_run(const SigmoidTarget& target, const ProposalBackend& backend,
                               const Vec& x0, std::uint64_t burn_in, std::uint64_t n_samples,
                               std::uint64_t thin, std::uint64_t seed,
                               ChainState* final_state = nullptr);

}  // namespace latsamp
