#pragma once

#include "latsamp/config.hpp"

namespace latsamp {

// Runs the experiment named in cfg.experiment and writes its CSV artifact.
// Unset fields take the documented defaults (replicas 100000, seed 0,
// sigma2 1 except the appendix-a probe's 1/2, out "<experiment>.csv").
// Returns 0; invalid configuration raises instead, leaving no output file.
int run_experiment(const ExperimentConfig& cfg);

// Emits raw chain samples; out endings in .lsmp select the binary format.
int run_sample(const ExperimentConfig& cfg);

// Emits the uniform-ergodicity bound curve (1 - delta)^t over t_values.
int run_bound(const ExperimentConfig& cfg);

}  // namespace latsamp
