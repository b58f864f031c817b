#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace latsamp {

// Sparse experiment configuration: a field is set only where the file (or a
// flag) provided it, so later layers can tell defaults from choices.
struct ExperimentConfig {
  std::optional<std::string> experiment;
  std::optional<int> d;
  std::optional<double> sigma2;
  std::optional<int> replicas;
  std::optional<std::vector<int>> t_values;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> backend;
  std::optional<std::string> lattice;

  bool operator==(const ExperimentConfig&) const = default;
};

extern const std::vector<std::string> kExperimentNames;  // valid `experiment` values
extern const std::vector<std::string> kBackendNames;     // valid `backend` values

// key=value lines, # comments, blank lines allowed. Unknown keys, malformed
// or out-of-range values raise std::runtime_error naming the line.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config(const std::string& path);

// Inverse of parse_config_text for every set field; parse(serialize(c)) == c.
std::string serialize_config(const ExperimentConfig& cfg);

// Set fields of `overrides` win.
void merge_overrides(ExperimentConfig& base, const ExperimentConfig& overrides);

std::vector<int> parse_int_list(const std::string& text);  // "1,2,13"

}  // namespace latsamp
