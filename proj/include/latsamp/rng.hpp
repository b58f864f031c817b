#pragma once

#include <cstdint>
#include <random>

namespace latsamp {

// One step of the splitmix64 stream: bumps the state and returns the mixed output.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Documented stream-splitting rule: the seed for stream (a, b) under a master seed
// is three chained splitmix64 steps, folding each index into the state via an odd
// multiplier and xor. Each step is a bijection of the state, so distinct (a, b)
// under one master can never collide, and the result is independent of scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
  constexpr std::uint64_t kSpread = 0xD6E8FEB86659FD93ull;
  std::uint64_t s = master;
  s = splitmix64_next(s) ^ (a * kSpread);
  s = splitmix64_next(s) ^ (b * kSpread);
  return splitmix64_next(s);
}

// Deterministic generator owned by exactly one chain. Distribution objects are
// constructed per call so every variate is a pure function of the engine stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(eng_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(eng_); }
  std::uint64_t bits() { return eng_(); }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace latsamp
