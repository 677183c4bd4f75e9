#pragma once

#include <cstdint>
#include <random>

namespace valign {

// Deterministic random helpers on top of std::mt19937_64. The standard pins
// the engine's output sequence but not the distributions, so uniform
// mappings are done by hand to keep generated corpora byte-identical across
// platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1).
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n); n must be positive.
  std::size_t next_index(std::size_t n) {
    return static_cast<std::size_t>(next_u64() % n);
  }

  // Uniform in [lo, hi], inclusive.
  std::size_t next_between(std::size_t lo, std::size_t hi) {
    return lo + next_index(hi - lo + 1);
  }

  bool chance(double p) { return next_unit() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace valign
