#pragma once

// Deterministic randomness. std::mt19937_64 is fully specified by the
// standard, and bounded draws avoid std::uniform_int_distribution, whose
// algorithm is implementation-defined, so a seed reproduces across builds.

#include <cstdint>
#include <random>
#include <string_view>

#include "growthlab/groups.hpp"

namespace growthlab {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64/splitmix64-seeded";

  explicit Rng(std::uint64_t seed) : seed_(seed) {
    std::uint64_t s = seed;
    engine_.seed(splitmix64(s));
  }

  /// Independent generator for sub-stream `stream` of the same seed.
  Rng split(std::uint64_t stream) const {
    std::uint64_t s = seed_ ^ (0xD1B54A32D192ED03ull * (stream + 1));
    return Rng(splitmix64(s));
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n), n > 0, by rejection.
  std::uint64_t uniform(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
    std::uint64_t x;
    do x = engine_();
    while (x > limit);
    return x % n;
  }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

inline Key random_element(const Group& group, Rng& rng) { return group.at(rng.uniform(group.order())); }

}  // namespace growthlab
