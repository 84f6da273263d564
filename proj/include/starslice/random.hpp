#pragma once

#include <cstdint>
#include <random>

namespace starslice {

/// Seeded random stream. Identical seeds produce identical sequences.
/// Single-owner: share by splitting, never by reference across threads.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  double normal();
  double uniform();  // [0, 1)
  std::uint64_t next_u64() { return engine_(); }

  /// Independent child stream derived from (seed, index) only.
  RandomSource split(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace starslice
