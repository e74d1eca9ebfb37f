#pragma once

#include <cstdint>
#include <random>

namespace abplab {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// mt19937_64 with a fixed double conversion so sample streams match across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace abplab
