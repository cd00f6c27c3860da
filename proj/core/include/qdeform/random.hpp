#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qdeform {

/// Seeded generator for the randomized verification suites.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Floating-point draws take the top 53 bits of each word rather
/// than going through std::uniform_real_distribution, whose algorithm is
/// implementation-defined, so a given seed yields the same cases on every
/// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Log-uniform on [lo, hi), lo > 0.
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  /// Uniform integer on [lo, hi].
  std::uint64_t integer(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    return lo + static_cast<std::uint64_t>(unit() * static_cast<double>(span));
  }

  /// True with probability p.
  bool chance(double p) { return unit() < p; }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qdeform
