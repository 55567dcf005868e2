#pragma once

#include <cstdint>
#include <random>

namespace jlt {

/// Seeded generator with distribution code written out by hand, so a seed
/// yields the same stream on every standard library (std::mt19937_64 is
/// fully specified; the std distributions are not).
class Rng {
public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer on [lo, hi].
  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  /// Standard normal via Box-Muller; the second variate is discarded.
  double normal();

private:
  std::mt19937_64 engine_;
};

}  // namespace jlt
