// Deterministic random source. All randomness in the library flows through
// one seeded mt19937_64 so that identical (input, seed) pairs reproduce
// identical runs on every platform; the bounded draw avoids the
// implementation-defined std::uniform_int_distribution.
#pragma once

#include <cstdint>
#include <random>

namespace fpdlab {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform value in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    // Rejection sampling keeps the draw exactly uniform.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = gen_();
    while (v >= limit) v = gen_();
    return v % n;
  }

  /// Uniform value in [lo, hi], inclusive.
  std::int64_t in_range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

private:
  std::mt19937_64 gen_;
};

}  // namespace fpdlab
