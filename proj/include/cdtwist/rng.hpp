#pragma once

#include <cstdint>

#include "cdtwist/rational.hpp"

namespace cdtwist {

/// SplitMix64: tiny deterministic generator with a platform-independent
/// stream, so seeded test runs and CLI runs are byte-for-byte reproducible
/// everywhere (std::uniform_int_distribution is not guaranteed stable across
/// standard libraries).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, n) via rejection sampling; n must be nonzero.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = n * ((~std::uint64_t(0)) / n);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  /// Uniform integer in [lo, hi], inclusive.
  long long int_in(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Small nonzero rational with numerator in [-bound, bound] and
  /// denominator in [1, den_bound]; handy for exact-identity sampling.
  Rational nonzero_rational(long long bound = 9, long long den_bound = 4) {
    long long num = 0;
    while (num == 0) num = int_in(-bound, bound);
    return Rational(static_cast<long>(num), static_cast<long>(int_in(1, den_bound)));
  }

  /// Rational in [-bound, bound] with small denominator; may be zero.
  Rational rational(long long bound = 9, long long den_bound = 4) {
    return Rational(static_cast<long>(int_in(-bound, bound)),
                    static_cast<long>(int_in(1, den_bound)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace cdtwist
