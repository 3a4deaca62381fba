#pragma once

#include <cstdint>
#include <random>

namespace qkit {

/// Seedable random stream with deterministic substreams.
///
/// Every randomized operation takes one of these; there is no implicit
/// entropy anywhere. Substreams are derived from the original seed (not
/// from the consumption state), so shot s of a run always sees the stream
/// for (seed, s) no matter how the parent stream was used. Uniform doubles
/// are built from the top 53 bits of the engine output, which keeps the
/// byte-identical-output contract independent of the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed, 0)) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [0, bound); bound must be positive. Unbiased.
  std::uint64_t next_below(std::uint64_t bound) {
    unsigned __int128 m =
        static_cast<unsigned __int128>(next_u64()) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (lo < threshold) {
        m = static_cast<unsigned __int128>(next_u64()) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Independent stream for (seed, index).
  Rng substream(std::uint64_t index) const {
    return Rng(mix(seed_, index + 1));
  }

 private:
  // splitmix64 finalizer over the (seed, index) pair.
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace qkit
