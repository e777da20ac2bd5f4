#pragma once

#include <cstdint>
#include <random>

namespace qal {

/// SplitMix64 finalizer. Used to derive independent substream seeds from a
/// base seed and a stream tag.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Seedable random source with platform-independent output.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. All derived draws (uniform doubles, bounded integers) are
/// produced by the helpers below rather than std::*_distribution, which
/// are free to differ between standard libraries.
///
/// Substream rule: stream `k` of base seed `s` is seeded with
/// mix64(s ^ mix64(k + 1)). Restart r of an annealing run uses stream r;
/// other components document their own stream tags where they split.
/// Seed of stream `stream` derived from `seed`.
constexpr std::uint64_t substream_seed(std::uint64_t seed,
                                       std::uint64_t stream) noexcept {
  return mix64(seed ^ mix64(stream + 1));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng substream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(substream_seed(seed, stream));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n). Unbiased via rejection; n must be > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  bool flip() { return (next_u64() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qal
