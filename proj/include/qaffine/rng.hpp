#pragma once

#include <cstdint>

namespace qaffine {

/// Deterministic 64-bit generator (splitmix64). Used instead of the standard
/// <random> engines so that a seed produces identical draws on every
/// platform and standard library, which the reproducibility contract of the
/// measurement sampling relies on.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). bound must be nonzero.
  std::uint32_t next_below(std::uint32_t bound) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

  /// Independent stream for one shot of a sampled experiment. Shots seeded
  /// this way can run in any order (or in parallel) with identical results.
  static Rng for_shot(std::uint64_t seed, std::uint64_t shot) {
    Rng mixer(seed);
    std::uint64_t a = mixer.next_u64();
    Rng shot_mixer(a ^ (shot * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull));
    return Rng(shot_mixer.next_u64());
  }

private:
  std::uint64_t state_;
};

}  // namespace qaffine
