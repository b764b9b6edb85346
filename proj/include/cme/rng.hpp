#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>

namespace cme {

// Deterministic randomness for reproducible experiments. The generator
// algorithms are fixed here (not delegated to the standard library, whose
// distributions are implementation-defined) so that a given seed produces
// the same stream on every platform.

/// splitmix64 finalizer; also used as the seed-mixing hash.
inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Folds a tuple of 64-bit values into one seed: acc = mix64(acc ^ part),
/// starting from a fixed constant. Order-sensitive by construction.
inline constexpr std::uint64_t derive_seed(
    std::initializer_list<std::uint64_t> parts) noexcept {
  std::uint64_t acc = 0x2545f4914f6cdd1dULL;
  for (std::uint64_t p : parts) acc = mix64(acc ^ p);
  return acc;
}

/// xoshiro256** 1.0 (Blackman & Vigna, public domain), state expanded from a
/// 64-bit seed with splitmix64.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr Xoshiro256(std::uint64_t seed = 0) noexcept {
    std::uint64_t sm = seed;
    for (auto& word : state_) {
      sm += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = sm;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      word = z ^ (z >> 31);
    }
  }

  constexpr std::uint64_t operator()() noexcept {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  static constexpr std::uint64_t min() noexcept { return 0; }
  static constexpr std::uint64_t max() noexcept { return ~0ULL; }

  /// Unbiased integer in [0, n). Lemire's multiply-shift rejection method;
  /// n must be positive.
  std::uint64_t below(std::uint64_t n) noexcept {
    unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      const std::uint64_t cutoff = (0 - n) % n;
      while (lo < cutoff) {
        m = static_cast<unsigned __int128>((*this)()) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform double in [0, 1).
  double unit() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t state_[4]{};
};

/// Uniformly random element of a non-empty candidate list.
template <typename T>
inline T pick_uniform(std::span<const T> candidates, Xoshiro256& rng) {
  if (candidates.size() == 1) return candidates[0];
  return candidates[rng.below(candidates.size())];
}

}  // namespace cme
