#pragma once

#include <cstdint>
#include <span>

namespace localflow {

// SplitMix64 finalizer (Steele, Lea, Flood). Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seeded hash of a token sequence. Pure function of (seed, tokens): the same
// on every platform and in every process.
constexpr std::uint64_t sequence_hash(std::uint64_t seed,
                                      std::span<const std::int64_t> tokens) noexcept {
  std::uint64_t h = mix64(seed ^ 0x243f6a8885a308d3ULL);
  for (const std::int64_t t : tokens) {
    h = mix64(h ^ mix64(static_cast<std::uint64_t>(t) + 0x9e3779b97f4a7c15ULL));
  }
  return mix64(h ^ static_cast<std::uint64_t>(tokens.size()));
}

// Deterministic generator with a platform-independent bounded draw (the
// std distributions are implementation-defined).
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  // Uniform in [0, bound), bound > 0, by rejection.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

  // Uniform in [0, 1) with 53 bits.
  constexpr double unit() noexcept {
    return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
  }

 private:
  std::uint64_t state_;
};

}  // namespace localflow
