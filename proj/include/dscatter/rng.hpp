#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace dscatter {

// SplitMix64 (Steele/Lea/Flood finalizer constants). Pinned here instead of
// using <random> because the standard distributions are not bit-portable and
// every seeded generator in this project is part of a reproducibility
// contract: same seed, same instance, on any platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound >= 1, unbiased via rejection sampling.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0ULL - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Independent child stream k. The derivation is observable through every
  // generated instance, so it is frozen: child state = next output of a
  // probe stream offset by (k+1) golden-ratio steps.
  SplitMix64 split(std::uint64_t k) const {
    SplitMix64 probe(state_ + 0x9E3779B97F4A7C15ULL * (k + 1));
    return SplitMix64(probe.next());
  }

  // Fisher-Yates, walking the high index down.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[next_below(i)]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace dscatter
