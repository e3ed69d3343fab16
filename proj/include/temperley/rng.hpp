#ifndef TEMPERLEY_RNG_HPP
#define TEMPERLEY_RNG_HPP

#include <cstdint>
#include <vector>

#include "temperley/rational.hpp"

namespace temperley {

// Counter-based SplitMix64. The state advances by the golden-gamma constant
// and each output is a finalized mix of the counter, so the k-th output is a
// pure function of (seed, k) on every platform. split() derives an
// independent stream by mixing the child index into the state.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  SplitMix64 split(std::uint64_t child) {
    SplitMix64 r(state ^ (0x9E3779B97F4A7C15ULL * (child + 1)));
    r.next();
    return r;
  }

  bool next_bit() { return (next() >> 63) != 0; }

  // Unbiased uniform draw in [0, bound) by rejection. bound > 0.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [0, bound) for big integers: rejection over fixed-width words.
  Int below_big(const Int& bound);
};

// Draws an index with probability weights[i] / sum(weights), exactly.
// Weights must be nonnegative integers, not all zero.
std::size_t pick_weighted(SplitMix64& rng, const std::vector<Int>& weights, const Int& total);

}  // namespace temperley

#endif
