#include "temperley/rng.hpp"

#include "temperley/error.hpp"

namespace temperley {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Rejection from the top of the range; expected < 2 draws.
  std::uint64_t limit = bound * (UINT64_MAX / bound);
  for (;;) {
    std::uint64_t x = next();
    if (x < limit || limit == 0) return x % bound;
  }
}

Int SplitMix64::below_big(const Int& bound) {
  if (bound <= 0) throw Error(Errc::BadParameters, "below_big needs bound > 0");
  if (bound <= UINT64_MAX) return Int(below(static_cast<std::uint64_t>(bound)));
  unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1;
  unsigned words = (bits + 63) / 64;
  for (;;) {
    Int x = 0;
    for (unsigned i = 0; i < words; ++i) x = (x << 64) | Int(next());
    x >>= (words * 64 - bits);
    if (x < bound) return x;
  }
}

std::size_t pick_weighted(SplitMix64& rng, const std::vector<Int>& weights, const Int& total) {
  Int x = rng.below_big(total);
  Int acc = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (x < acc) return i;
  }
  throw Error(Errc::BadParameters, "pick_weighted: weights do not sum to total");
}

}  // namespace temperley
