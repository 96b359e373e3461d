#pragma once

#include <cstdint>

namespace lpvar {

// splitmix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t mix_bits(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stateless counter-based generator: the draw at a given index depends only on
// (seed, index), so serial and parallel traversals agree bit for bit.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(mix_bits(seed ^ 0x5bf0f3c3e9a2d71fULL)) {}

  std::uint64_t bits(std::uint64_t index) const {
    return mix_bits(key_ + index * 0x9e3779b97f4a7c15ULL);
  }

  // Uniform draw strictly inside (0,1).
  double uniform(std::uint64_t index) const {
    return (static_cast<double>(bits(index) >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::uint64_t key_;
};

// Sequential wrapper for building seeded corpora.
class SequenceRng {
 public:
  explicit SequenceRng(std::uint64_t seed) : rng_(seed) {}

  double next_uniform() { return rng_.uniform(counter_++); }
  double next_in(double lo, double hi) { return lo + (hi - lo) * next_uniform(); }

  // Integer in [0, bound).
  int next_index(int bound) {
    return static_cast<int>(rng_.bits(counter_++) % static_cast<std::uint64_t>(bound));
  }

 private:
  CounterRng rng_;
  std::uint64_t counter_ = 0;
};

}  // namespace lpvar
