#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace medoid {

// Deterministic random source. std::mt19937_64 supplies the raw bits; every
// derived draw (uniform, normal, integer range, shuffle) is implemented here
// rather than with std::*_distribution, whose output is implementation
// defined. A given seed therefore reproduces the same stream on any platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53 bits of precision.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n). Rejection sampling keeps it unbiased.
  int64_t below(int64_t n);

  // Standard normal via Box-Muller; pairs are cached.
  double normal();

  // In-place Fisher-Yates shuffle.
  void shuffle(std::vector<int64_t>& v);

  // {0..n-1} in uniformly shuffled order.
  std::vector<int64_t> permutation(int64_t n);

  // First k entries of a uniform shuffle of {0..n-1}.
  std::vector<int64_t> sample_without_replacement(int64_t n, int64_t k);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace medoid
