#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "rng.hpp"

using medoid::Rng;

TEST_CASE("same seed reproduces the same stream") {
  Rng a(42), b(42);
  for (int i = 0; i < 16; ++i) CHECK(a.next_u64() == b.next_u64());
  Rng c(42), d(43);
  bool all_equal = true;
  for (int i = 0; i < 16; ++i) all_equal = all_equal && c.next_u64() == d.next_u64();
  CHECK_FALSE(all_equal);
}

TEST_CASE("uniform lies in [0, 1) and is centered") {
  Rng rng(7);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(std::abs(sum / n - 0.5) < 0.005);
}

TEST_CASE("below stays in range and is roughly uniform") {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) CHECK(rng.below(1) == 0);
  std::vector<int> counts(4, 0);
  const int n = 40000;
  for (int i = 0; i < n; ++i) {
    const int64_t v = rng.below(4);
    REQUIRE(v >= 0);
    REQUIRE(v < 4);
    ++counts[v];
  }
  for (int c : counts) {
    CHECK(c > 9000);
    CHECK(c < 11000);
  }
}

TEST_CASE("normal has unit variance") {
  Rng rng(3);
  double sum = 0.0, sum_sq = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / n;
  CHECK(std::abs(mean) < 0.02);
  CHECK(std::abs(sum_sq / n - mean * mean - 1.0) < 0.05);
}

TEST_CASE("permutation covers 0..n-1") {
  Rng rng(5);
  std::vector<int64_t> p = rng.permutation(10);
  REQUIRE(p.size() == 10);
  std::vector<int64_t> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  for (int64_t i = 0; i < 10; ++i) CHECK(sorted[i] == i);
  CHECK(Rng(5).permutation(0).empty());
  CHECK(Rng(5).permutation(1) == std::vector<int64_t>{0});
}

TEST_CASE("sample_without_replacement is distinct and in range") {
  Rng rng(9);
  std::vector<int64_t> s = rng.sample_without_replacement(100, 20);
  REQUIRE(s.size() == 20);
  std::vector<int64_t> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  CHECK(sorted.front() >= 0);
  CHECK(sorted.back() < 100);
}

TEST_CASE("growing a sample keeps earlier draws as a prefix") {
  // Incremental anchor growth relies on this: drawing k then k' > k anchors
  // from the same seed extends the first sample rather than replacing it.
  std::vector<int64_t> small = Rng(9).sample_without_replacement(100, 5);
  std::vector<int64_t> large = Rng(9).sample_without_replacement(100, 30);
  REQUIRE(large.size() == 30);
  for (int i = 0; i < 5; ++i) CHECK(small[i] == large[i]);
}

TEST_CASE("full sample is a permutation") {
  std::vector<int64_t> s = Rng(13).sample_without_replacement(8, 8);
  std::sort(s.begin(), s.end());
  for (int64_t i = 0; i < 8; ++i) CHECK(s[i] == i);
}
