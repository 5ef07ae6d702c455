#include "rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace medoid {

int64_t Rng::below(int64_t n) {
  if (n <= 0) throw std::invalid_argument("Rng::below: n must be positive");
  const uint64_t un = static_cast<uint64_t>(n);
  // Largest multiple of n that fits in 64 bits; values at or above it would
  // bias the modulo and are redrawn.
  const uint64_t rem = (std::numeric_limits<uint64_t>::max() % un + 1) % un;
  const uint64_t zone = std::numeric_limits<uint64_t>::max() - rem;
  for (;;) {
    const uint64_t x = next_u64();
    if (x <= zone) return static_cast<int64_t>(x % un);
  }
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();  // log(0) guard
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

void Rng::shuffle(std::vector<int64_t>& v) {
  for (int64_t i = static_cast<int64_t>(v.size()) - 1; i > 0; --i) {
    const int64_t j = below(i + 1);
    std::swap(v[i], v[j]);
  }
}

std::vector<int64_t> Rng::permutation(int64_t n) {
  if (n < 0) throw std::invalid_argument("Rng::permutation: n must be >= 0");
  std::vector<int64_t> v(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) v[i] = i;
  shuffle(v);
  return v;
}

std::vector<int64_t> Rng::sample_without_replacement(int64_t n, int64_t k) {
  if (k < 0 || k > n) {
    throw std::invalid_argument("Rng::sample_without_replacement: need 0 <= k <= n");
  }
  // Partial Fisher-Yates from the front: the first k slots end up exactly as
  // the prefix of a full uniform shuffle.
  std::vector<int64_t> v(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) v[i] = i;
  for (int64_t i = 0; i < k; ++i) {
    const int64_t j = i + below(n - i);
    std::swap(v[i], v[j]);
  }
  v.resize(static_cast<size_t>(k));
  return v;
}

}  // namespace medoid
