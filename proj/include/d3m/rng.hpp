#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

#include "d3m/errors.hpp"

namespace d3m {

inline constexpr uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

inline constexpr uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// FNV-1a, used for seed stream tags and file digests.
inline constexpr uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Derives an independent child seed for a named stream.
inline constexpr uint64_t derive_seed(uint64_t seed, uint64_t stream) {
  return mix64(seed ^ mix64(stream + kGoldenGamma));
}

inline constexpr uint64_t derive_seed(uint64_t seed, std::string_view stream) {
  return derive_seed(seed, fnv1a64(stream));
}

// Counter-based generator: draw i of stream `seed` is splitmix64 evaluated at
// counter i. A value of (seed, counter) fully determines every draw, so a
// given seed reproduces the same stream on any platform with IEEE-754 doubles.
struct Rng {
  uint64_t seed = 0;
  uint64_t counter = 0;
  // Cached second output of the polar normal transform.
  double spare = 0.0;
  bool has_spare = false;

  Rng() = default;
  explicit Rng(uint64_t s) : seed(s) {}

  uint64_t next_u64() { return mix64(seed + (++counter) * kGoldenGamma); }

  // Uniform in [0, 1) with 53 random mantissa bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Unbiased uniform draw in [0, n).
  uint64_t next_below(uint64_t n) {
    if (n == 0) throw InvalidArgument("Rng::next_below: n must be positive");
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % n;
  }

  // Standard normal via the Marsaglia polar transform (sqrt/log only, which
  // keeps the stream stable across libm implementations in practice).
  double next_normal() {
    if (has_spare) {
      has_spare = false;
      return spare;
    }
    double u, v, s;
    do {
      u = 2.0 * next_double() - 1.0;
      v = 2.0 * next_double() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare = v * m;
    has_spare = true;
    return u * m;
  }
};

// In-place Fisher-Yates shuffle.
template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (size_t i = items.size(); i > 1; --i) {
    const size_t j = static_cast<size_t>(rng.next_below(i));
    std::swap(items[i - 1], items[j]);
  }
}

// Draws m distinct indices from [0, n), returned in ascending order.
inline std::vector<uint32_t> sample_without_replacement(size_t n, size_t m,
                                                        Rng& rng) {
  if (m > n) {
    throw InvalidArgument("sample_without_replacement: m exceeds n");
  }
  std::vector<uint32_t> pool(n);
  for (size_t i = 0; i < n; ++i) pool[i] = static_cast<uint32_t>(i);
  // Partial Fisher-Yates: the first m slots end up a uniform m-subset.
  for (size_t i = 0; i < m; ++i) {
    const size_t j = i + static_cast<size_t>(rng.next_below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(m);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace d3m
