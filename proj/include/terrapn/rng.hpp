#pragma once

#include <cstdint>
#include <cmath>
#include <vector>

namespace terrapn {

// SplitMix64 finalizer. All simulator noise is derived from counter hashes so
// that every operation stays a pure function of (seed, indices).
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_u64(std::uint64_t seed, std::uint64_t a,
                              std::uint64_t b = 0, std::uint64_t c = 0,
                              std::uint64_t d = 0) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ a);
  h = mix64(h ^ b);
  h = mix64(h ^ c);
  h = mix64(h ^ d);
  return h;
}

// Uniform in [0, 1) from 53 high bits.
inline double unit_from_bits(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline double hash_unit(std::uint64_t seed, std::uint64_t a,
                        std::uint64_t b = 0, std::uint64_t c = 0,
                        std::uint64_t d = 0) {
  return unit_from_bits(hash_u64(seed, a, b, c, d));
}

// Standard normal via Box-Muller on two counter hashes.
inline double hash_gauss(std::uint64_t seed, std::uint64_t a,
                         std::uint64_t b = 0, std::uint64_t c = 0,
                         std::uint64_t d = 0) {
  const double u1 = unit_from_bits(hash_u64(seed, a, b, c, d) | 1u);
  const double u2 = hash_unit(seed ^ 0x5851f42d4c957f2dULL, a, b, c, d);
  return std::sqrt(-2.0 * std::log(1.0 - u1)) * std::cos(6.283185307179586477 * u2);
}

// Sequential generator (SplitMix64 stream). Fully specified, so outputs are
// identical across platforms and standard-library versions.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(mix64(seed)) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform() { return unit_from_bits(next_u64()); }  // [0, 1)

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // [0, n)
  int uniform_int(int n) {
    return n <= 1 ? 0 : static_cast<int>(uniform() * n) % n;
  }

  double gauss() {
    const double u1 = unit_from_bits(next_u64() | 1u);
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(1.0 - u1)) *
           std::cos(6.283185307179586477 * u2);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      const int j = uniform_int(i + 1);
      std::swap(v[i], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace terrapn
