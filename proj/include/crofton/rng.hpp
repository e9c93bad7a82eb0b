#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "crofton/minkowski.hpp"

namespace crofton {

/// Counter-based Philox4x32-10 generator (Salmon et al., SC 2011).
///
/// A (seed, stream) pair selects an independent substream; the position
/// within a stream is the 64-bit block counter. Identical (seed, stream,
/// draw sequence) gives identical output on every platform, independent
/// of how work is scheduled across threads.
class Philox {
 public:
  Philox(std::uint64_t seed, std::uint64_t stream)
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)},
        counter_{0, 0, static_cast<std::uint32_t>(stream),
                 static_cast<std::uint32_t>(stream >> 32)} {}

  std::uint32_t next_u32() {
    if (pos_ == 4) {
      block_ = round10(counter_, key_);
      bump_counter();
      pos_ = 0;
    }
    return block_[pos_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
  }

  /// Uniform double in [0,1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal deviate (Box-Muller, second value cached).
  double next_normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double u1 = 1.0 - next_double();  // (0,1]
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  /// Uniform point on S^{n-1}, written into the n leading entries of out.
  void next_unit_sphere(int n, Vec& out) {
    double norm2;
    do {
      norm2 = 0.0;
      for (int i = 0; i < n; ++i) {
        const double z = next_normal();
        out[i] = z;
        norm2 += z * z;
      }
    } while (norm2 < 1e-24);
    const double inv = 1.0 / std::sqrt(norm2);
    for (int i = 0; i < n; ++i) out[i] *= inv;
  }

 private:
  static constexpr std::uint32_t kW32A = 0x9E3779B9u;
  static constexpr std::uint32_t kW32B = 0xBB67AE85u;
  static constexpr std::uint32_t kM4x32A = 0xD2511F53u;
  static constexpr std::uint32_t kM4x32B = 0xCD9E8D57u;

  static void mul_hilo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo,
                       std::uint32_t& hi) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(p);
    hi = static_cast<std::uint32_t>(p >> 32);
  }

  static std::array<std::uint32_t, 4> round10(std::array<std::uint32_t, 4> c,
                                              std::array<std::uint32_t, 2> k) {
    for (int r = 0; r < 10; ++r) {
      std::uint32_t lo0, hi0, lo1, hi1;
      mul_hilo(kM4x32A, c[0], lo0, hi0);
      mul_hilo(kM4x32B, c[2], lo1, hi1);
      c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
      k[0] += kW32A;
      k[1] += kW32B;
    }
    return c;
  }

  void bump_counter() {
    if (++counter_[0] == 0) ++counter_[1];  // 64-bit position, never wraps streams
  }

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> counter_;
  std::array<std::uint32_t, 4> block_{};
  int pos_ = 4;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

/// splitmix64 finalizer, used to derive well-separated seeds for suite rows.
inline std::uint64_t mix_u64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a,
                                 std::uint64_t b = 0) {
  return mix_u64(seed ^ mix_u64(a ^ mix_u64(b)));
}

}  // namespace crofton
