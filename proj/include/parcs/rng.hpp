// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 parcs contributors
//
// Deterministic random streams. A master seed plus a counter path (sensor
// index, grid cell, trial, purpose) is hashed into an independent stream key,
// so any component of a run can be regenerated in isolation and results do
// not depend on evaluation order or thread count. Distributions are written
// out explicitly because the std:: ones are implementation-defined; the
// engine (mt19937_64) is fully specified by the standard.
#pragma once

#include <cstdint>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "common.hpp"

namespace parcs {

// SplitMix64 finalizer; a good 64-bit mixer for key derivation.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed) { return mix64(seed); }

template <class... Rest>
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t counter, Rest... rest) {
  return derive_seed(mix64(seed) ^ mix64(counter ^ 0xa5a5a5a5a5a5a5a5ULL), rest...);
}

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t key) : engine_(key) {}

  std::uint64_t bits() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; pairs are cached.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * uniform01();
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  double rademacher() { return (engine_() & 1ULL) ? 1.0 : -1.0; }

  double uniform_phase() { return 2.0 * std::numbers::pi * uniform01(); }

  // Uniform integer in [0, n); rejection keeps the draw exactly uniform.
  std::uint64_t uniform_below(std::uint64_t n) {
    require(n > 0, "uniform_below: n must be positive");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t leftover = (max % n + 1) % n;  // 2^64 mod n
    std::uint64_t r = engine_();
    if (leftover != 0) {
      while (r > max - leftover) r = engine_();
    }
    return r % n;
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// A point on the complex unit circle. The modulus is nudged until it rounds
// to exactly 1.0 so that infinity norms of unimodular profiles are exact.
inline Complex unit_phase(double angle) {
  Complex z(std::cos(angle), std::sin(angle));
  for (int i = 0; i < 4 && std::abs(z) != 1.0; ++i) z /= std::abs(z);
  return z;
}

}  // namespace parcs
