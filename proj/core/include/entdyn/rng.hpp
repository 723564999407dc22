// Copyright 2026 The entdyn authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <random>

#include "entdyn/matrix.hpp"

namespace entdyn {

/// Name/version of the deterministic random stream. A given (seed, index)
/// pair always yields the same stream for a fixed version, so parallel
/// workers reproduce the serial record order exactly.
inline constexpr const char* kRngVersion = "entdyn-rng/1";

/// Deterministic Gaussian stream.
///
/// Stream-splitting rule: substream(seed, index) seeds an mt19937_64 engine
/// with splitmix64(seed ^ (0x9e3779b97f4a7c15 * (index + 1))). Normal
/// deviates come from Box-Muller over 53-bit uniforms, so the whole stream is
/// a pure function of (seed, index).
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed);
  static GaussianStream substream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53-bit resolution.
  double next_unit();

  /// Standard normal deviate (Box-Muller; pairs are cached).
  double normal();

  /// Complex with independent standard normal real and imaginary parts.
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace entdyn
