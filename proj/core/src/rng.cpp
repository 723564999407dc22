// Copyright 2026 The entdyn authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "entdyn/rng.hpp"

#include <cmath>
#include <numbers>

namespace entdyn {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

GaussianStream::GaussianStream(std::uint64_t seed)
    : engine_(splitmix64(seed)) {}

GaussianStream GaussianStream::substream(std::uint64_t seed,
                                         std::uint64_t index) {
  return GaussianStream(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
}

double GaussianStream::next_unit() {
  return double(engine_() >> 11) * 0x1.0p-53;
}

double GaussianStream::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double u1 = 1.0 - next_unit();  // (0, 1], keeps the log finite
  const double u2 = next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(theta);
  has_cached_ = true;
  return r * std::cos(theta);
}

Complex GaussianStream::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im);
}

}  // namespace entdyn
