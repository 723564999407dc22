// Copyright 2026 The entdyn authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>

#include "entdyn/rng.hpp"
#include "entdyn/states.hpp"

namespace entdyn {

/// Haar-uniform bipartite pure state: dA*dB independent standard complex
/// Gaussian amplitudes, normalized. Unitarily invariant by construction.
/// Deterministic per (seed, index) via the GaussianStream substream rule, so
/// sample i of a sweep is the same state no matter how work is scheduled.
PureState sample_haar_pure(std::size_t dim_a, std::size_t dim_b,
                           std::uint64_t seed, std::uint64_t index);

}  // namespace entdyn
