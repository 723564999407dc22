// Copyright 2026 The entdyn authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "entdyn/sampling.hpp"

#include <stdexcept>

namespace entdyn {

PureState sample_haar_pure(std::size_t dim_a, std::size_t dim_b,
                           std::uint64_t seed, std::uint64_t index) {
  if (dim_a < 2 || dim_b < 2) {
    throw std::invalid_argument("sample_haar_pure: dimensions must be >= 2");
  }
  GaussianStream g = GaussianStream::substream(seed, index);
  ComplexMatrix chi(dim_a, dim_b);
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_b; ++j) chi(i, j) = g.complex_normal();
  return PureState::normalized(dim_a, dim_b, std::move(chi));
}

}  // namespace entdyn
