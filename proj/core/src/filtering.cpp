// Copyright 2026 The entdyn authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "entdyn/filtering.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace entdyn {

namespace {

void require_filter_dim(const FilterOperation& f, std::size_t dim_a,
                        std::size_t dim_b) {
  if (!f.m.is_square()) {
    throw std::invalid_argument("filter: operator must be square");
  }
  if (!all_finite(f.m)) {
    throw std::invalid_argument("filter: non-finite entries are not admitted");
  }
  const std::size_t sub = f.side == Side::A ? dim_a : dim_b;
  if (f.m.rows() != sub) {
    throw std::invalid_argument("filter: operator acts on dimension " +
                                std::to_string(f.m.rows()) +
                                " but subsystem has dimension " +
                                std::to_string(sub));
  }
}

}  // namespace

FilteredState filter_state(const DensityMatrix& rho,
                           const FilterOperation& f) {
  require_filter_dim(f, rho.dim_a(), rho.dim_b());
  const ComplexMatrix g =
      f.side == Side::A ? kron(f.m, ComplexMatrix::identity(rho.dim_b()))
                        : kron(ComplexMatrix::identity(rho.dim_a()), f.m);
  ComplexMatrix out = g * rho.rho() * adjoint(g);
  out = 0.5 * (out + adjoint(out));
  const double in_trace = rho.trace_value();
  const double p = trace(out).real() / in_trace;
  if (p <= tol::annihilated) {
    throw std::invalid_argument(
        "filter_state: filter annihilates the state (success probability " +
        std::to_string(p) + ")");
  }
  return {DensityMatrix::unnormalized(rho.dim_a(), rho.dim_b(), std::move(out))
              .renormalized(),
          p};
}

FilteredPureState filter_pure(const PureState& s, const FilterOperation& f) {
  require_filter_dim(f, s.dim_a(), s.dim_b());
  const ComplexMatrix chi =
      f.side == Side::A ? f.m * s.chi() : s.chi() * transpose(f.m);
  const double n = frobenius_norm(chi);
  if (n * n <= tol::annihilated) {
    throw std::invalid_argument("filter_pure: filter annihilates the state");
  }
  return {PureState(s.dim_a(), s.dim_b(), (1.0 / n) * chi), n * n};
}

FilterOperation state_as_filter(const PureState& s) {
  if (s.dim_a() != s.dim_b()) {
    throw std::invalid_argument(
        "state_as_filter: requires a square bipartition, got " +
        std::to_string(s.dim_a()) + "x" + std::to_string(s.dim_b()));
  }
  return {std::sqrt(double(s.dim_a())) * s.chi(), Side::A};
}

}  // namespace entdyn
