// Copyright 2026 The entdyn authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "entdyn/states.hpp"

namespace entdyn {

/// Local (generally non-unitary) operator applied to one subsystem with
/// renormalization. det m = 0 means the filter can destroy all entanglement.
struct FilterOperation {
  ComplexMatrix m;
  Side side = Side::A;
};

struct FilteredState {
  DensityMatrix state;
  double success_probability;
};

struct FilteredPureState {
  PureState state;
  double success_probability;
};

/// (M (x) I) rho (M (x) I)^dag, renormalized; the success probability is the
/// discarded normalization tr[(M (x) I) rho (M (x) I)^dag] relative to the
/// input trace. Throws if the filter annihilates the state.
FilteredState filter_state(const DensityMatrix& rho, const FilterOperation& f);

/// Same operation kept in the coefficient-matrix picture: M chi for side A,
/// chi M^T for side B.
FilteredPureState filter_pure(const PureState& s, const FilterOperation& f);

/// The filter m = sqrt(d) chi on side A, which prepares |chi> from the
/// maximally entangled state: (m (x) I) |phi_d> = |chi> exactly.
FilterOperation state_as_filter(const PureState& s);

}  // namespace entdyn
