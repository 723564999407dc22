// Copyright 2026 The entdyn authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "entdyn/filtering.hpp"
#include "entdyn/states.hpp"

namespace entdyn {

/// Concurrence of a bipartite state. Nonnegative, at most
/// sqrt(2 (1 - 1/min(dA, dB))).
struct ConcurrenceValue {
  double value = 0.0;
};

/// G-concurrence of a d x d state, in [0, 1]. Vanishes unless the state
/// occupies all d dimensions of both subsystems.
struct GConcurrenceValue {
  double value = 0.0;
};

/// sqrt(2 (1 - tr rho_A^2)) from the reduced state. Any bipartition.
ConcurrenceValue concurrence_pure(const PureState& s);

/// 2 |det chi| for a 2x2 coefficient matrix.
ConcurrenceValue concurrence_pure_det(const PureState& s);

/// Wootters' closed form for a normalized two-qubit density matrix,
/// max{0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)} with l_i the descending
/// eigenvalues of rho rho~, rho~ = (sy (x) sy) rho* (sy (x) sy), conjugation
/// in the computational product basis. Evaluated on the similar Hermitian
/// PSD matrix sqrt(rho) rho~ sqrt(rho) so only the Hermitian eigensolver is
/// needed.
ConcurrenceValue concurrence_wootters(const DensityMatrix& rho);

/// d |det chi|^(2/d) for a d x d coefficient matrix.
GConcurrenceValue gconcurrence_pure(const PureState& s);

/// Concurrence after filtering a two-qubit pure state:
/// |det M| / ||(M (x) I)|psi>||^2 times the input concurrence.
ConcurrenceValue predict_filtered_concurrence_pure(ConcurrenceValue c0,
                                                   const FilterOperation& f,
                                                   const PureState& s);

/// Concurrence after filtering a two-qubit mixed state:
/// |det M| / tr[(M (x) I) rho (M (x) I)^dag] times the input concurrence.
ConcurrenceValue predict_filtered_concurrence_mixed(ConcurrenceValue c0,
                                                    const FilterOperation& f,
                                                    const DensityMatrix& rho);

/// Peres-Horodecki test, necessary and sufficient for 2x2: true iff the
/// partial transpose has no eigenvalue below the PSD floor.
bool ppt_is_separable(const DensityMatrix& rho);

/// With vanishing G-concurrence, concurrence reaches at most
/// sqrt(1 - 1/(d-1)^2) of its maximal value. Defined for d >= 3.
double concurrence_threshold(std::size_t d);

/// Largest pure-state concurrence in d x d: sqrt(2 (1 - 1/d)).
double max_pure_concurrence(std::size_t d);

}  // namespace entdyn
