// Copyright 2026 The entdyn authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <vector>

#include "entdyn/states.hpp"

namespace entdyn {

/// Completely positive map on one subsystem in Kraus (operator-sum) form,
/// rho -> sum_i K_i rho K_i^dag. Construction classifies the map as
/// trace-preserving (sum K_i^dag K_i = I within tolerance) or
/// sub-trace-preserving (sum K_i^dag K_i <= I); anything beyond I is
/// rejected.
class QuantumChannel {
 public:
  QuantumChannel(std::size_t dim_in, std::size_t dim_out,
                 std::vector<ComplexMatrix> kraus);

  /// Deduces square dimensions from the first Kraus operator.
  static QuantumChannel from_kraus(std::vector<ComplexMatrix> kraus);

  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  bool trace_preserving() const { return trace_preserving_; }

 private:
  std::size_t dim_in_;
  std::size_t dim_out_;
  std::vector<ComplexMatrix> kraus_;
  bool trace_preserving_;
};

QuantumChannel identity_channel(std::size_t d);

/// Phase damping on a two-level system: coherences decay with probability p,
/// populations stay. Kraus operators sqrt(1-p) I, sqrt(p)|g><g|, sqrt(p)|e><e|
/// with |g> = |0>, |e> = |1>.
QuantumChannel phase_damping(double p);

/// Dissipation on a two-level system: an excitation is released with
/// probability p. Kraus operators |g><g| + sqrt(1-p)|e><e| and sqrt(p)|g><e|.
QuantumChannel amplitude_damping(double p);

/// Trace-preserving channel drawn by orthonormalizing the columns of an
/// (n_kraus*d) x d complex Gaussian matrix (a Stinespring isometry) and
/// slicing it into n_kraus stacked d x d blocks. Deterministic per seed.
QuantumChannel random_channel(std::size_t d, std::size_t n_kraus,
                              std::uint64_t seed);

/// Kraus composition: (after . before)(rho) = after(before(rho)).
QuantumChannel compose(const QuantumChannel& after,
                       const QuantumChannel& before);

/// sum_i (I (x) K_i) rho (I (x) K_i)^dag for side B, Kraus on the left factor
/// for side A. The output is flagged unnormalized when the channel is not
/// trace-preserving (its trace is then the probability to pass the map).
DensityMatrix apply_channel(const DensityMatrix& rho,
                            const QuantumChannel& ch, Side side);

/// Choi-Jamiolkowski dual of the channel: (I (x) ch) |phi_d><phi_d| with
/// d = dim_in. Carries every parameter of the dynamics.
DensityMatrix choi_state(const QuantumChannel& ch);

/// Choi state with the channel acting on the requested tensor factor.
DensityMatrix choi_state_on_side(const QuantumChannel& ch, Side side);

}  // namespace entdyn
