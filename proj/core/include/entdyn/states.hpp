// Copyright 2026 The entdyn authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "entdyn/linalg.hpp"

namespace entdyn {

/// Bipartite pure state stored as its dA x dB coefficient matrix,
/// chi(i, j) = amplitude of |i>_A |j>_B. Unit Frobenius norm.
class PureState {
 public:
  /// Validates finiteness and unit norm (within tol::norm_one).
  PureState(std::size_t dim_a, std::size_t dim_b, ComplexMatrix chi);

  /// Rescales chi to unit Frobenius norm; error if the norm is ~0.
  static PureState normalized(std::size_t dim_a, std::size_t dim_b,
                              ComplexMatrix chi);

  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }
  const ComplexMatrix& chi() const { return chi_; }

 private:
  std::size_t dim_a_;
  std::size_t dim_b_;
  ComplexMatrix chi_;
};

/// Maximally entangled state sum_i |i>|i> / sqrt(d), i.e. chi = I_d / sqrt(d).
PureState bell_phi_plus(std::size_t d);

/// Hermitian PSD operator on a (dA*dB)-dimensional space with recorded
/// bipartition. Normalized instances have unit trace; the explicitly flagged
/// unnormalized variant carries outputs of non-trace-preserving maps, where
/// the trace is the probability to pass the map.
class DensityMatrix {
 public:
  static DensityMatrix normalized(std::size_t dim_a, std::size_t dim_b,
                                  ComplexMatrix rho);
  static DensityMatrix unnormalized(std::size_t dim_a, std::size_t dim_b,
                                    ComplexMatrix rho);

  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }
  std::size_t dim() const { return dim_a_ * dim_b_; }
  const ComplexMatrix& rho() const { return rho_; }
  bool is_normalized() const { return normalized_; }
  double trace_value() const;

  /// rho / tr(rho) as a normalized instance; error if the trace is ~0.
  DensityMatrix renormalized() const;

 private:
  DensityMatrix(std::size_t dim_a, std::size_t dim_b, ComplexMatrix rho,
                bool normalized);

  std::size_t dim_a_;
  std::size_t dim_b_;
  ComplexMatrix rho_;
  bool normalized_;
};

/// Rank-1 projector |chi><chi| under the shared index convention.
DensityMatrix pure_to_density(const PureState& s);

/// tr(rho^2) of a normalized state.
double purity(const DensityMatrix& rho);

}  // namespace entdyn
