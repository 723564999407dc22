// Copyright 2026 The entdyn authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <vector>

#include "entdyn/matrix.hpp"

namespace entdyn {

/// Which tensor factor of a bipartite space an operation refers to.
enum class Side { A, B };

/// Shared numerical tolerances. All laws in this library chain at most a few
/// eigendecompositions, so 1e-9 is used as the common contract tolerance.
namespace tol {
inline constexpr double hermitian = 1e-9;    // max |m - m^dag| entry
inline constexpr double psd_floor = -1e-9;   // smallest admissible eigenvalue
inline constexpr double trace_one = 1e-9;    // |tr(rho) - 1|
inline constexpr double norm_one = 1e-9;     // | ||chi||_F - 1 |
inline constexpr double jacobi_off = 1e-12;  // relative off-diagonal mass
inline constexpr double annihilated = 1e-12; // trace below which a state is gone
inline constexpr double law = 1e-9;          // factorization/bound checks
}  // namespace tol

/// Kronecker product; block (i,j) of the result equals a(i,j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace out one tensor factor of an operator on a (dA*dB)-dimensional space.
/// Tracing out side B yields a dA x dA matrix, side A a dB x dB one.
/// Composite indices follow the shared convention |i>_A |j>_B -> i*dB + j.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a,
                            std::size_t dim_b, Side traced_side);

/// Transpose the chosen tensor factor's indices. Involutive.
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dim_a,
                                std::size_t dim_b, Side side);

/// Determinant via LU decomposition with partial pivoting.
Complex determinant(const ComplexMatrix& m);

struct EigenSystem {
  std::vector<double> values;  ///< descending
  ComplexMatrix vectors;       ///< column k is the eigenvector of values[k]
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Sweeps until the off-diagonal Frobenius mass falls below
/// tol::jacobi_off * ||m||_F (cap: 100 sweeps). Eigenvalues are sorted in
/// descending order; every eigenvector is phase-normalized so that its first
/// nonzero component is real and positive, and exact ties are broken by
/// lexicographic comparison of the normalized vectors. Throws
/// std::invalid_argument if m is not Hermitian within tol::hermitian.
EigenSystem hermitian_eig(const ComplexMatrix& m);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [tol::psd_floor, 0) are clamped to zero; anything below is an error.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m);

/// Singular values (descending) by one-sided Jacobi rotations. Absolute
/// accuracy is of order eps * ||m||, which matters when small singular
/// values would otherwise be obtained as square roots of noisy eigenvalues
/// of m^dag m.
std::vector<double> singular_values(const ComplexMatrix& m);

}  // namespace entdyn
