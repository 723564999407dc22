// Copyright 2026 The entdyn authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "entdyn/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace entdyn {

namespace {

void require_shape(const ComplexMatrix& m, std::size_t rows, std::size_t cols,
                   const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw std::invalid_argument(std::string(what) + ": matrix is " +
                                std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", expected " +
                                std::to_string(rows) + "x" +
                                std::to_string(cols));
  }
  if (!all_finite(m)) {
    throw std::invalid_argument(std::string(what) +
                                ": non-finite entries are not admitted");
  }
}

}  // namespace

PureState::PureState(std::size_t dim_a, std::size_t dim_b, ComplexMatrix chi)
    : dim_a_(dim_a), dim_b_(dim_b), chi_(std::move(chi)) {
  if (dim_a_ == 0 || dim_b_ == 0) {
    throw std::invalid_argument("PureState: dimensions must be positive");
  }
  require_shape(chi_, dim_a_, dim_b_, "PureState");
  const double n = frobenius_norm(chi_);
  if (std::abs(n - 1.0) > tol::norm_one) {
    throw std::invalid_argument("PureState: coefficient matrix has norm " +
                                std::to_string(n) + ", expected 1");
  }
}

PureState PureState::normalized(std::size_t dim_a, std::size_t dim_b,
                                ComplexMatrix chi) {
  require_shape(chi, dim_a, dim_b, "PureState::normalized");
  const double n = frobenius_norm(chi);
  if (n * n <= tol::annihilated) {
    throw std::invalid_argument("PureState::normalized: vanishing state");
  }
  return PureState(dim_a, dim_b, (1.0 / n) * chi);
}

PureState bell_phi_plus(std::size_t d) {
  if (d < 2) {
    throw std::invalid_argument("bell_phi_plus: dimension must be >= 2");
  }
  return PureState(d, d, (1.0 / std::sqrt(double(d))) *
                             ComplexMatrix::identity(d));
}

DensityMatrix::DensityMatrix(std::size_t dim_a, std::size_t dim_b,
                             ComplexMatrix rho, bool normalized)
    : dim_a_(dim_a), dim_b_(dim_b), rho_(std::move(rho)),
      normalized_(normalized) {
  if (dim_a_ == 0 || dim_b_ == 0) {
    throw std::invalid_argument("DensityMatrix: dimensions must be positive");
  }
  const std::size_t d = dim_a_ * dim_b_;
  require_shape(rho_, d, d, "DensityMatrix");
  const double herm_err = max_abs_diff(rho_, adjoint(rho_));
  if (herm_err > tol::hermitian) {
    throw std::invalid_argument(
        "DensityMatrix: not Hermitian (max |rho - rho^dag| = " +
        std::to_string(herm_err) + ")");
  }
  const EigenSystem es = hermitian_eig(rho_);
  if (es.values.back() < tol::psd_floor) {
    throw std::invalid_argument("DensityMatrix: eigenvalue " +
                                std::to_string(es.values.back()) +
                                " below the PSD floor");
  }
  if (normalized_) {
    const double t = trace(rho_).real();
    if (std::abs(t - 1.0) > tol::trace_one) {
      throw std::invalid_argument("DensityMatrix: trace is " +
                                  std::to_string(t) + ", expected 1");
    }
  }
}

DensityMatrix DensityMatrix::normalized(std::size_t dim_a, std::size_t dim_b,
                                        ComplexMatrix rho) {
  return DensityMatrix(dim_a, dim_b, std::move(rho), true);
}

DensityMatrix DensityMatrix::unnormalized(std::size_t dim_a, std::size_t dim_b,
                                          ComplexMatrix rho) {
  return DensityMatrix(dim_a, dim_b, std::move(rho), false);
}

double DensityMatrix::trace_value() const { return trace(rho_).real(); }

DensityMatrix DensityMatrix::renormalized() const {
  const double t = trace_value();
  if (t <= tol::annihilated) {
    throw std::invalid_argument("DensityMatrix::renormalized: trace " +
                                std::to_string(t) + " is numerically zero");
  }
  return DensityMatrix(dim_a_, dim_b_, (1.0 / t) * rho_, true);
}

DensityMatrix pure_to_density(const PureState& s) {
  const std::size_t da = s.dim_a(), db = s.dim_b();
  const std::size_t d = da * db;
  ComplexMatrix rho(d, d);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < db; ++l)
          rho(i * db + j, k * db + l) =
              s.chi()(i, j) * std::conj(s.chi()(k, l));
  return DensityMatrix::normalized(da, db, std::move(rho));
}

double purity(const DensityMatrix& rho) {
  const double f = frobenius_norm(rho.rho());
  return f * f;
}

}  // namespace entdyn
