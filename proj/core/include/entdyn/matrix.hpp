// Copyright 2026 The entdyn authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace entdyn {

using Complex = std::complex<double>;

/// Dense complex matrix in row-major order. The single numeric carrier for
/// coefficient matrices, density operators and Kraus operators. Sized for
/// small systems (up to ~100x100); no blocking, no sparsity.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<Complex>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  const std::vector<Complex>& entries() const { return data_; }

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const Complex& s, const ComplexMatrix& a);
ComplexMatrix operator*(double s, const ComplexMatrix& a);

ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix conjugate(const ComplexMatrix& a);
ComplexMatrix adjoint(const ComplexMatrix& a);

Complex trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool all_finite(const ComplexMatrix& a);

}  // namespace entdyn
