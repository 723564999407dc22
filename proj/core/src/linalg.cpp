// Copyright 2026 The entdyn authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "entdyn/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace entdyn {

namespace {

void require_composite(const ComplexMatrix& m, std::size_t dim_a,
                       std::size_t dim_b, const char* op) {
  const std::size_t d = dim_a * dim_b;
  if (dim_a == 0 || dim_b == 0 || m.rows() != d || m.cols() != d) {
    throw std::invalid_argument(
        std::string(op) + ": matrix is " + std::to_string(m.rows()) + "x" +
        std::to_string(m.cols()) + ", expected " + std::to_string(d) + "x" +
        std::to_string(d) + " for dA=" + std::to_string(dim_a) +
        ", dB=" + std::to_string(dim_b));
  }
}

double off_diagonal_mass(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) sum += std::norm(a(r, c));
  return std::sqrt(sum);
}

// Lexicographic order on phase-normalized eigenvector columns, used only to
// break exact eigenvalue ties deterministically.
bool column_less(const ComplexMatrix& v, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < v.rows(); ++i) {
    const Complex &x = v(i, a), &y = v(i, b);
    if (x.real() != y.real()) return x.real() < y.real();
    if (x.imag() != y.imag()) return x.imag() < y.imag();
  }
  return false;
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a,
                            std::size_t dim_b, Side traced_side) {
  require_composite(m, dim_a, dim_b, "partial_trace");
  if (traced_side == Side::B) {
    ComplexMatrix out(dim_a, dim_a);
    for (std::size_t i = 0; i < dim_a; ++i)
      for (std::size_t j = 0; j < dim_a; ++j)
        for (std::size_t k = 0; k < dim_b; ++k)
          out(i, j) += m(i * dim_b + k, j * dim_b + k);
    return out;
  }
  ComplexMatrix out(dim_b, dim_b);
  for (std::size_t k = 0; k < dim_b; ++k)
    for (std::size_t l = 0; l < dim_b; ++l)
      for (std::size_t i = 0; i < dim_a; ++i)
        out(k, l) += m(i * dim_b + k, i * dim_b + l);
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dim_a,
                                std::size_t dim_b, Side side) {
  require_composite(m, dim_a, dim_b, "partial_transpose");
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t k = 0; k < dim_b; ++k)
      for (std::size_t j = 0; j < dim_a; ++j)
        for (std::size_t l = 0; l < dim_b; ++l) {
          const Complex v = m(i * dim_b + k, j * dim_b + l);
          if (side == Side::B) {
            out(i * dim_b + l, j * dim_b + k) = v;
          } else {
            out(j * dim_b + k, i * dim_b + l) = v;
          }
        }
  return out;
}

Complex determinant(const ComplexMatrix& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("determinant: matrix is not square");
  }
  const std::size_t n = m.rows();
  ComplexMatrix a = m;
  Complex det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(a(i, k));
      if (v > best) {
        best = v;
        pivot = i;
      }
    }
    if (best == 0.0) return Complex{};
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = a(i, k) / a(k, k);
      if (f == Complex{}) continue;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

EigenSystem hermitian_eig(const ComplexMatrix& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("hermitian_eig: matrix is not square");
  }
  const double herm_err = max_abs_diff(m, adjoint(m));
  if (herm_err > tol::hermitian) {
    throw std::invalid_argument(
        "hermitian_eig: input not Hermitian (max |m - m^dag| = " +
        std::to_string(herm_err) + ")");
  }

  const std::size_t n = m.rows();
  // Work on the symmetrized copy so roundoff asymmetry cannot accumulate.
  ComplexMatrix a = 0.5 * (m + adjoint(m));
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = frobenius_norm(a);

  // Sweep to machine-level off-diagonal mass. Quadratic convergence makes
  // this at most one sweep more than the 1e-12 contract tolerance, and it
  // keeps chained spectra (matrix square roots feeding further
  // eigenproblems) inside the library-wide 1e-9 guarantees.
  constexpr double target = 1e-15;
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_diagonal_mass(a) <= target * scale) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const Complex u = apq / r;  // phase of the pivot entry
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? -1.0 : 1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex su = s * u;
        const Complex suc = s * std::conj(u);
        // A <- U^dag A U with U = [[c, -s u], [s conj(u), c]] on (p, q).
        for (std::size_t j = 0; j < n; ++j) {
          const Complex xp = a(p, j), xq = a(q, j);
          a(p, j) = c * xp + su * xq;
          a(q, j) = -suc * xp + c * xq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const Complex xp = a(i, p), xq = a(i, q);
          a(i, p) = c * xp + suc * xq;
          a(i, q) = -su * xp + c * xq;
          const Complex yp = v(i, p), yq = v(i, q);
          v(i, p) = c * yp + suc * yq;
          v(i, q) = -su * yp + c * yq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  // Phase-normalize every column: first nonzero component real positive.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const double mag = std::abs(v(i, k));
      if (mag > 1e-12) {
        const Complex phase = std::conj(v(i, k)) / mag;
        for (std::size_t j = 0; j < n; ++j) v(j, k) *= phase;
        break;
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (diag[x] != diag[y]) return diag[x] > diag[y];
    return column_less(v, x, y);
  });

  EigenSystem out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = diag[order[k]];
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t n = m.cols();
  ComplexMatrix a = m;
  const double scale = frobenius_norm(a);
  const double gram_scale = scale * scale;

  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        // 2x2 Gram block of columns p and q.
        double alpha = 0.0, beta = 0.0;
        Complex gamma{};
        for (std::size_t i = 0; i < rows; ++i) {
          alpha += std::norm(a(i, p));
          beta += std::norm(a(i, q));
          gamma += std::conj(a(i, p)) * a(i, q);
        }
        const double r = std::abs(gamma);
        off += r * r;
        if (r == 0.0 || r <= 1e-15 * gram_scale) continue;
        const Complex u = gamma / r;
        const double tau = (beta - alpha) / (2.0 * r);
        const double t = (tau >= 0.0 ? -1.0 : 1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex su = s * u;
        const Complex suc = s * std::conj(u);
        for (std::size_t i = 0; i < rows; ++i) {
          const Complex xp = a(i, p), xq = a(i, q);
          a(i, p) = c * xp + suc * xq;
          a(i, q) = -su * xp + c * xq;
        }
      }
    }
    if (std::sqrt(off) <= 1e-14 * std::max(gram_scale, 1e-300)) break;
  }

  std::vector<double> sigma(n);
  for (std::size_t q = 0; q < n; ++q) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rows; ++i) sum += std::norm(a(i, q));
    sigma[q] = std::sqrt(sum);
  }
  std::sort(sigma.begin(), sigma.end(), std::greater<>());
  return sigma;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m) {
  EigenSystem es = hermitian_eig(m);
  const std::size_t n = m.rows();
  // Eigenvalues indistinguishable from zero at machine precision are
  // clamped outright; sqrt would otherwise turn 1e-16 of roundoff into 1e-8.
  const double noise_floor =
      64.0 * 2.2e-16 * std::max(std::abs(es.values.front()), 0.0);
  std::vector<Complex> roots(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (es.values[i] < tol::psd_floor) {
      throw std::invalid_argument(
          "matrix_sqrt_psd: eigenvalue " + std::to_string(es.values[i]) +
          " below the PSD floor");
    }
    roots[i] = std::sqrt(std::max(es.values[i] >= noise_floor ? es.values[i]
                                                              : 0.0,
                                  0.0));
  }
  const ComplexMatrix s =
      es.vectors * ComplexMatrix::diagonal(roots) * adjoint(es.vectors);
  return 0.5 * (s + adjoint(s));
}

}  // namespace entdyn
