// Copyright 2026 The entdyn authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "entdyn/measures.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace entdyn {

namespace {

void require_two_qubits(std::size_t dim_a, std::size_t dim_b,
                        const char* what) {
  if (dim_a != 2 || dim_b != 2) {
    throw std::invalid_argument(std::string(what) +
                                ": defined for 2x2 systems only, got " +
                                std::to_string(dim_a) + "x" +
                                std::to_string(dim_b));
  }
}

}  // namespace

ConcurrenceValue concurrence_pure(const PureState& s) {
  // rho_A = chi chi^dag; tr(rho_A^2) = ||chi chi^dag||_F^2.
  const ComplexMatrix rho_a = s.chi() * adjoint(s.chi());
  const double f = frobenius_norm(rho_a);
  const double c2 = 2.0 * (1.0 - f * f);
  return {std::sqrt(std::max(c2, 0.0))};
}

ConcurrenceValue concurrence_pure_det(const PureState& s) {
  require_two_qubits(s.dim_a(), s.dim_b(), "concurrence_pure_det");
  return {2.0 * std::abs(determinant(s.chi()))};
}

ConcurrenceValue concurrence_wootters(const DensityMatrix& rho) {
  require_two_qubits(rho.dim_a(), rho.dim_b(), "concurrence_wootters");
  if (!rho.is_normalized()) {
    throw std::invalid_argument(
        "concurrence_wootters: requires a normalized density matrix");
  }
  // sqrt(rho) rho~ sqrt(rho) factors as X X^dag with
  // X = sqrt(rho) (sy (x) sy) sqrt(rho)*, so the sqrt(l_i) are the singular
  // values of X. Reading them off X directly keeps the small ones at
  // machine accuracy instead of sqrt(eigenvalue noise).
  const ComplexMatrix root = matrix_sqrt_psd(rho.rho());
  ComplexMatrix sy2(4, 4);
  sy2(0, 3) = -1.0;
  sy2(1, 2) = 1.0;
  sy2(2, 1) = 1.0;
  sy2(3, 0) = -1.0;
  const ComplexMatrix factor = root * sy2 * conjugate(root);
  const std::vector<double> s = singular_values(factor);
  double c = s[0];
  for (std::size_t i = 1; i < s.size(); ++i) c -= s[i];
  return {std::max(c, 0.0)};
}

GConcurrenceValue gconcurrence_pure(const PureState& s) {
  if (s.dim_a() != s.dim_b()) {
    throw std::invalid_argument(
        "gconcurrence_pure: requires a square bipartition, got " +
        std::to_string(s.dim_a()) + "x" + std::to_string(s.dim_b()));
  }
  const double d = double(s.dim_a());
  const double det = std::abs(determinant(s.chi()));
  return {d * std::pow(det, 2.0 / d)};
}

ConcurrenceValue predict_filtered_concurrence_pure(ConcurrenceValue c0,
                                                   const FilterOperation& f,
                                                   const PureState& s) {
  require_two_qubits(s.dim_a(), s.dim_b(), "predict_filtered_concurrence_pure");
  const ComplexMatrix chi =
      f.side == Side::A ? f.m * s.chi() : s.chi() * transpose(f.m);
  const double norm = frobenius_norm(chi);
  const double p = norm * norm;
  if (p <= tol::annihilated) {
    throw std::invalid_argument(
        "predict_filtered_concurrence_pure: filter annihilates the state");
  }
  return {std::abs(determinant(f.m)) / p * c0.value};
}

ConcurrenceValue predict_filtered_concurrence_mixed(ConcurrenceValue c0,
                                                    const FilterOperation& f,
                                                    const DensityMatrix& rho) {
  require_two_qubits(rho.dim_a(), rho.dim_b(),
                     "predict_filtered_concurrence_mixed");
  const ComplexMatrix g =
      f.side == Side::A ? kron(f.m, ComplexMatrix::identity(rho.dim_b()))
                        : kron(ComplexMatrix::identity(rho.dim_a()), f.m);
  const double p = trace(g * rho.rho() * adjoint(g)).real() / rho.trace_value();
  if (p <= tol::annihilated) {
    throw std::invalid_argument(
        "predict_filtered_concurrence_mixed: filter annihilates the state");
  }
  return {std::abs(determinant(f.m)) / p * c0.value};
}

bool ppt_is_separable(const DensityMatrix& rho) {
  require_two_qubits(rho.dim_a(), rho.dim_b(), "ppt_is_separable");
  const ComplexMatrix pt =
      partial_transpose(rho.rho(), rho.dim_a(), rho.dim_b(), Side::B);
  const EigenSystem es = hermitian_eig(pt);
  return es.values.back() >= tol::psd_floor;
}

double concurrence_threshold(std::size_t d) {
  if (d < 3) {
    throw std::invalid_argument(
        "concurrence_threshold: defined for d >= 3 (degenerate at d = 2)");
  }
  const double dm1 = double(d) - 1.0;
  return std::sqrt(1.0 - 1.0 / (dm1 * dm1));
}

double max_pure_concurrence(std::size_t d) {
  if (d < 2) {
    throw std::invalid_argument("max_pure_concurrence: requires d >= 2");
  }
  return std::sqrt(2.0 * (1.0 - 1.0 / double(d)));
}

}  // namespace entdyn
