// Copyright 2026 The entdyn authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "entdyn/channels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "entdyn/rng.hpp"

namespace entdyn {

QuantumChannel::QuantumChannel(std::size_t dim_in, std::size_t dim_out,
                               std::vector<ComplexMatrix> kraus)
    : dim_in_(dim_in), dim_out_(dim_out), kraus_(std::move(kraus)),
      trace_preserving_(false) {
  if (dim_in_ == 0 || dim_out_ == 0) {
    throw std::invalid_argument("QuantumChannel: dimensions must be positive");
  }
  if (kraus_.empty()) {
    throw std::invalid_argument("QuantumChannel: needs at least one Kraus operator");
  }
  for (const ComplexMatrix& k : kraus_) {
    if (k.rows() != dim_out_ || k.cols() != dim_in_) {
      throw std::invalid_argument(
          "QuantumChannel: Kraus operator is " + std::to_string(k.rows()) +
          "x" + std::to_string(k.cols()) + ", expected " +
          std::to_string(dim_out_) + "x" + std::to_string(dim_in_));
    }
    if (!all_finite(k)) {
      throw std::invalid_argument(
          "QuantumChannel: non-finite Kraus entries are not admitted");
    }
  }
  ComplexMatrix sum(dim_in_, dim_in_);
  for (const ComplexMatrix& k : kraus_) sum = sum + adjoint(k) * k;
  const ComplexMatrix eye = ComplexMatrix::identity(dim_in_);
  if (frobenius_norm(sum - eye) <= tol::hermitian) {
    trace_preserving_ = true;
    return;
  }
  const EigenSystem es = hermitian_eig(sum);
  if (es.values.front() > 1.0 + tol::hermitian) {
    throw std::invalid_argument(
        "QuantumChannel: sum K^dag K exceeds the identity (largest eigenvalue " +
        std::to_string(es.values.front()) + ")");
  }
}

QuantumChannel QuantumChannel::from_kraus(std::vector<ComplexMatrix> kraus) {
  if (kraus.empty()) {
    throw std::invalid_argument("QuantumChannel: needs at least one Kraus operator");
  }
  const std::size_t in = kraus.front().cols();
  const std::size_t out = kraus.front().rows();
  return QuantumChannel(in, out, std::move(kraus));
}

QuantumChannel identity_channel(std::size_t d) {
  return QuantumChannel(d, d, {ComplexMatrix::identity(d)});
}

namespace {

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + ": p = " +
                                std::to_string(p) + " outside [0, 1]");
  }
}

}  // namespace

QuantumChannel phase_damping(double p) {
  require_probability(p, "phase_damping");
  ComplexMatrix k0 = std::sqrt(1.0 - p) * ComplexMatrix::identity(2);
  ComplexMatrix k1(2, 2), k2(2, 2);
  k1(0, 0) = std::sqrt(p);
  k2(1, 1) = std::sqrt(p);
  return QuantumChannel(2, 2, {std::move(k0), std::move(k1), std::move(k2)});
}

QuantumChannel amplitude_damping(double p) {
  require_probability(p, "amplitude_damping");
  ComplexMatrix k0(2, 2), k1(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - p);
  k1(0, 1) = std::sqrt(p);
  return QuantumChannel(2, 2, {std::move(k0), std::move(k1)});
}

QuantumChannel random_channel(std::size_t d, std::size_t n_kraus,
                              std::uint64_t seed) {
  if (d < 2 || n_kraus < 1) {
    throw std::invalid_argument("random_channel: need d >= 2 and n_kraus >= 1");
  }
  const std::size_t rows = n_kraus * d;
  GaussianStream g(seed);

  // Columns of a Gaussian matrix, orthonormalized by two-pass modified
  // Gram-Schmidt: the result is an exact-to-roundoff Stinespring isometry.
  std::vector<std::vector<Complex>> cols(d, std::vector<Complex>(rows));
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < rows; ++r) cols[c][r] = g.complex_normal();

  for (std::size_t c = 0; c < d; ++c) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < c; ++k) {
        Complex proj{};
        for (std::size_t r = 0; r < rows; ++r)
          proj += std::conj(cols[k][r]) * cols[c][r];
        for (std::size_t r = 0; r < rows; ++r)
          cols[c][r] -= proj * cols[k][r];
      }
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < rows; ++r) norm += std::norm(cols[c][r]);
    norm = std::sqrt(norm);
    if (norm < 1e-12) {
      // Essentially impossible for Gaussian draws; redraw to stay safe.
      for (std::size_t r = 0; r < rows; ++r) cols[c][r] = g.complex_normal();
      --c;
      continue;
    }
    for (std::size_t r = 0; r < rows; ++r) cols[c][r] /= norm;
  }

  std::vector<ComplexMatrix> kraus;
  kraus.reserve(n_kraus);
  for (std::size_t i = 0; i < n_kraus; ++i) {
    ComplexMatrix k(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) k(r, c) = cols[c][i * d + r];
    kraus.push_back(std::move(k));
  }
  return QuantumChannel(d, d, std::move(kraus));
}

QuantumChannel compose(const QuantumChannel& after,
                       const QuantumChannel& before) {
  if (before.dim_out() != after.dim_in()) {
    throw std::invalid_argument("compose: channel dimensions do not chain");
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(after.kraus().size() * before.kraus().size());
  for (const ComplexMatrix& a : after.kraus())
    for (const ComplexMatrix& b : before.kraus()) kraus.push_back(a * b);
  return QuantumChannel(before.dim_in(), after.dim_out(), std::move(kraus));
}

DensityMatrix apply_channel(const DensityMatrix& rho,
                            const QuantumChannel& ch, Side side) {
  const std::size_t sub = side == Side::A ? rho.dim_a() : rho.dim_b();
  if (ch.dim_in() != sub) {
    throw std::invalid_argument(
        "apply_channel: channel acts on dimension " +
        std::to_string(ch.dim_in()) + " but subsystem has dimension " +
        std::to_string(sub));
  }
  const std::size_t out_a = side == Side::A ? ch.dim_out() : rho.dim_a();
  const std::size_t out_b = side == Side::B ? ch.dim_out() : rho.dim_b();
  ComplexMatrix out(out_a * out_b, out_a * out_b);
  for (const ComplexMatrix& k : ch.kraus()) {
    const ComplexMatrix g =
        side == Side::A ? kron(k, ComplexMatrix::identity(rho.dim_b()))
                        : kron(ComplexMatrix::identity(rho.dim_a()), k);
    out = out + g * rho.rho() * adjoint(g);
  }
  out = 0.5 * (out + adjoint(out));
  if (ch.trace_preserving() && rho.is_normalized()) {
    return DensityMatrix::normalized(out_a, out_b, std::move(out));
  }
  return DensityMatrix::unnormalized(out_a, out_b, std::move(out));
}

DensityMatrix choi_state(const QuantumChannel& ch) {
  return choi_state_on_side(ch, Side::B);
}

DensityMatrix choi_state_on_side(const QuantumChannel& ch, Side side) {
  const DensityMatrix phi = pure_to_density(bell_phi_plus(ch.dim_in()));
  return apply_channel(phi, ch, side);
}

}  // namespace entdyn
