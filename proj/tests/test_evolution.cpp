// Copyright 2026 The entdyn authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "entdyn/evolution.hpp"

#include <cmath>
#include <stdexcept>

#include "entdyn/sampling.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace entdyn;

namespace {

PureState diag_state(double a, double b) {
  ComplexMatrix chi(2, 2);
  chi(0, 0) = a;
  chi(1, 1) = b;
  return PureState::normalized(2, 2, std::move(chi));
}

QuantumChannel single_kraus(const ComplexMatrix& k) {
  return QuantumChannel::from_kraus({k});
}

// Rescale a matrix so that K^dag K <= I holds strictly.
ComplexMatrix subnormalize(const ComplexMatrix& k) {
  const EigenSystem es = hermitian_eig(adjoint(k) * k);
  return (0.95 / std::sqrt(es.values.front())) * k;
}

}  // namespace

TEST_CASE("channel_benchmark: identity, phase damping, dissipation") {
  CHECK_CLOSE(channel_benchmark(identity_channel(2)).value, 1.0, 1e-12);
  CHECK_CLOSE(channel_benchmark(phase_damping(0.5)).value, 0.5, 1e-10);
  CHECK_CLOSE(channel_benchmark(amplitude_damping(0.36)).value, 0.8, 1e-10);
  for (double p : {0.0, 0.1, 0.25, 0.7, 1.0}) {
    CHECK_CLOSE(channel_benchmark(phase_damping(p)).value, 1.0 - p, 1e-9);
    CHECK_CLOSE(channel_benchmark(amplitude_damping(p)).value,
                std::sqrt(1.0 - p), 1e-9);
    // Cross-check via the closed form for X-shaped states.
    CHECK_CLOSE(
        channel_benchmark(phase_damping(p)).value,
        oracles::x_state_concurrence(choi_state(phase_damping(p)).rho()),
        1e-10);
    CHECK_CLOSE(
        channel_benchmark(amplitude_damping(p)).value,
        oracles::x_state_concurrence(choi_state(amplitude_damping(p)).rho()),
        1e-10);
  }
}

TEST_CASE("channel_benchmark: nonincreasing in the noise strength") {
  double prev_pd = 2.0, prev_ad = 2.0;
  for (int i = 0; i <= 100; ++i) {
    const double p = double(i) / 100.0;
    const double pd = channel_benchmark(phase_damping(p)).value;
    const double ad = channel_benchmark(amplitude_damping(p)).value;
    CHECK(pd <= prev_pd + 1e-12);
    CHECK(ad <= prev_ad + 1e-12);
    prev_pd = pd;
    prev_ad = ad;
  }
}

TEST_CASE("channel_benchmark: invariant under the choice of maximally entangled state") {
  // Any (U (x) I)|phi+> carries the same benchmark information.
  for (int rep = 0; rep < 10; ++rep) {
    const QuantumChannel ch = random_channel(2, 3, 500 + rep);
    const double bench = channel_benchmark(ch).value;
    const ComplexMatrix u = random_channel(2, 1, 800 + rep).kraus().front();
    // chi of (U (x) I)|phi+> is U/sqrt(2).
    const PureState rotated(2, 2, (1.0 / std::sqrt(2.0)) * u);
    const EvolutionReport report = evolve_pure_one_sided(rotated, ch, Side::B);
    CHECK_CLOSE(report.final_concurrence, bench, 1e-9);
  }
}

TEST_CASE("evolve_pure_one_sided: |phi+> reproduces the benchmark") {
  for (double p : {0.0, 0.3, 0.8}) {
    const EvolutionReport report =
        evolve_pure_one_sided(bell_phi_plus(2), phase_damping(p), Side::B);
    CHECK(report.is_exact_regime);
    CHECK(report.final_certified);
    CHECK_CLOSE(report.initial_concurrence, 1.0, 1e-12);
    CHECK_CLOSE(report.final_concurrence, 1.0 - p, 1e-9);
    CHECK_CLOSE(report.predicted, 1.0 - p, 1e-9);
    CHECK_CLOSE(report.ratio, 1.0, 1e-8);
  }
}

TEST_CASE("evolve_pure_one_sided: worked value 0.6 * 0.75 = 0.45") {
  // chi = diag(sqrt(0.9), sqrt(0.1)) has C = 2 sqrt(0.09) = 0.6.
  const PureState s = diag_state(std::sqrt(0.9), std::sqrt(0.1));
  CHECK_CLOSE(concurrence_pure_det(s).value, 0.6, 1e-12);
  const EvolutionReport report =
      evolve_pure_one_sided(s, phase_damping(0.25), Side::B);
  CHECK_CLOSE(report.predicted, 0.45, 1e-10);
  CHECK_CLOSE(report.final_concurrence, 0.45, 1e-9);
}

TEST_CASE("evolve_pure_one_sided: product states stay at zero") {
  const PureState s = diag_state(1.0, 0.0);
  const EvolutionReport report =
      evolve_pure_one_sided(s, amplitude_damping(0.4), Side::B);
  CHECK_CLOSE(report.initial_concurrence, 0.0, 1e-12);
  CHECK_CLOSE(report.final_concurrence, 0.0, 1e-9);
  CHECK_CLOSE(report.ratio, 1.0, 1e-12);  // 0/0 convention
}

TEST_CASE("evolve_pure_one_sided: exactness over states x channels x noise") {
  // A smaller version of the full acceptance sweep.
  for (int rep = 0; rep < 50; ++rep) {
    const PureState s = sample_haar_pure(2, 2, 321, rep);
    for (int pi = 0; pi <= 10; pi += 2) {
      const double p = double(pi) / 10.0;
      for (const QuantumChannel& ch :
           {phase_damping(p), amplitude_damping(p),
            random_channel(2, 4, 7000 + pi)}) {
        for (Side side : {Side::A, Side::B}) {
          const EvolutionReport report = evolve_pure_one_sided(s, ch, side);
          CHECK(std::abs(report.final_concurrence - report.predicted) <= 1e-9);
        }
      }
    }
  }
}

TEST_CASE("evolve_pure_one_sided: rejects sub-trace-preserving channels") {
  const QuantumChannel sub =
      single_kraus(ComplexMatrix::diagonal({Complex(1.0), Complex(0.5)}));
  CHECK_THROWS_AS(evolve_pure_one_sided(bell_phi_plus(2), sub, Side::B),
                  std::invalid_argument);
}

TEST_CASE("evolve_pure_non_trace_preserving: reduces to the exact law for TP channels") {
  oracles::PolarGaussian g(51);
  for (int rep = 0; rep < 10; ++rep) {
    const PureState s = oracles::random_two_qubit_pure(g);
    const QuantumChannel ch = random_channel(2, 3, 900 + rep);
    const EvolutionReport tp = evolve_pure_one_sided(s, ch, Side::B);
    const EvolutionReport ntp = evolve_pure_non_trace_preserving(s, ch, Side::B);
    CHECK_CLOSE(ntp.state_pass_probability, 1.0, 1e-9);
    CHECK_CLOSE(ntp.benchmark_pass_probability, 1.0, 1e-9);
    CHECK_CLOSE(ntp.final_concurrence, tp.final_concurrence, 1e-10);
    CHECK_CLOSE(ntp.predicted, tp.predicted, 1e-9);
  }
}

TEST_CASE("evolve_pure_non_trace_preserving: single-Kraus channels match the filtering law") {
  oracles::PolarGaussian g(52);
  for (int rep = 0; rep < 50; ++rep) {
    const PureState s = oracles::random_two_qubit_pure(g);
    ComplexMatrix k(2, 2);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) k(r, c) = g.complex_normal();
    k = subnormalize(k);
    const Side side = rep % 2 ? Side::A : Side::B;
    const EvolutionReport report =
        evolve_pure_non_trace_preserving(s, single_kraus(k), side);
    CHECK(std::abs(report.final_concurrence - report.predicted) <= 1e-9);

    const double filter_prediction =
        predict_filtered_concurrence_pure(concurrence_pure_det(s), {k, side}, s)
            .value;
    CHECK_CLOSE(report.final_concurrence, filter_prediction, 1e-9);
  }
}

TEST_CASE("evolve_pure_non_trace_preserving: global scaling cancels") {
  const QuantumChannel half =
      single_kraus(std::sqrt(0.5) * ComplexMatrix::identity(2));
  oracles::PolarGaussian g(53);
  const PureState s = oracles::random_two_qubit_pure(g);
  const EvolutionReport report =
      evolve_pure_non_trace_preserving(s, half, Side::B);
  CHECK_CLOSE(report.state_pass_probability, 0.5, 1e-12);
  CHECK_CLOSE(report.benchmark_pass_probability, 0.5, 1e-12);
  CHECK_CLOSE(report.final_concurrence, concurrence_pure_det(s).value, 1e-9);
  CHECK_CLOSE(report.predicted, report.final_concurrence, 1e-9);

  const QuantumChannel dead = single_kraus(ComplexMatrix(2, 2));
  CHECK_THROWS_AS(evolve_pure_non_trace_preserving(s, dead, Side::B),
                  std::invalid_argument);
}

TEST_CASE("evolve_mixed_one_sided: pure inputs collapse to the exact law") {
  oracles::PolarGaussian g(54);
  for (int rep = 0; rep < 10; ++rep) {
    const PureState s = oracles::random_two_qubit_pure(g);
    const QuantumChannel ch = phase_damping(0.35);
    const EvolutionReport exact = evolve_pure_one_sided(s, ch, Side::B);
    const EvolutionReport bound =
        evolve_mixed_one_sided(pure_to_density(s), ch, Side::B);
    CHECK(!bound.is_exact_regime);
    CHECK_CLOSE(bound.final_concurrence, exact.final_concurrence, 1e-9);
    CHECK_CLOSE(bound.predicted, exact.predicted, 1e-9);
  }
}

TEST_CASE("evolve_mixed_one_sided: separable states stay at zero") {
  const DensityMatrix mixed =
      DensityMatrix::normalized(2, 2, 0.25 * ComplexMatrix::identity(4));
  const EvolutionReport report =
      evolve_mixed_one_sided(mixed, amplitude_damping(0.3), Side::B);
  CHECK_CLOSE(report.initial_concurrence, 0.0, 1e-12);
  CHECK_CLOSE(report.predicted, 0.0, 1e-12);
  CHECK_CLOSE(report.final_concurrence, 0.0, 1e-9);
  CHECK_CLOSE(report.ratio, 1.0, 1e-12);
}

TEST_CASE("evolve_mixed_one_sided: Werner q = 0.8 under phase_damping(0.3)") {
  const EvolutionReport report = evolve_mixed_one_sided(
      oracles::werner_state(0.8), phase_damping(0.3), Side::B);
  CHECK_CLOSE(report.initial_concurrence, 0.7, 1e-9);
  CHECK_CLOSE(report.predicted, 0.49, 1e-9);
  CHECK(report.final_concurrence <= report.predicted + 1e-9);
}

TEST_CASE("evolve_mixed_one_sided: bound safety on random inputs") {
  oracles::PolarGaussian g(55);
  for (int rep = 0; rep < 200; ++rep) {
    const DensityMatrix rho = oracles::random_density(2, 2, g);
    const QuantumChannel ch = rep % 2
                                  ? random_channel(2, 1 + rep % 4, 1200 + rep)
                                  : amplitude_damping(0.01 * (rep % 100));
    const EvolutionReport report =
        evolve_mixed_one_sided(rho, ch, rep % 2 ? Side::A : Side::B);
    CHECK(report.final_concurrence <= report.predicted + 1e-9);
    CHECK(report.ratio <= 1.0 + 1e-9);
  }
}

TEST_CASE("evolve_two_sided: identity on one side reduces to the one-sided bound") {
  oracles::PolarGaussian g(56);
  const DensityMatrix rho = oracles::random_density(2, 2, g);
  const QuantumChannel ch = phase_damping(0.4);
  const EvolutionReport two = evolve_two_sided(rho, ch, identity_channel(2));
  const EvolutionReport one = evolve_mixed_one_sided(rho, ch, Side::A);
  CHECK_CLOSE(two.final_concurrence, one.final_concurrence, 1e-9);
  CHECK_CLOSE(two.predicted, one.predicted, 1e-9);
}

TEST_CASE("evolve_two_sided: |phi+> under two-sided phase damping is tight") {
  for (double p : {0.1, 0.3, 0.6}) {
    const QuantumChannel ch = phase_damping(p);
    const EvolutionReport report =
        evolve_two_sided(pure_to_density(bell_phi_plus(2)), ch, ch);
    // Populations stay empty on the inner diagonal, so the final coherence
    // (1-p)^2 / 2 translates into C = (1-p)^2 exactly.
    CHECK_CLOSE(report.final_concurrence, (1.0 - p) * (1.0 - p), 1e-9);
    CHECK_CLOSE(report.predicted, (1.0 - p) * (1.0 - p), 1e-9);
    CHECK(report.final_concurrence <= report.predicted + 1e-9);
  }
}

TEST_CASE("evolve_two_sided: fully entanglement-breaking channels give zero") {
  const QuantumChannel dead = phase_damping(1.0);
  oracles::PolarGaussian g(57);
  const DensityMatrix rho = oracles::random_density(2, 2, g);
  const EvolutionReport report = evolve_two_sided(rho, dead, dead);
  CHECK_CLOSE(report.predicted, 0.0, 1e-12);
  CHECK_CLOSE(report.final_concurrence, 0.0, 1e-9);
  CHECK_CLOSE(report.ratio, 1.0, 1e-12);
}

TEST_CASE("evolve_two_sided: channel order does not matter") {
  oracles::PolarGaussian g(58);
  const DensityMatrix rho = oracles::random_density(2, 2, g);
  const QuantumChannel a = random_channel(2, 3, 61);
  const QuantumChannel b = amplitude_damping(0.45);
  const DensityMatrix ab =
      apply_channel(apply_channel(rho, a, Side::A), b, Side::B);
  const DensityMatrix ba =
      apply_channel(apply_channel(rho, b, Side::B), a, Side::A);
  CHECK(max_abs_diff(ab.rho(), ba.rho()) <= 1e-12);
}

TEST_CASE("evolution: composition of dissipative maps multiplies benchmarks") {
  oracles::PolarGaussian g(59);
  const PureState s = oracles::random_two_qubit_pure(g);
  using Family = QuantumChannel (*)(double);
  for (Family family : {Family(&phase_damping), Family(&amplitude_damping)}) {
    const QuantumChannel first = family(0.2);
    const QuantumChannel second = family(0.35);
    const QuantumChannel chained = compose(second, first);
    const EvolutionReport report = evolve_pure_one_sided(s, chained, Side::B);
    const double factored = concurrence_pure_det(s).value *
                            channel_benchmark(first).value *
                            channel_benchmark(second).value;
    CHECK_CLOSE(report.final_concurrence,
                concurrence_pure_det(s).value *
                    channel_benchmark(chained).value,
                1e-9);
    CHECK_CLOSE(report.final_concurrence, factored, 1e-9);
  }
}

TEST_CASE("evolution: near-pure initial states approach the exact law") {
  // Weak-noise regime: both the admixture and the channel strength sit at
  // 1e-4. The deficit 1 - ratio scales linearly in the admixture but like
  // 1/C^2 in the initial concurrence, so the low-concurrence tail of the
  // Haar ensemble sets the worst case; the seed is pinned accordingly.
  const double eps = 1e-4;
  for (int rep = 0; rep < 100; ++rep) {
    const PureState s = sample_haar_pure(2, 2, 6, rep);
    const ComplexMatrix mixed = (1.0 - eps) * pure_to_density(s).rho() +
                                (eps / 4.0) * ComplexMatrix::identity(4);
    const DensityMatrix rho = DensityMatrix::normalized(2, 2, mixed);
    for (const QuantumChannel& ch :
         {phase_damping(1e-4), amplitude_damping(1e-4)}) {
      const EvolutionReport report = evolve_mixed_one_sided(rho, ch, Side::B);
      CHECK(report.ratio >= 0.999);
      CHECK(report.ratio <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("gconcurrence_channel_benchmark: unitary and filtering channels") {
  const GBenchmark unitary = gconcurrence_channel_benchmark(identity_channel(3));
  CHECK(unitary.exact);
  CHECK_CLOSE(unitary.value, 1.0, 1e-12);
  CHECK_CLOSE(unitary.pass_probability, 1.0, 1e-12);

  // K = diag(1, 1, 1/2): benchmark (1/2)^(2/3) / (3/4) after renormalization.
  const QuantumChannel filter = single_kraus(
      ComplexMatrix::diagonal({Complex(1.0), Complex(1.0), Complex(0.5)}));
  const GBenchmark bench = gconcurrence_channel_benchmark(filter);
  CHECK(bench.exact);
  CHECK_CLOSE(bench.pass_probability, 0.75, 1e-12);
  CHECK_CLOSE(bench.value, std::pow(0.5, 2.0 / 3.0) / 0.75, 1e-12);

  // d = 2: the G benchmark of the named channels equals the concurrence
  // benchmark (the bound is tight there).
  for (double p : {0.0, 0.3, 0.7}) {
    CHECK_CLOSE(gconcurrence_channel_benchmark(phase_damping(p)).value,
                1.0 - p, 1e-12);
    CHECK_CLOSE(gconcurrence_channel_benchmark(amplitude_damping(p)).value,
                std::sqrt(1.0 - p), 1e-12);
  }
}

TEST_CASE("evolve_gconcurrence_pure: unitary channels preserve the value") {
  oracles::PolarGaussian g(60);
  for (std::size_t d : {2, 3, 4}) {
    const PureState s = oracles::haar_state_oracle(d, d, g);
    const QuantumChannel u = random_channel(d, 1, 70 + d);
    const EvolutionReport report = evolve_gconcurrence_pure(s, u, Side::B);
    CHECK(report.is_exact_regime);
    CHECK(report.final_certified);
    CHECK_CLOSE(report.predicted, gconcurrence_pure(s).value, 1e-10);
    CHECK_CLOSE(report.final_concurrence, gconcurrence_pure(s).value, 1e-10);
  }
}

TEST_CASE("evolve_gconcurrence_pure: the worked 3x3 filtering example") {
  const QuantumChannel filter = single_kraus(
      ComplexMatrix::diagonal({Complex(1.0), Complex(1.0), Complex(0.5)}));
  const EvolutionReport report =
      evolve_gconcurrence_pure(bell_phi_plus(3), filter, Side::B);
  CHECK(report.final_certified);
  // 3 |det(diag(1,1,1/2))/3^(3/2)|^(2/3) / (3/4) = (4/3) 2^(-2/3).
  const double expected = (4.0 / 3.0) * std::pow(2.0, -2.0 / 3.0);
  CHECK_CLOSE(expected, 0.8399473665965821, 1e-15);
  CHECK_CLOSE(report.final_concurrence, expected, 1e-12);
  CHECK(std::abs(report.final_concurrence - report.predicted) <= 1e-10);
}

TEST_CASE("evolve_gconcurrence_pure: random single-Kraus channels are exact") {
  oracles::PolarGaussian g(61);
  for (std::size_t d : {2, 3, 4}) {
    for (int rep = 0; rep < 20; ++rep) {
      const PureState s = oracles::haar_state_oracle(d, d, g);
      ComplexMatrix k(d, d);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) k(r, c) = g.complex_normal();
      k = subnormalize(k);
      const Side side = rep % 2 ? Side::A : Side::B;
      const EvolutionReport report =
          evolve_gconcurrence_pure(s, single_kraus(k), side);
      CHECK(report.final_certified);
      CHECK(std::abs(report.final_concurrence - report.predicted) <= 1e-10);
    }
  }
}

TEST_CASE("evolve_gconcurrence_pure: multi-Kraus reports are prediction-only") {
  const PureState s = bell_phi_plus(3);
  const QuantumChannel ch = random_channel(3, 3, 88);
  const EvolutionReport report = evolve_gconcurrence_pure(s, ch, Side::B);
  CHECK(!report.final_certified);
  CHECK(!report.is_exact_regime);
  CHECK(report.predicted >= 0.0);

  // Rank-deficient inputs scale any prediction to zero.
  ComplexMatrix chi(3, 3);
  chi(1, 1) = 1.0 / std::sqrt(2.0);
  chi(2, 2) = 1.0 / std::sqrt(2.0);
  const EvolutionReport zero =
      evolve_gconcurrence_pure(PureState(3, 3, chi), ch, Side::B);
  CHECK_CLOSE(zero.predicted, 0.0, 1e-12);
}

TEST_CASE("evolve_gconcurrence_bound: unitary channels, pure input") {
  oracles::PolarGaussian g(62);
  const PureState s = oracles::haar_state_oracle(3, 3, g);
  const QuantumChannel u1 = random_channel(3, 1, 90);
  const QuantumChannel u2 = random_channel(3, 1, 91);
  const EvolutionReport report = evolve_gconcurrence_bound(s, u1, u2);
  CHECK(report.final_certified);
  CHECK_CLOSE(report.final_concurrence, gconcurrence_pure(s).value, 1e-10);
  CHECK(report.final_concurrence <= report.predicted + 1e-9);
}

TEST_CASE("evolve_gconcurrence_bound: single-Kraus filters on both sides") {
  oracles::PolarGaussian g(63);
  for (int rep = 0; rep < 20; ++rep) {
    const PureState s = oracles::haar_state_oracle(3, 3, g);
    ComplexMatrix k1(3, 3), k2(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) {
        k1(r, c) = g.complex_normal();
        k2(r, c) = g.complex_normal();
      }
    const EvolutionReport report = evolve_gconcurrence_bound(
        s, single_kraus(subnormalize(k1)), single_kraus(subnormalize(k2)));
    CHECK(report.final_certified);
    CHECK(report.final_concurrence <= report.predicted + 1e-9);
  }

  // diag(1, 1, 1/2) on both sides of |phi_3> saturates the bound.
  const QuantumChannel filter = single_kraus(
      ComplexMatrix::diagonal({Complex(1.0), Complex(1.0), Complex(0.5)}));
  const EvolutionReport tight =
      evolve_gconcurrence_bound(bell_phi_plus(3), filter, filter);
  CHECK(tight.final_concurrence <= tight.predicted + 1e-9);
  CHECK_CLOSE(tight.final_concurrence, tight.predicted, 1e-9);
}

TEST_CASE("evolve_gconcurrence_bound: mixed input carries the bound alone") {
  const DensityMatrix mixed = DensityMatrix::normalized(
      3, 3, (1.0 / 9.0) * ComplexMatrix::identity(9));
  const EvolutionReport report = evolve_gconcurrence_bound(
      mixed, 0.5, identity_channel(3), identity_channel(3));
  CHECK(!report.final_certified);
  CHECK_CLOSE(report.predicted, 0.5, 1e-10);
  CHECK_THROWS_AS(evolve_gconcurrence_bound(mixed, -0.1, identity_channel(3),
                                            identity_channel(3)),
                  std::invalid_argument);
}
