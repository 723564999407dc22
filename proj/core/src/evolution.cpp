// Copyright 2026 The entdyn authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "entdyn/evolution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace entdyn {

namespace {

struct Benchmark {
  double value;
  double pass_probability;
};

Benchmark benchmark_on_side(const QuantumChannel& ch, Side side) {
  const DensityMatrix choi = choi_state_on_side(ch, side);
  const double p = choi.trace_value();
  if (p <= tol::annihilated) {
    throw std::invalid_argument(
        "channel_benchmark: |phi+> is annihilated by the channel");
  }
  const DensityMatrix normalized =
      choi.is_normalized() ? choi : choi.renormalized();
  return {concurrence_wootters(normalized).value, p};
}

}  // namespace

double evolution_ratio(double final_value, double predicted) {
  if (predicted <= tol::annihilated && final_value <= tol::annihilated) {
    return 1.0;  // an entanglement-free evolution saturates its zero bound
  }
  return final_value / predicted;
}

ConcurrenceValue channel_benchmark(const QuantumChannel& ch) {
  return {benchmark_on_side(ch, Side::B).value};
}

EvolutionReport evolve_pure_one_sided(const PureState& s,
                                      const QuantumChannel& ch, Side side) {
  if (!ch.trace_preserving()) {
    throw std::invalid_argument(
        "evolve_pure_one_sided: channel is not trace-preserving; use "
        "evolve_pure_non_trace_preserving");
  }
  EvolutionReport report;
  report.initial_concurrence = concurrence_pure_det(s).value;
  const DensityMatrix out = apply_channel(pure_to_density(s), ch, side);
  report.final_concurrence = concurrence_wootters(out).value;
  report.predicted =
      report.initial_concurrence * benchmark_on_side(ch, side).value;
  report.ratio = evolution_ratio(report.final_concurrence, report.predicted);
  report.is_exact_regime = true;
  return report;
}

EvolutionReport evolve_pure_non_trace_preserving(const PureState& s,
                                                 const QuantumChannel& ch,
                                                 Side side) {
  EvolutionReport report;
  report.initial_concurrence = concurrence_pure_det(s).value;
  const DensityMatrix out = apply_channel(pure_to_density(s), ch, side);
  const double p_state = out.trace_value();
  if (p_state <= tol::annihilated) {
    throw std::invalid_argument(
        "evolve_pure_non_trace_preserving: state annihilated by the channel");
  }
  const Benchmark bench = benchmark_on_side(ch, side);
  report.state_pass_probability = p_state;
  report.benchmark_pass_probability = bench.pass_probability;
  report.final_concurrence = concurrence_wootters(out.renormalized()).value;
  report.predicted = report.initial_concurrence *
                     (bench.pass_probability / p_state) * bench.value;
  report.ratio = evolution_ratio(report.final_concurrence, report.predicted);
  report.is_exact_regime = true;
  return report;
}

EvolutionReport evolve_mixed_one_sided(const DensityMatrix& rho,
                                       const QuantumChannel& ch, Side side) {
  EvolutionReport report;
  report.initial_concurrence = concurrence_wootters(rho).value;
  const DensityMatrix out = apply_channel(rho, ch, side);
  const double p_state = out.trace_value();
  if (p_state <= tol::annihilated) {
    throw std::invalid_argument(
        "evolve_mixed_one_sided: state annihilated by the channel");
  }
  const Benchmark bench = benchmark_on_side(ch, side);
  report.state_pass_probability = p_state;
  report.benchmark_pass_probability = bench.pass_probability;
  report.final_concurrence =
      concurrence_wootters(out.is_normalized() ? out : out.renormalized())
          .value;
  report.predicted = report.initial_concurrence * bench.value *
                     (bench.pass_probability / p_state);
  report.ratio = evolution_ratio(report.final_concurrence, report.predicted);
  report.is_exact_regime = false;
  return report;
}

EvolutionReport evolve_two_sided(const DensityMatrix& rho,
                                 const QuantumChannel& ch_a,
                                 const QuantumChannel& ch_b) {
  EvolutionReport report;
  report.initial_concurrence = concurrence_wootters(rho).value;
  const DensityMatrix out =
      apply_channel(apply_channel(rho, ch_a, Side::A), ch_b, Side::B);
  const double p_state = out.trace_value();
  if (p_state <= tol::annihilated) {
    throw std::invalid_argument(
        "evolve_two_sided: state annihilated by the channels");
  }
  // The benchmark of the side-A map is read off (Lambda (x) I)|phi+><phi+|,
  // the side-B one off (I (x) Lambda)|phi+><phi+|.
  const Benchmark bench_a = benchmark_on_side(ch_a, Side::A);
  const Benchmark bench_b = benchmark_on_side(ch_b, Side::B);
  report.state_pass_probability = p_state;
  report.benchmark_pass_probability =
      bench_a.pass_probability * bench_b.pass_probability;
  report.final_concurrence =
      concurrence_wootters(out.is_normalized() ? out : out.renormalized())
          .value;
  report.predicted = report.initial_concurrence * bench_a.value *
                     bench_b.value *
                     (report.benchmark_pass_probability / p_state);
  report.ratio = evolution_ratio(report.final_concurrence, report.predicted);
  report.is_exact_regime = false;
  return report;
}

GBenchmark gconcurrence_channel_benchmark(const QuantumChannel& ch) {
  if (ch.dim_in() != ch.dim_out()) {
    throw std::invalid_argument(
        "gconcurrence_channel_benchmark: requires a square channel");
  }
  const double d = double(ch.dim_in());
  double det_sum = 0.0;
  double trace_sum = 0.0;
  for (const ComplexMatrix& k : ch.kraus()) {
    det_sum += std::pow(std::abs(determinant(k)), 2.0 / d);
    const double f = frobenius_norm(k);
    trace_sum += f * f / d;
  }
  if (trace_sum <= tol::annihilated) {
    throw std::invalid_argument(
        "gconcurrence_channel_benchmark: |phi_d> is annihilated");
  }
  return {det_sum / trace_sum, trace_sum, ch.kraus().size() == 1};
}

EvolutionReport evolve_gconcurrence_pure(const PureState& s,
                                         const QuantumChannel& ch, Side side) {
  if (s.dim_a() != s.dim_b()) {
    throw std::invalid_argument(
        "evolve_gconcurrence_pure: requires a square bipartition");
  }
  EvolutionReport report;
  report.initial_concurrence = gconcurrence_pure(s).value;
  const GBenchmark bench = gconcurrence_channel_benchmark(ch);

  // Pass probability of |chi> through the channel, tr[(I (x) Lambda)|chi><chi|].
  double p_state = 0.0;
  for (const ComplexMatrix& k : ch.kraus()) {
    const ComplexMatrix chi =
        side == Side::A ? k * s.chi() : s.chi() * transpose(k);
    const double f = frobenius_norm(chi);
    p_state += f * f;
  }
  if (p_state <= tol::annihilated) {
    throw std::invalid_argument(
        "evolve_gconcurrence_pure: state annihilated by the channel");
  }
  report.state_pass_probability = p_state;
  report.benchmark_pass_probability = bench.pass_probability;
  report.predicted = report.initial_concurrence *
                     (bench.pass_probability / p_state) * bench.value;

  if (bench.exact) {
    // Single Kraus operator: the output stays pure and the final value has a
    // closed form.
    const FilteredPureState out =
        filter_pure(s, {ch.kraus().front(), side});
    report.final_concurrence = gconcurrence_pure(out.state).value;
    report.ratio = evolution_ratio(report.final_concurrence, report.predicted);
    report.is_exact_regime = true;
  } else {
    report.final_certified = false;
    report.final_concurrence = 0.0;
    report.ratio = 0.0;
  }
  return report;
}

namespace {

EvolutionReport gconcurrence_bound_impl(double initial,
                                        const PureState* pure_input,
                                        const DensityMatrix& rho,
                                        const QuantumChannel& ch_a,
                                        const QuantumChannel& ch_b) {
  EvolutionReport report;
  report.initial_concurrence = initial;
  const GBenchmark bench_a = gconcurrence_channel_benchmark(ch_a);
  const GBenchmark bench_b = gconcurrence_channel_benchmark(ch_b);
  const DensityMatrix out =
      apply_channel(apply_channel(rho, ch_a, Side::A), ch_b, Side::B);
  const double p_state = out.trace_value();
  if (p_state <= tol::annihilated) {
    throw std::invalid_argument(
        "evolve_gconcurrence_bound: state annihilated by the channels");
  }
  report.state_pass_probability = p_state;
  report.benchmark_pass_probability =
      bench_a.pass_probability * bench_b.pass_probability;
  report.predicted = initial * bench_a.value * bench_b.value *
                     (report.benchmark_pass_probability / p_state);

  if (pure_input != nullptr && bench_a.exact && bench_b.exact) {
    // Both channels are filters: chi -> K_a chi K_b^T stays pure.
    const ComplexMatrix chi =
        ch_a.kraus().front() * pure_input->chi() * transpose(ch_b.kraus().front());
    const double n = frobenius_norm(chi);
    if (n * n <= tol::annihilated) {
      throw std::invalid_argument(
          "evolve_gconcurrence_bound: state annihilated by the channels");
    }
    const PureState final_state(pure_input->dim_a(), pure_input->dim_b(),
                                (1.0 / n) * chi);
    report.final_concurrence = gconcurrence_pure(final_state).value;
    report.ratio = evolution_ratio(report.final_concurrence, report.predicted);
  } else {
    report.final_certified = false;
    report.final_concurrence = 0.0;
    report.ratio = 0.0;
  }
  report.is_exact_regime = false;
  return report;
}

}  // namespace

EvolutionReport evolve_gconcurrence_bound(const PureState& s,
                                          const QuantumChannel& ch_a,
                                          const QuantumChannel& ch_b) {
  if (s.dim_a() != s.dim_b()) {
    throw std::invalid_argument(
        "evolve_gconcurrence_bound: requires a square bipartition");
  }
  return gconcurrence_bound_impl(gconcurrence_pure(s).value, &s,
                                 pure_to_density(s), ch_a, ch_b);
}

EvolutionReport evolve_gconcurrence_bound(const DensityMatrix& rho,
                                          double initial_gconcurrence,
                                          const QuantumChannel& ch_a,
                                          const QuantumChannel& ch_b) {
  if (rho.dim_a() != rho.dim_b()) {
    throw std::invalid_argument(
        "evolve_gconcurrence_bound: requires a square bipartition");
  }
  if (initial_gconcurrence < 0.0) {
    throw std::invalid_argument(
        "evolve_gconcurrence_bound: initial G-concurrence must be >= 0");
  }
  return gconcurrence_bound_impl(initial_gconcurrence, nullptr, rho, ch_a,
                                 ch_b);
}

}  // namespace entdyn
