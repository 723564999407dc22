// Copyright 2026 The entdyn authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "entdyn/channels.hpp"
#include "entdyn/measures.hpp"

namespace entdyn {

/// Result of one entanglement-evolution comparison: the measured initial and
/// final values against the predicted value (an exact factorization in the
/// exact regime, an upper bound otherwise).
///
/// is_exact_regime marks reports where |final - predicted| <= tol::law is
/// certified (pure initial state, one-sided channel, and both sides of the
/// relation evaluable in closed form). final_certified is false when no
/// closed form exists for the final value (mixed-state G-concurrence); the
/// final and ratio fields are then zero placeholders and only the predicted
/// bound is meaningful.
struct EvolutionReport {
  double initial_concurrence = 0.0;
  double final_concurrence = 0.0;
  double predicted = 0.0;
  double ratio = 1.0;  ///< final / predicted; 1 when both are ~0
  bool is_exact_regime = false;
  bool final_certified = true;
  double state_pass_probability = 1.0;      ///< tr of the evolved state
  double benchmark_pass_probability = 1.0;  ///< tr of the evolved |phi+>
};

double evolution_ratio(double final_value, double predicted);

/// Concurrence of the channel's Choi state: the one number that governs how
/// every pure state's entanglement scales under the one-sided channel.
/// Two-level channels only; renormalizes the Choi state of
/// sub-trace-preserving channels.
ConcurrenceValue channel_benchmark(const QuantumChannel& ch);

/// Factorization law for an initially pure two-qubit state with one
/// trace-preserving channel on one subsystem:
/// final = C(chi) * benchmark, exactly.
EvolutionReport evolve_pure_one_sided(const PureState& s,
                                      const QuantumChannel& ch, Side side);

/// Same law for sub-trace-preserving channels, with both sides evaluated on
/// normalized states and the prediction rescaled by the pass probabilities
/// of |chi> and |phi+>.
EvolutionReport evolve_pure_non_trace_preserving(const PureState& s,
                                                 const QuantumChannel& ch,
                                                 Side side);

/// Upper bound for an initially mixed state under a one-sided channel:
/// final <= C(rho) * benchmark.
EvolutionReport evolve_mixed_one_sided(const DensityMatrix& rho,
                                       const QuantumChannel& ch, Side side);

/// Upper bound when both subsystems evolve: ch_a acts on side A, ch_b on
/// side B; final <= C(rho) * benchmark(ch_a) * benchmark(ch_b).
EvolutionReport evolve_two_sided(const DensityMatrix& rho,
                                 const QuantumChannel& ch_a,
                                 const QuantumChannel& ch_b);

/// G-concurrence benchmark of a d-level channel, evaluated through the
/// determinant structure of the Kraus ensemble of the Choi state:
/// sum_i |det K_i|^(2/d) over the Choi trace. Exact for single-Kraus
/// (filtering) channels, an upper bound on the convex roof otherwise.
struct GBenchmark {
  double value = 0.0;
  double pass_probability = 1.0;
  bool exact = false;
};
GBenchmark gconcurrence_channel_benchmark(const QuantumChannel& ch);

/// G-concurrence factorization for a pure d x d state under a one-sided
/// channel. The final value is certified (and the report exact) only for
/// single-Kraus channels, where the output stays pure; otherwise the report
/// carries the predicted value alone with final_certified = false.
EvolutionReport evolve_gconcurrence_pure(const PureState& s,
                                         const QuantumChannel& ch, Side side);

/// Two-sided G-concurrence bound for a pure initial state. The final value
/// is certified only when both channels are single-Kraus.
EvolutionReport evolve_gconcurrence_bound(const PureState& s,
                                          const QuantumChannel& ch_a,
                                          const QuantumChannel& ch_b);

/// Two-sided G-concurrence bound with the (otherwise uncomputable) initial
/// G-concurrence supplied by the caller; the final value is never certified.
EvolutionReport evolve_gconcurrence_bound(const DensityMatrix& rho,
                                          double initial_gconcurrence,
                                          const QuantumChannel& ch_a,
                                          const QuantumChannel& ch_b);

}  // namespace entdyn
