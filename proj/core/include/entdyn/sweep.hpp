// Copyright 2026 The entdyn authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entdyn/channels.hpp"

namespace entdyn {

enum class ChannelFamily { phase_damping, amplitude_damping, custom_file };
enum class SweepSides { one_sided, two_sided_identical };

/// One Monte-Carlo experiment: n_samples Haar-random pure states evolved
/// under the chosen channel family at every noise value of p_grid.
struct ExperimentConfig {
  ChannelFamily channel_family = ChannelFamily::phase_damping;
  std::string channel_file;  ///< used by ChannelFamily::custom_file
  std::vector<double> p_grid;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  SweepSides sides = SweepSides::one_sided;
  std::size_t dim_a = 2;
  std::size_t dim_b = 2;

  /// Throws std::invalid_argument on out-of-range or unsorted values.
  void validate() const;
};

/// One datum: initial concurrence, final concurrence, the predicted bound
/// and their ratio (0/0 counts as 1).
struct SampleRecord {
  std::size_t sample_index = 0;
  double p = 0.0;
  double c_initial = 0.0;
  double c_final = 0.0;
  double bound = 0.0;
  double ratio = 1.0;

  bool operator==(const SampleRecord&) const = default;
};

/// Runs the configured sweep. Records are emitted p-major, then by sample
/// index, independent of n_threads: sample i always uses substream
/// (seed, i), and workers write to disjoint slots of the result.
std::vector<SampleRecord> run_sweep(const ExperimentConfig& cfg,
                                    unsigned n_threads = 1);

enum class RecordField { ratio, c_final };

/// Equal-width histogram over [0, 1], normalized so that
/// sum(density * width) = 1. Values of exactly 1 land in the last bin.
struct Histogram {
  std::vector<double> bin_edges;  ///< n_bins + 1 ascending edges
  std::vector<double> densities;  ///< n_bins nonnegative values
  std::size_t count = 0;
};

Histogram build_histogram(const std::vector<SampleRecord>& records,
                          std::size_t n_bins, RecordField field);

/// Per-p aggregate of a record stream.
struct SweepSummary {
  double p = 0.0;
  std::size_t n = 0;
  double mean_ratio = 0.0;
  double median_ratio = 0.0;
  double min_ratio = 0.0;
  double fraction_ratio_ge_099 = 0.0;
  double max_bound_violation = 0.0;  ///< max(c_final - bound, 0)
};

std::vector<SweepSummary> summarize(const std::vector<SampleRecord>& records);

}  // namespace entdyn
