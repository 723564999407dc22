// Copyright 2026 The entdyn authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "entdyn/channels.hpp"
#include "entdyn/sweep.hpp"

namespace entdyn {

/// Malformed file contents (schema/syntax/non-finite numerics). Domain
/// violations of otherwise well-formed data (non-PSD rho, sum K^dag K > I)
/// surface as std::invalid_argument from the type constructors instead.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// State files: JSON object with "dA", "dB" and exactly one of
///   "chi": dA x dB matrix  (pure state), or
///   "rho": (dA*dB) x (dA*dB) matrix  (density matrix).
/// Matrices are lists of rows; every entry is a two-element [re, im] array of
/// finite numbers. Unknown keys are rejected.
using LoadedState = std::variant<PureState, DensityMatrix>;

LoadedState load_state(const std::string& path);
void save_state(const std::string& path, const PureState& s);
void save_state(const std::string& path, const DensityMatrix& rho);

/// Channel files: JSON object with "dim" and "kraus": a list of dim x dim
/// matrices in the same entry format.
QuantumChannel load_channel(const std::string& path);
void save_channel(const std::string& path, const QuantumChannel& ch);

/// Sweep config files: JSON object with the ExperimentConfig fields
/// ("channel_family", "p_grid", "n_samples", "seed", "sides", "dims", plus
/// "channel_file" for the custom family). Unknown keys are rejected.
ExperimentConfig load_config(const std::string& path);

/// 12-significant-digit decimal formatting used in all CSV output.
std::string format_csv_value(double v);

/// Header `p,sample_index,c_initial,c_final,bound,ratio`, rows in record
/// order (p-major, then sample index).
std::string records_to_csv(const std::vector<SampleRecord>& records);

/// Header `p,bin_lo,bin_hi,density`; one block per (p, histogram) pair.
std::string histograms_to_csv(
    const std::vector<std::pair<double, Histogram>>& histograms);

/// Writes the full string in one go; throws std::runtime_error if the path
/// cannot be opened for writing.
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace entdyn
