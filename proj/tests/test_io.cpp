// Copyright 2026 The entdyn authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "entdyn/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>

#include "entdyn/measures.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace entdyn;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("entdyn_io_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
  static inline int counter = 0;
};

void write_raw(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("state files: pure round-trip preserves measures") {
  TempDir dir;
  oracles::PolarGaussian g(71);
  for (int rep = 0; rep < 5; ++rep) {
    const PureState s = oracles::random_two_qubit_pure(g);
    const std::string path = dir.file("state.json");
    save_state(path, s);
    const LoadedState loaded = load_state(path);
    REQUIRE(std::holds_alternative<PureState>(loaded));
    const PureState& back = std::get<PureState>(loaded);
    CHECK_CLOSE(concurrence_pure_det(back).value,
                concurrence_pure_det(s).value, 1e-12);
    CHECK(max_abs_diff(back.chi(), s.chi()) <= 1e-15);
  }
}

TEST_CASE("state files: mixed round-trip preserves measures") {
  TempDir dir;
  oracles::PolarGaussian g(72);
  const DensityMatrix rho = oracles::random_density(2, 2, g);
  const std::string path = dir.file("mixed.json");
  save_state(path, rho);
  const LoadedState loaded = load_state(path);
  REQUIRE(std::holds_alternative<DensityMatrix>(loaded));
  const DensityMatrix& back = std::get<DensityMatrix>(loaded);
  CHECK_CLOSE(concurrence_wootters(back).value,
              concurrence_wootters(rho).value, 1e-12);
}

TEST_CASE("state files: schema violations are ParseError") {
  TempDir dir;
  const std::string path = dir.file("bad.json");

  write_raw(path, "not json at all");
  CHECK_THROWS_AS(load_state(path), ParseError);

  write_raw(path, "[1, 2, 3]");
  CHECK_THROWS_AS(load_state(path), ParseError);

  // Unknown key.
  write_raw(path,
            R"({"dA": 2, "dB": 2, "chi": [[[1,0],[0,0]],[[0,0],[0,0]]], "extra": 1})");
  CHECK_THROWS_AS(load_state(path), ParseError);

  // Both chi and rho.
  write_raw(path, R"({"dA": 2, "dB": 2, "chi": [], "rho": []})");
  CHECK_THROWS_AS(load_state(path), ParseError);

  // Wrong row count.
  write_raw(path, R"({"dA": 2, "dB": 2, "chi": [[[1,0],[0,0]]]})");
  CHECK_THROWS_AS(load_state(path), ParseError);

  // Entry not [re, im].
  write_raw(path, R"({"dA": 2, "dB": 2, "chi": [[[1,0],[0]],[[0,0],[0,0]]]})");
  CHECK_THROWS_AS(load_state(path), ParseError);

  // NaN/Inf literals are not valid JSON and must be rejected.
  write_raw(path,
            R"({"dA": 2, "dB": 2, "chi": [[[NaN,0],[0,0]],[[0,0],[0,0]]]})");
  CHECK_THROWS_AS(load_state(path), ParseError);
  write_raw(
      path,
      R"({"dA": 2, "dB": 2, "chi": [[[Infinity,0],[0,0]],[[0,0],[0,0]]]})");
  CHECK_THROWS_AS(load_state(path), ParseError);

  CHECK_THROWS_AS(load_state(dir.file("missing.json")), ParseError);
}

TEST_CASE("state files: physically invalid contents are domain errors") {
  TempDir dir;
  const std::string path = dir.file("invalid.json");
  // Norm 0.5, schema-valid: rejected by the PureState invariant instead of
  // the parser.
  write_raw(path,
            R"({"dA": 2, "dB": 2, "chi": [[[0.5,0],[0,0]],[[0,0],[0,0]]]})");
  CHECK_THROWS_AS(load_state(path), std::invalid_argument);
}

TEST_CASE("channel files: round-trip and validation") {
  TempDir dir;
  const std::string path = dir.file("channel.json");
  const QuantumChannel ch = amplitude_damping(0.36);
  save_channel(path, ch);
  const QuantumChannel back = load_channel(path);
  CHECK(back.trace_preserving());
  REQUIRE(back.kraus().size() == ch.kraus().size());
  for (std::size_t i = 0; i < ch.kraus().size(); ++i) {
    CHECK(max_abs_diff(back.kraus()[i], ch.kraus()[i]) <= 1e-15);
  }

  write_raw(path, R"({"dim": 2, "kraus": []})");
  CHECK_THROWS_AS(load_channel(path), ParseError);
  write_raw(path, R"({"dim": 2})");
  CHECK_THROWS_AS(load_channel(path), ParseError);

  // Kraus sum above the identity: schema-valid, physically rejected.
  write_raw(path,
            R"({"dim": 2, "kraus": [[[[2,0],[0,0]],[[0,0],[2,0]]]]})");
  CHECK_THROWS_AS(load_channel(path), std::invalid_argument);
}

TEST_CASE("config files: parsing, defaults, rejection of unknown keys") {
  TempDir dir;
  const std::string path = dir.file("config.json");
  write_raw(path, R"({
    "channel_family": "phase_damping",
    "p_grid": [0.01, 0.1, 0.25, 0.5],
    "n_samples": 100,
    "seed": 42,
    "sides": "two_sided_identical",
    "dims": [2, 2]
  })");
  const ExperimentConfig cfg = load_config(path);
  CHECK(cfg.channel_family == ChannelFamily::phase_damping);
  CHECK(cfg.p_grid.size() == 4);
  CHECK(cfg.n_samples == 100);
  CHECK(cfg.seed == 42);
  CHECK(cfg.sides == SweepSides::two_sided_identical);
  CHECK(cfg.dim_a == 2);

  write_raw(path, R"({
    "channel_family": "phase_damping",
    "p_grid": [0.1],
    "n_samples": 10,
    "seed": 1,
    "sides": "one_sided",
    "surprise": true
  })");
  CHECK_THROWS_AS(load_config(path), ParseError);

  write_raw(path, R"({
    "channel_family": "phase_damping",
    "p_grid": [0.5, 0.1],
    "n_samples": 10,
    "seed": 1,
    "sides": "one_sided"
  })");
  CHECK_THROWS_AS(load_config(path), ParseError);  // unsorted grid

  write_raw(path, R"({
    "channel_family": "nonsense",
    "p_grid": [0.1],
    "n_samples": 10,
    "seed": 1,
    "sides": "one_sided"
  })");
  CHECK_THROWS_AS(load_config(path), ParseError);
}

TEST_CASE("config files: custom channel family end-to-end") {
  TempDir dir;
  save_channel(dir.file("ch.json"), phase_damping(0.5));
  const std::string path = dir.file("config.json");
  write_raw(path, std::string(R"({
    "channel_family": "custom",
    "channel_file": ")") + dir.file("ch.json") + R"(",
    "p_grid": [0.0],
    "n_samples": 5,
    "seed": 7,
    "sides": "one_sided"
  })");
  const ExperimentConfig cfg = load_config(path);
  const std::vector<SampleRecord> records = run_sweep(cfg);
  REQUIRE(records.size() == 5);
  for (const SampleRecord& r : records) {
    CHECK(std::abs(r.ratio - 1.0) <= 1e-8);  // exact law with the file channel
  }
}

TEST_CASE("CSV: header, 12-significant-digit fields, deterministic bytes") {
  ExperimentConfig cfg;
  cfg.channel_family = ChannelFamily::amplitude_damping;
  cfg.p_grid = {0.25};
  cfg.n_samples = 10;
  cfg.seed = 99;
  cfg.sides = SweepSides::one_sided;
  const std::vector<SampleRecord> records = run_sweep(cfg);
  const std::string csv = records_to_csv(records);
  CHECK(csv.rfind("p,sample_index,c_initial,c_final,bound,ratio\n", 0) == 0);
  CHECK(csv == records_to_csv(run_sweep(cfg)));  // byte-identical

  CHECK(format_csv_value(0.25) == "0.25");
  CHECK(format_csv_value(1.0 / 3.0) == "0.333333333333");
  CHECK(format_csv_value(1.0) == "1");

  // One line per record plus header.
  std::size_t lines = 0;
  for (char c : csv) lines += (c == '\n');
  CHECK(lines == records.size() + 1);
}

TEST_CASE("CSV: histogram output is density-normalized") {
  ExperimentConfig cfg;
  cfg.channel_family = ChannelFamily::phase_damping;
  cfg.p_grid = {0.1, 0.5};
  cfg.n_samples = 200;
  cfg.seed = 31;
  cfg.sides = SweepSides::two_sided_identical;
  const std::vector<SampleRecord> records = run_sweep(cfg);

  std::vector<std::pair<double, Histogram>> hists;
  for (double p : cfg.p_grid) {
    std::vector<SampleRecord> slice;
    for (const SampleRecord& r : records) {
      if (r.p == p) slice.push_back(r);
    }
    hists.emplace_back(p, build_histogram(slice, 50, RecordField::ratio));
  }
  const std::string csv = histograms_to_csv(hists);
  CHECK(csv.rfind("p,bin_lo,bin_hi,density\n", 0) == 0);
  for (const auto& [p, h] : hists) {
    double mass = 0.0;
    for (std::size_t b = 0; b < h.densities.size(); ++b) {
      mass += h.densities[b] * (h.bin_edges[b + 1] - h.bin_edges[b]);
    }
    CHECK_CLOSE(mass, 1.0, 1e-9);
  }
}

TEST_CASE("write_text_file: unwritable path raises") {
  CHECK_THROWS_AS(write_text_file("/nonexistent_dir_xyz/out.csv", "data"),
                  std::runtime_error);
}
