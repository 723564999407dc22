// Copyright 2026 The entdyn authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
//
// Command line frontend: entanglement measures, channel benchmarks,
// evolution-law verification and Monte-Carlo sweeps.
//
// Exit codes: 0 success, 1 domain error (invalid physics, bound violation,
// unwritable output), 2 input/parse error (malformed files or flags).

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "entdyn/evolution.hpp"
#include "entdyn/io.hpp"
#include "entdyn/sweep.hpp"

namespace {

using namespace entdyn;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;

std::string fixed12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", v);
  return buf;
}

struct BuiltinChannel {
  std::string name;  // "phase" or "amp"
  double p = 0.0;
};

QuantumChannel resolve_channel(const std::string& file,
                               const std::optional<BuiltinChannel>& builtin) {
  if (builtin) {
    if (builtin->name == "phase") return phase_damping(builtin->p);
    return amplitude_damping(builtin->p);
  }
  return load_channel(file);
}

int cmd_concurrence(const std::string& state_file, const std::string& measure,
                    const std::string& /*format*/) {
  const LoadedState state = load_state(state_file);
  double value = 0.0;
  if (measure == "pure") {
    if (!std::holds_alternative<PureState>(state)) {
      throw std::invalid_argument(
          "measure 'pure' needs a pure state file (a \"chi\" entry)");
    }
    value = concurrence_pure(std::get<PureState>(state)).value;
  } else if (measure == "wootters") {
    const DensityMatrix rho =
        std::holds_alternative<PureState>(state)
            ? pure_to_density(std::get<PureState>(state))
            : std::get<DensityMatrix>(state);
    value = concurrence_wootters(rho).value;
  } else {  // gconcurrence
    if (!std::holds_alternative<PureState>(state)) {
      throw std::invalid_argument(
          "measure 'gconcurrence' has a closed form for pure states only");
    }
    value = gconcurrence_pure(std::get<PureState>(state)).value;
  }
  std::cout << fixed12(value) << "\n";
  return kExitOk;
}

int cmd_bench(const std::string& channel_file,
              const std::optional<BuiltinChannel>& builtin,
              const std::string& /*format*/) {
  const QuantumChannel ch = resolve_channel(channel_file, builtin);
  std::cout << fixed12(channel_benchmark(ch).value) << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& state_file,
               const std::vector<std::string>& channel_files, bool two_sided,
               const std::string& format) {
  const LoadedState state = load_state(state_file);
  std::vector<QuantumChannel> channels;
  for (const std::string& f : channel_files) channels.push_back(load_channel(f));

  const bool pure_input = std::holds_alternative<PureState>(state);
  EvolutionReport report;
  std::string regime;
  if (channels.size() == 1 && !two_sided) {
    if (pure_input) {
      const PureState& s = std::get<PureState>(state);
      report = channels[0].trace_preserving()
                   ? evolve_pure_one_sided(s, channels[0], Side::B)
                   : evolve_pure_non_trace_preserving(s, channels[0], Side::B);
      regime = "EXACT";
    } else {
      report = evolve_mixed_one_sided(std::get<DensityMatrix>(state),
                                      channels[0], Side::B);
      regime = "BOUND";
    }
  } else {
    const QuantumChannel& ch_a = channels[0];
    const QuantumChannel& ch_b = channels.size() > 1 ? channels[1] : channels[0];
    const DensityMatrix rho = pure_input
                                  ? pure_to_density(std::get<PureState>(state))
                                  : std::get<DensityMatrix>(state);
    report = evolve_two_sided(rho, ch_a, ch_b);
    regime = "BOUND";
  }

  if (format == "csv") {
    std::cout << "c_initial,c_final,predicted,ratio,regime\n"
              << format_csv_value(report.initial_concurrence) << ','
              << format_csv_value(report.final_concurrence) << ','
              << format_csv_value(report.predicted) << ','
              << format_csv_value(report.ratio) << ',' << regime << "\n";
  } else {
    std::cout << "c_initial = " << fixed12(report.initial_concurrence) << "\n"
              << "c_final   = " << fixed12(report.final_concurrence) << "\n"
              << (regime == "EXACT" ? "predicted = " : "bound     = ")
              << fixed12(report.predicted) << "\n"
              << "ratio     = " << fixed12(report.ratio) << "\n"
              << "regime    = " << regime << "\n";
  }

  // A bound violation beyond tolerance means an internal defect, not a
  // property of the input; flag it loudly.
  if (report.final_concurrence > report.predicted + tol::law) {
    std::cerr << "error: final concurrence exceeds the bound by "
              << (report.final_concurrence - report.predicted) << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

int cmd_sweep(const std::string& config_file, const std::string& out_path,
              const std::string& hist_path, std::size_t hist_bins,
              const std::string& hist_field, unsigned threads,
              std::optional<std::uint64_t> seed_override,
              const std::string& format) {
  ExperimentConfig cfg = load_config(config_file);
  if (seed_override) cfg.seed = *seed_override;
  const std::vector<SampleRecord> records = run_sweep(cfg, threads);

  try {
    write_text_file(out_path, records_to_csv(records));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }

  if (!hist_path.empty()) {
    const RecordField field =
        hist_field == "c_final" ? RecordField::c_final : RecordField::ratio;
    std::vector<std::pair<double, Histogram>> hists;
    for (double p : cfg.p_grid) {
      std::vector<SampleRecord> slice;
      for (const SampleRecord& r : records) {
        if (r.p == p) slice.push_back(r);
      }
      hists.emplace_back(p, build_histogram(slice, hist_bins, field));
    }
    try {
      write_text_file(hist_path, histograms_to_csv(hists));
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitDomain;
    }
  }

  const std::vector<SweepSummary> summaries = summarize(records);
  if (format == "csv") {
    std::cout << "p,n,mean_ratio,median_ratio,min_ratio,fraction_ratio_ge_099,"
                 "max_bound_violation\n";
    for (const SweepSummary& s : summaries) {
      std::cout << format_csv_value(s.p) << ',' << s.n << ','
                << format_csv_value(s.mean_ratio) << ','
                << format_csv_value(s.median_ratio) << ','
                << format_csv_value(s.min_ratio) << ','
                << format_csv_value(s.fraction_ratio_ge_099) << ','
                << format_csv_value(s.max_bound_violation) << "\n";
    }
  } else {
    std::printf("%8s %8s %12s %12s %12s %14s %14s\n", "p", "n", "mean",
                "median", "min", "frac>=0.99", "max_violation");
    for (const SweepSummary& s : summaries) {
      std::printf("%8.4g %8zu %12.6f %12.6f %12.6f %14.4f %14.3e\n", s.p, s.n,
                  s.mean_ratio, s.median_ratio, s.min_ratio,
                  s.fraction_ratio_ge_099, s.max_bound_violation);
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entanglement measures and evolution under Kraus channels"};
  app.require_subcommand(1);

  std::string format = "human";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"human", "csv"}));
  std::optional<std::uint64_t> seed_override;
  app.add_option("--seed", seed_override,
                 "override the seed of seeded commands");

  // concurrence STATE --measure {pure,wootters,gconcurrence}
  auto* concurrence = app.add_subcommand(
      "concurrence", "entanglement measure of a state file");
  std::string state_file, measure = "pure";
  concurrence->add_option("state", state_file, "state file (JSON)")
      ->required();
  concurrence->add_option("--measure", measure, "which measure to evaluate")
      ->check(CLI::IsMember({"pure", "wootters", "gconcurrence"}));

  // bench [CHANNEL] | --builtin {phase,amp} --p VALUE
  auto* bench = app.add_subcommand(
      "bench", "concurrence of the channel's Choi state");
  std::string bench_channel, builtin_name;
  double builtin_p = 0.0;
  bench->add_option("channel", bench_channel, "channel file (JSON)");
  auto* builtin_opt =
      bench->add_option("--builtin", builtin_name, "built-in channel family")
          ->check(CLI::IsMember({"phase", "amp"}));
  bench->add_option("--p", builtin_p, "noise strength of the built-in channel")
      ->check(CLI::Range(0.0, 1.0))
      ->needs(builtin_opt);

  // verify STATE CH1 [CH2] [--two-sided]
  auto* verify = app.add_subcommand(
      "verify", "final concurrence against the factorization law or bound");
  std::string verify_state;
  std::vector<std::string> verify_channels;
  bool two_sided = false;
  verify->add_option("state", verify_state, "state file (JSON)")->required();
  verify->add_option("channels", verify_channels, "one or two channel files")
      ->required()
      ->expected(1, 2);
  verify->add_flag("--two-sided", two_sided,
                   "apply the channel(s) to both subsystems");

  // sweep CONFIG --out CSV [--hist CSV --bins N --hist-field ratio|c_final]
  auto* sweep = app.add_subcommand(
      "sweep", "Monte-Carlo sweep over Haar-random initial states");
  std::string config_file, out_path, hist_path, hist_field = "ratio";
  std::size_t hist_bins = 50;
  unsigned threads = 1;
  sweep->add_option("config", config_file, "sweep config file (JSON)")
      ->required();
  sweep->add_option("--out", out_path, "output CSV path")->required();
  sweep->add_option("--hist", hist_path, "also write per-p histograms here");
  sweep->add_option("--bins", hist_bins, "histogram bin count")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--hist-field", hist_field, "histogrammed record field")
      ->check(CLI::IsMember({"ratio", "c_final"}));
  sweep->add_option("--threads", threads, "worker threads for the sweep")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (concurrence->parsed()) {
      return cmd_concurrence(state_file, measure, format);
    }
    if (bench->parsed()) {
      std::optional<BuiltinChannel> builtin;
      if (!builtin_name.empty()) {
        builtin = BuiltinChannel{builtin_name, builtin_p};
      } else if (bench_channel.empty()) {
        std::cerr << "error: bench needs a channel file or --builtin\n";
        return kExitParse;
      }
      return cmd_bench(bench_channel, builtin, format);
    }
    if (verify->parsed()) {
      return cmd_verify(verify_state, verify_channels, two_sided, format);
    }
    if (sweep->parsed()) {
      return cmd_sweep(config_file, out_path, hist_path, hist_bins, hist_field,
                       threads, seed_override, format);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitParse;
}
