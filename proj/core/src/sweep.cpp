// Copyright 2026 The entdyn authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "entdyn/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "entdyn/evolution.hpp"
#include "entdyn/io.hpp"
#include "entdyn/measures.hpp"
#include "entdyn/sampling.hpp"

namespace entdyn {

void ExperimentConfig::validate() const {
  if (n_samples < 1) {
    throw std::invalid_argument("ExperimentConfig: n_samples must be >= 1");
  }
  if (dim_a < 2 || dim_b < 2) {
    throw std::invalid_argument("ExperimentConfig: dimensions must be >= 2");
  }
  if (p_grid.empty()) {
    throw std::invalid_argument("ExperimentConfig: p_grid must be nonempty");
  }
  for (double p : p_grid) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("ExperimentConfig: p value " +
                                  std::to_string(p) + " outside [0, 1]");
    }
  }
  if (!std::is_sorted(p_grid.begin(), p_grid.end())) {
    throw std::invalid_argument("ExperimentConfig: p_grid must be sorted");
  }
  if (channel_family == ChannelFamily::custom_file && channel_file.empty()) {
    throw std::invalid_argument(
        "ExperimentConfig: custom channel family needs a channel file");
  }
}

namespace {

struct PerNoise {
  QuantumChannel channel;
  double bench_b = 0.0;   // concurrence of (I (x) ch)|phi+><phi+|
  double bench_a = 0.0;   // concurrence of (ch (x) I)|phi+><phi+|
  double p_phi_b = 1.0;   // Choi trace on side B
  double p_phi_a = 1.0;   // Choi trace on side A
};

double side_benchmark(const QuantumChannel& ch, Side side, double& pass) {
  const DensityMatrix choi = choi_state_on_side(ch, side);
  pass = choi.trace_value();
  const DensityMatrix norm = choi.is_normalized() ? choi : choi.renormalized();
  return concurrence_wootters(norm).value;
}

PerNoise prepare_noise_point(const ExperimentConfig& cfg, double p) {
  QuantumChannel ch = [&] {
    switch (cfg.channel_family) {
      case ChannelFamily::phase_damping:
        return phase_damping(p);
      case ChannelFamily::amplitude_damping:
        return amplitude_damping(p);
      case ChannelFamily::custom_file:
        return load_channel(cfg.channel_file);
    }
    throw std::invalid_argument("ExperimentConfig: unknown channel family");
  }();
  PerNoise out{std::move(ch)};
  out.bench_b = side_benchmark(out.channel, Side::B, out.p_phi_b);
  if (cfg.sides == SweepSides::two_sided_identical) {
    out.bench_a = side_benchmark(out.channel, Side::A, out.p_phi_a);
  }
  return out;
}

SampleRecord make_record(const ExperimentConfig& cfg, const PerNoise& noise,
                         double p, std::size_t sample_index) {
  const PureState s =
      sample_haar_pure(cfg.dim_a, cfg.dim_b, cfg.seed, sample_index);
  SampleRecord rec;
  rec.sample_index = sample_index;
  rec.p = p;
  rec.c_initial = concurrence_pure_det(s).value;

  const DensityMatrix rho = pure_to_density(s);
  DensityMatrix out = apply_channel(rho, noise.channel, Side::B);
  double bound = rec.c_initial * noise.bench_b;
  double pass = noise.p_phi_b;
  if (cfg.sides == SweepSides::two_sided_identical) {
    out = apply_channel(out, noise.channel, Side::A);
    bound *= noise.bench_a;
    pass *= noise.p_phi_a;
  }
  const double p_out = out.trace_value();
  if (p_out <= tol::annihilated) {
    throw std::invalid_argument("run_sweep: state annihilated by the channel");
  }
  rec.c_final =
      concurrence_wootters(out.is_normalized() ? out : out.renormalized())
          .value;
  rec.bound = bound * (pass / p_out);
  rec.ratio = evolution_ratio(rec.c_final, rec.bound);
  return rec;
}

}  // namespace

std::vector<SampleRecord> run_sweep(const ExperimentConfig& cfg,
                                    unsigned n_threads) {
  cfg.validate();
  if (cfg.dim_a != 2 || cfg.dim_b != 2) {
    throw std::invalid_argument(
        "run_sweep: only 2x2 sweeps are supported (the final concurrence "
        "needs Wootters' closed form)");
  }

  std::vector<PerNoise> noise;
  noise.reserve(cfg.p_grid.size());
  for (double p : cfg.p_grid) noise.push_back(prepare_noise_point(cfg, p));

  const std::size_t total = cfg.p_grid.size() * cfg.n_samples;
  std::vector<SampleRecord> records(total);

  auto fill_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const std::size_t pi = idx / cfg.n_samples;
      const std::size_t si = idx % cfg.n_samples;
      records[idx] = make_record(cfg, noise[pi], cfg.p_grid[pi], si);
    }
  };

  if (n_threads <= 1 || total < 2) {
    fill_range(0, total);
    return records;
  }

  const unsigned workers =
      std::min<unsigned>(n_threads, unsigned(std::min<std::size_t>(
                                        total, 1024)));
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  const std::size_t chunk = (total + workers - 1) / workers;
  for (unsigned t = 0; t < workers; ++t) {
    const std::size_t begin = std::min<std::size_t>(t * chunk, total);
    const std::size_t end = std::min<std::size_t>(begin + chunk, total);
    pool.emplace_back([&, begin, end] {
      try {
        fill_range(begin, end);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return records;
}

Histogram build_histogram(const std::vector<SampleRecord>& records,
                          std::size_t n_bins, RecordField field) {
  if (records.empty()) {
    throw std::invalid_argument("build_histogram: no records");
  }
  if (n_bins < 1) {
    throw std::invalid_argument("build_histogram: need at least one bin");
  }
  Histogram h;
  h.count = records.size();
  h.bin_edges.resize(n_bins + 1);
  for (std::size_t i = 0; i <= n_bins; ++i)
    h.bin_edges[i] = double(i) / double(n_bins);
  h.densities.assign(n_bins, 0.0);
  const double width = 1.0 / double(n_bins);
  for (const SampleRecord& r : records) {
    const double v = field == RecordField::ratio ? r.ratio : r.c_final;
    std::size_t bin;
    if (v >= 1.0) {
      bin = n_bins - 1;
    } else if (v <= 0.0) {
      bin = 0;
    } else {
      bin = std::min<std::size_t>(std::size_t(v * double(n_bins)), n_bins - 1);
    }
    h.densities[bin] += 1.0;
  }
  for (double& d : h.densities) d /= double(h.count) * width;
  return h;
}

std::vector<SweepSummary> summarize(const std::vector<SampleRecord>& records) {
  if (records.empty()) {
    throw std::invalid_argument("summarize: no records");
  }
  std::vector<double> ps;
  std::vector<std::vector<const SampleRecord*>> groups;
  for (const SampleRecord& r : records) {
    std::size_t gi = ps.size();
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (ps[i] == r.p) {
        gi = i;
        break;
      }
    }
    if (gi == ps.size()) {
      ps.push_back(r.p);
      groups.emplace_back();
    }
    groups[gi].push_back(&r);
  }

  std::vector<SweepSummary> out;
  out.reserve(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    SweepSummary s;
    s.p = ps[i];
    s.n = groups[i].size();
    std::vector<double> ratios;
    ratios.reserve(s.n);
    double sum = 0.0;
    double min_ratio = groups[i].front()->ratio;
    std::size_t ge = 0;
    double violation = 0.0;
    for (const SampleRecord* r : groups[i]) {
      ratios.push_back(r->ratio);
      sum += r->ratio;
      min_ratio = std::min(min_ratio, r->ratio);
      if (r->ratio >= 0.99) ++ge;
      violation = std::max(violation, r->c_final - r->bound);
    }
    std::sort(ratios.begin(), ratios.end());
    s.mean_ratio = sum / double(s.n);
    s.median_ratio = s.n % 2 == 1
                         ? ratios[s.n / 2]
                         : 0.5 * (ratios[s.n / 2 - 1] + ratios[s.n / 2]);
    s.min_ratio = min_ratio;
    s.fraction_ratio_ge_099 = double(ge) / double(s.n);
    s.max_bound_violation = std::max(violation, 0.0);
    out.push_back(s);
  }
  return out;
}

}  // namespace entdyn
