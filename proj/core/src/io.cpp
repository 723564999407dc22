// Copyright 2026 The entdyn authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "entdyn/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace entdyn {

namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "' for reading");
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
  if (!j.is_object()) {
    throw ParseError("'" + path + "': top level must be a JSON object");
  }
  return j;
}

void reject_unknown_keys(const json& j, const std::set<std::string>& known,
                         const std::string& path) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!known.count(it.key())) {
      throw ParseError("'" + path + "': unknown key \"" + it.key() + "\"");
    }
  }
}

double finite_number(const json& j, const std::string& path) {
  if (!j.is_number()) {
    throw ParseError("'" + path + "': expected a number");
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw ParseError("'" + path + "': non-finite number");
  }
  return v;
}

std::size_t positive_integer(const json& j, const char* key,
                             const std::string& path) {
  if (!j.contains(key)) {
    throw ParseError("'" + path + "': missing key \"" + key + "\"");
  }
  const json& v = j.at(key);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) {
    throw ParseError("'" + path + "': \"" + std::string(key) +
                     "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

ComplexMatrix matrix_from_json(const json& j, std::size_t rows,
                               std::size_t cols, const char* key,
                               const std::string& path) {
  if (!j.is_array() || j.size() != rows) {
    throw ParseError("'" + path + "': \"" + std::string(key) + "\" must be " +
                     std::to_string(rows) + " rows");
  }
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j.at(r);
    if (!row.is_array() || row.size() != cols) {
      throw ParseError("'" + path + "': \"" + std::string(key) + "\" row " +
                       std::to_string(r) + " must have " +
                       std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const json& entry = row.at(c);
      if (!entry.is_array() || entry.size() != 2) {
        throw ParseError("'" + path + "': matrix entries must be [re, im]");
      }
      m(r, c) = Complex(finite_number(entry.at(0), path),
                        finite_number(entry.at(1), path));
    }
  }
  return m;
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void dump_to_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  out << j.dump(2) << '\n';
}

}  // namespace

LoadedState load_state(const std::string& path) {
  const json j = parse_file(path);
  reject_unknown_keys(j, {"dA", "dB", "chi", "rho"}, path);
  const std::size_t da = positive_integer(j, "dA", path);
  const std::size_t db = positive_integer(j, "dB", path);
  const bool has_chi = j.contains("chi");
  const bool has_rho = j.contains("rho");
  if (has_chi == has_rho) {
    throw ParseError("'" + path +
                     "': state needs exactly one of \"chi\" or \"rho\"");
  }
  if (has_chi) {
    return PureState(da, db,
                     matrix_from_json(j.at("chi"), da, db, "chi", path));
  }
  const std::size_t d = da * db;
  return DensityMatrix::normalized(
      da, db, matrix_from_json(j.at("rho"), d, d, "rho", path));
}

void save_state(const std::string& path, const PureState& s) {
  json j;
  j["dA"] = s.dim_a();
  j["dB"] = s.dim_b();
  j["chi"] = matrix_to_json(s.chi());
  dump_to_file(path, j);
}

void save_state(const std::string& path, const DensityMatrix& rho) {
  json j;
  j["dA"] = rho.dim_a();
  j["dB"] = rho.dim_b();
  j["rho"] = matrix_to_json(rho.rho());
  dump_to_file(path, j);
}

QuantumChannel load_channel(const std::string& path) {
  const json j = parse_file(path);
  reject_unknown_keys(j, {"dim", "kraus"}, path);
  const std::size_t dim = positive_integer(j, "dim", path);
  if (!j.contains("kraus") || !j.at("kraus").is_array() ||
      j.at("kraus").empty()) {
    throw ParseError("'" + path +
                     "': \"kraus\" must be a nonempty list of matrices");
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(j.at("kraus").size());
  for (const json& k : j.at("kraus")) {
    kraus.push_back(matrix_from_json(k, dim, dim, "kraus", path));
  }
  return QuantumChannel(dim, dim, std::move(kraus));
}

void save_channel(const std::string& path, const QuantumChannel& ch) {
  if (ch.dim_in() != ch.dim_out()) {
    throw std::invalid_argument(
        "save_channel: the file format covers square channels only");
  }
  json j;
  j["dim"] = ch.dim_in();
  json list = json::array();
  for (const ComplexMatrix& k : ch.kraus()) list.push_back(matrix_to_json(k));
  j["kraus"] = std::move(list);
  dump_to_file(path, j);
}

ExperimentConfig load_config(const std::string& path) {
  const json j = parse_file(path);
  reject_unknown_keys(j,
                      {"channel_family", "channel_file", "p_grid", "n_samples",
                       "seed", "sides", "dims"},
                      path);
  ExperimentConfig cfg;

  if (!j.contains("channel_family") || !j.at("channel_family").is_string()) {
    throw ParseError("'" + path + "': \"channel_family\" must be a string");
  }
  const std::string family = j.at("channel_family").get<std::string>();
  if (family == "phase_damping") {
    cfg.channel_family = ChannelFamily::phase_damping;
  } else if (family == "amplitude_damping") {
    cfg.channel_family = ChannelFamily::amplitude_damping;
  } else if (family == "custom") {
    cfg.channel_family = ChannelFamily::custom_file;
  } else {
    throw ParseError("'" + path + "': unknown channel family \"" + family +
                     "\"");
  }
  if (j.contains("channel_file")) {
    if (!j.at("channel_file").is_string()) {
      throw ParseError("'" + path + "': \"channel_file\" must be a string");
    }
    cfg.channel_file = j.at("channel_file").get<std::string>();
  }

  if (!j.contains("p_grid") || !j.at("p_grid").is_array()) {
    throw ParseError("'" + path + "': \"p_grid\" must be a list of numbers");
  }
  for (const json& p : j.at("p_grid")) {
    cfg.p_grid.push_back(finite_number(p, path));
  }

  cfg.n_samples = positive_integer(j, "n_samples", path);

  if (!j.contains("seed") || !j.at("seed").is_number_unsigned()) {
    throw ParseError("'" + path +
                     "': \"seed\" must be an unsigned integer");
  }
  cfg.seed = j.at("seed").get<std::uint64_t>();

  if (!j.contains("sides") || !j.at("sides").is_string()) {
    throw ParseError("'" + path + "': \"sides\" must be a string");
  }
  const std::string sides = j.at("sides").get<std::string>();
  if (sides == "one_sided") {
    cfg.sides = SweepSides::one_sided;
  } else if (sides == "two_sided_identical") {
    cfg.sides = SweepSides::two_sided_identical;
  } else {
    throw ParseError("'" + path + "': unknown sides \"" + sides + "\"");
  }

  if (j.contains("dims")) {
    const json& dims = j.at("dims");
    if (!dims.is_array() || dims.size() != 2 ||
        !dims.at(0).is_number_unsigned() || !dims.at(1).is_number_unsigned()) {
      throw ParseError("'" + path +
                       "': \"dims\" must be a pair of positive integers");
    }
    cfg.dim_a = dims.at(0).get<std::size_t>();
    cfg.dim_b = dims.at(1).get<std::size_t>();
  }

  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
  return cfg;
}

std::string format_csv_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string records_to_csv(const std::vector<SampleRecord>& records) {
  std::ostringstream out;
  out << "p,sample_index,c_initial,c_final,bound,ratio\n";
  for (const SampleRecord& r : records) {
    out << format_csv_value(r.p) << ',' << r.sample_index << ','
        << format_csv_value(r.c_initial) << ',' << format_csv_value(r.c_final)
        << ',' << format_csv_value(r.bound) << ','
        << format_csv_value(r.ratio) << '\n';
  }
  return out.str();
}

std::string histograms_to_csv(
    const std::vector<std::pair<double, Histogram>>& histograms) {
  std::ostringstream out;
  out << "p,bin_lo,bin_hi,density\n";
  for (const auto& [p, h] : histograms) {
    for (std::size_t i = 0; i < h.densities.size(); ++i) {
      out << format_csv_value(p) << ',' << format_csv_value(h.bin_edges[i])
          << ',' << format_csv_value(h.bin_edges[i + 1]) << ','
          << format_csv_value(h.densities[i]) << '\n';
    }
  }
  return out.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  out << contents;
  if (!out) {
    throw std::runtime_error("failed while writing '" + path + "'");
  }
}

}  // namespace entdyn
