// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 uavrelay contributors

#include "uavrelay/scenario.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include "uavrelay/errors.hpp"

namespace uavrelay {

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }
double db_to_ratio(double db) { return std::pow(10.0, db / 10.0); }
double ratio_to_db(double ratio) { return 10.0 * std::log10(ratio); }

double db_to_amplitude(double db, GainRule rule) {
  return rule == GainRule::Power ? std::pow(10.0, db / 20.0) : std::pow(10.0, db / 10.0);
}

std::string_view to_string(PowerMode mode) {
  return mode == PowerMode::PerUav ? "per-uav" : "total";
}

std::string_view to_string(GainRule rule) {
  return rule == GainRule::Power ? "power" : "amplitude";
}

PowerMode parse_power_mode(std::string_view text) {
  if (text == "per-uav") return PowerMode::PerUav;
  if (text == "total") return PowerMode::TotalSplitEven;
  throw ValidationError("relay_power_mode", "expected 'per-uav' or 'total', got '" +
                                                std::string(text) + "'");
}

GainRule parse_gain_rule(std::string_view text) {
  if (text == "power") return GainRule::Power;
  if (text == "amplitude") return GainRule::Amplitude;
  throw ValidationError("relay_gain_rule", "expected 'power' or 'amplitude', got '" +
                                               std::string(text) + "'");
}

double Scenario::alpha_t() const { return std::sqrt(tx_power_w); }

double Scenario::relay_budget_w(int n_uavs) const {
  if (n_uavs < 1) throw ValidationError("n_uavs", "must be >= 1");
  return relay_power_mode == PowerMode::PerUav ? relay_power_budget_w
                                               : relay_power_budget_w / n_uavs;
}

namespace {

void require_positive(double value, const char* field) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ValidationError(field, "must be a finite value > 0");
  }
}

}  // namespace

void Scenario::validate() const {
  require_positive(link_distance_m, "link_distance_m");
  require_positive(carrier_freq_hz, "carrier_freq_hz");
  require_positive(tx_power_w, "tx_power_w");
  require_positive(relay_power_budget_w, "relay_power_budget_w");
  require_positive(relay_max_gain_amplitude, "relay_max_gain_amplitude");
  require_positive(noise_psd_w_per_hz, "noise_psd_w_per_hz");
  require_positive(bandwidth_hz, "bandwidth_hz");
  if (!(relay_noise_figure >= 1.0) || !std::isfinite(relay_noise_figure)) {
    throw ValidationError("relay_noise_figure", "must be >= 1 (0 dB)");
  }
  if (!(swarm_base_height_m >= 0.0) || !std::isfinite(swarm_base_height_m)) {
    throw ValidationError("swarm_base_height_m", "must be >= 0");
  }
  // The LOS model only makes sense with the link many wavelengths long.
  if (wavelength_m() * 100.0 > link_distance_m) {
    throw ValidationError("carrier_freq_hz", "wavelength must be much smaller than the link");
  }
  tx_array.validate();
  rx_array.validate();
}

namespace {

using nlohmann::json;

const json& require(const json& doc, const char* field) {
  if (!doc.is_object() || !doc.contains(field)) {
    throw ValidationError(field, "missing required field");
  }
  return doc.at(field);
}

double require_number(const json& doc, const char* field) {
  const json& value = require(doc, field);
  if (!value.is_number()) throw ValidationError(field, "must be a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) throw ValidationError(field, "must be finite");
  return x;
}

ArraySpec parse_array(const json& doc, const char* field) {
  const json& block = require(doc, field);
  const std::string prefix = field;
  if (!block.is_object()) throw ValidationError(prefix, "must be an object");

  const auto pair_of = [&](const char* key) {
    const std::string name = prefix + "." + key;
    if (!block.contains(key)) throw ValidationError(name, "missing required field");
    const json& arr = block.at(key);
    if (!arr.is_array() || arr.size() != 2 || !arr[0].is_number() || !arr[1].is_number()) {
      throw ValidationError(name, "must be a pair of numbers");
    }
    return std::array<double, 2>{arr[0].get<double>(), arr[1].get<double>()};
  };

  ArraySpec spec;
  const auto counts = pair_of("counts");
  for (int i = 0; i < 2; ++i) {
    if (counts[i] < 1 || counts[i] != std::floor(counts[i])) {
      throw ValidationError(prefix + ".counts", "must be integers >= 1");
    }
    spec.counts[i] = static_cast<int>(counts[i]);
  }
  spec.spacings_m = pair_of("spacing_m");
  for (double d : spec.spacings_m) {
    if (!(d > 0.0)) throw ValidationError(prefix + ".spacing_m", "must be > 0");
  }
  return spec;
}

}  // namespace

Scenario scenario_from_config(const json& doc) {
  if (!doc.is_object()) throw ValidationError("config", "must be a JSON object");

  Scenario s;
  s.link_distance_m = require_number(doc, "link_distance_m");
  if (!(s.link_distance_m > 0.0)) throw ValidationError("link_distance_m", "must be > 0");
  const double freq_ghz = require_number(doc, "carrier_freq_ghz");
  if (!(freq_ghz > 0.0)) throw ValidationError("carrier_freq_ghz", "must be > 0");
  s.carrier_freq_hz = freq_ghz * 1e9;

  s.tx_power_w = dbm_to_watts(require_number(doc, "tx_power_dbm"));
  s.relay_power_budget_w = dbm_to_watts(require_number(doc, "relay_power_dbm"));

  GainRule rule = GainRule::Power;
  if (doc.contains("relay_gain_rule")) {
    if (!doc["relay_gain_rule"].is_string()) {
      throw ValidationError("relay_gain_rule", "must be a string");
    }
    rule = parse_gain_rule(doc["relay_gain_rule"].get<std::string>());
  }
  s.relay_max_gain_amplitude = db_to_amplitude(require_number(doc, "relay_max_gain_db"), rule);

  if (doc.contains("relay_power_mode")) {
    if (!doc["relay_power_mode"].is_string()) {
      throw ValidationError("relay_power_mode", "must be a string");
    }
    s.relay_power_mode = parse_power_mode(doc["relay_power_mode"].get<std::string>());
  }

  const double nf_db = require_number(doc, "noise_figure_db");
  if (nf_db < 0.0) throw ValidationError("noise_figure_db", "must be >= 0 dB");
  s.relay_noise_figure = db_to_ratio(nf_db);

  s.noise_psd_w_per_hz = dbm_to_watts(require_number(doc, "noise_psd_dbm_per_hz"));
  const double bw_mhz = require_number(doc, "bandwidth_mhz");
  if (!(bw_mhz > 0.0)) throw ValidationError("bandwidth_mhz", "must be > 0");
  s.bandwidth_hz = bw_mhz * 1e6;

  s.swarm_base_height_m = require_number(doc, "swarm_base_height_m");
  s.tx_array = parse_array(doc, "tx_array");
  s.rx_array = parse_array(doc, "rx_array");

  s.validate();
  return s;
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("config", std::string("malformed JSON: ") + e.what());
  }
}

ArrayCounts swarm_counts_from_config(const json& doc, ArrayCounts fallback) {
  if (!doc.contains("swarm")) return fallback;
  const json& swarm = doc.at("swarm");
  if (!swarm.is_object() || !swarm.contains("counts")) {
    throw ValidationError("swarm.counts", "missing required field");
  }
  const json& counts = swarm.at("counts");
  if (!counts.is_array() || counts.size() != 2 || !counts[0].is_number_integer() ||
      !counts[1].is_number_integer() || counts[0].get<int>() < 1 || counts[1].get<int>() < 1) {
    throw ValidationError("swarm.counts", "must be a pair of integers >= 1");
  }
  return {counts[0].get<int>(), counts[1].get<int>()};
}

json baseline_config(double noise_figure_db, GainRule gain_rule) {
  return json{
      {"link_distance_m", 1000.0},
      {"carrier_freq_ghz", 5.0},
      {"tx_power_dbm", 12.0},
      {"relay_power_dbm", 0.0},
      {"relay_power_mode", "per-uav"},
      {"relay_max_gain_db", 45.0},
      {"relay_gain_rule", std::string(to_string(gain_rule))},
      {"noise_figure_db", noise_figure_db},
      {"noise_psd_dbm_per_hz", -174.0},
      {"bandwidth_mhz", 1.0},
      {"swarm_base_height_m", 30.0},
      {"tx_array", {{"counts", {2, 2}}, {"spacing_m", {0.5, 0.5}}}},
      {"rx_array", {{"counts", {2, 2}}, {"spacing_m", {0.5, 0.5}}}},
      {"swarm", {{"counts", {2, 2}}}},
  };
}

}  // namespace uavrelay
