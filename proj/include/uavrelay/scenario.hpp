// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 uavrelay contributors

#ifndef UAVRELAY_SCENARIO_HPP
#define UAVRELAY_SCENARIO_HPP

#include <filesystem>
#include <string_view>

#include <json.hpp>

#include "uavrelay/geometry.hpp"

namespace uavrelay {

inline constexpr double kSpeedOfLight = 299792458.0;

enum class PowerMode {
  /// Every UAV may transmit up to the full relay budget.
  PerUav,
  /// The budget is the swarm total, split evenly across UAVs.
  TotalSplitEven,
};

/// How a relay gain figure in dB maps to the amplitude gain alpha.
enum class GainRule {
  /// dB expresses the power gain alpha^2: alpha = 10^(dB/20).
  Power,
  /// dB expresses alpha itself as a ratio: alpha = 10^(dB/10).
  Amplitude,
};

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);
double db_to_ratio(double db);
double ratio_to_db(double ratio);
double db_to_amplitude(double db, GainRule rule);

std::string_view to_string(PowerMode mode);
std::string_view to_string(GainRule rule);
PowerMode parse_power_mode(std::string_view text);
GainRule parse_gain_rule(std::string_view text);

/// Physical description of the relayed link, in linear SI units.
struct Scenario {
  double link_distance_m = 0.0;
  double carrier_freq_hz = 0.0;
  double tx_power_w = 0.0;
  double relay_power_budget_w = 0.0;
  PowerMode relay_power_mode = PowerMode::PerUav;
  double relay_max_gain_amplitude = 0.0;
  double relay_noise_figure = 1.0;
  double noise_psd_w_per_hz = 0.0;
  double bandwidth_hz = 0.0;
  ArraySpec tx_array;
  ArraySpec rx_array;
  double swarm_base_height_m = 0.0;

  double wavelength_m() const { return kSpeedOfLight / carrier_freq_hz; }
  double alpha_t() const;
  /// Thermal noise power sigma^2 = psd * bandwidth.
  double noise_power_w() const { return noise_psd_w_per_hz * bandwidth_hz; }
  double sigma_r2() const { return noise_power_w(); }
  double sigma_u2() const { return relay_noise_figure * noise_power_w(); }
  /// Transmit budget of a single UAV in a swarm of `n_uavs`.
  double relay_budget_w(int n_uavs) const;

  void validate() const;
};

/// Builds a Scenario from a JSON document with unit-suffixed keys:
///
///   link_distance_m, carrier_freq_ghz, tx_power_dbm, relay_power_dbm,
///   relay_max_gain_db, noise_figure_db, noise_psd_dbm_per_hz, bandwidth_mhz,
///   swarm_base_height_m, tx_array{counts, spacing_m}, rx_array{...}
///
/// Optional: relay_power_mode ("per-uav" | "total", default per-uav) and
/// relay_gain_rule ("power" | "amplitude", default power).
/// Missing or non-physical fields raise ValidationError naming the field.
Scenario scenario_from_config(const nlohmann::json& doc);

nlohmann::json load_json_file(const std::filesystem::path& path);

/// Swarm URA counts from an optional "swarm": {"counts": [n0, n1]} block.
ArrayCounts swarm_counts_from_config(const nlohmann::json& doc, ArrayCounts fallback = {2, 2});

/// Two-hop reference link: 1 km, 5 GHz, 12 dBm transmitter, 0 dBm relay
/// budget, 45 dB maximum relay gain, -174 dBm/Hz over 1 MHz, 2x2 URAs at
/// 0.5 m on both ends, swarm base 30 m above the arrays.
nlohmann::json baseline_config(double noise_figure_db = 5.0,
                               GainRule gain_rule = GainRule::Amplitude);

}  // namespace uavrelay

#endif  // UAVRELAY_SCENARIO_HPP
