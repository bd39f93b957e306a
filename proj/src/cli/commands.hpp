// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 uavrelay contributors

#ifndef UAVRELAY_CLI_COMMANDS_HPP
#define UAVRELAY_CLI_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "uavrelay/capacity.hpp"
#include "uavrelay/geometry.hpp"
#include "uavrelay/scenario.hpp"

namespace uavrelay::cli {

/// Flags shared by every subcommand.
struct CommonArgs {
  std::filesystem::path config;
  std::filesystem::path out_dir = ".";
  std::uint64_t seed = 1;
  std::optional<std::string> power_mode;  ///< overrides relay_power_mode
  std::optional<double> nf_db;            ///< overrides noise_figure_db
  unsigned threads = 0;
};

/// Config document after command-line overrides, and what it parses to.
struct LoadedConfig {
  nlohmann::json doc;
  Scenario scenario;
  ArrayCounts swarm_counts{2, 2};
};

LoadedConfig load_config(const CommonArgs& args);
LoadedConfig apply_overrides(nlohmann::json doc, const CommonArgs& args);

struct R1Grid {
  double min_m = 10.0;
  std::optional<double> max_m;  ///< defaults to R - 10 m
  double step_m = 1.0;
};

struct SingleSweepArgs {
  R1Grid grid;
  bool zero_gain = false;
};

struct SwarmSweepArgs {
  R1Grid grid{100.0, std::nullopt, 100.0};
  bool fixed_spec = false;            ///< false: URA spacing search per R1
  std::array<double, 2> fixed_spacing_m{30.0, 30.0};
  int sweep_points = 21;
  SwarmAnchor anchor = SwarmAnchor::BaseHeight;
};

struct McArgs {
  R1Grid grid{100.0, std::nullopt, 100.0};
  int samples = 5000;
  double width_m = 80.0;
};

struct SpacingSweepArgs {
  double r1_m = 800.0;
  double spacing_min_m = 20.0;
  double spacing_max_m = 70.0;
  int points = 201;
  SwarmAnchor anchor = SwarmAnchor::BaseHeight;
};

// Pure renderers: deterministic text for fixed inputs.
std::string render_single_sweep(const LoadedConfig& cfg, const SingleSweepArgs& args);
std::string render_single_opt(const LoadedConfig& cfg);
std::string render_swarm_sweep(const LoadedConfig& cfg, const SwarmSweepArgs& args,
                               unsigned threads);
std::string render_mc(const LoadedConfig& cfg, const McArgs& args, std::uint64_t seed,
                      unsigned threads);
std::string render_spacing_sweep(const LoadedConfig& cfg, const SpacingSweepArgs& args,
                                 unsigned threads);

/// Each command renders its output, writes it and a `<name>.manifest.json`
/// into args.out_dir, and returns the manifest.
nlohmann::json cmd_single_sweep(const CommonArgs& common, const SingleSweepArgs& args);
nlohmann::json cmd_single_opt(const CommonArgs& common);
nlohmann::json cmd_swarm_sweep(const CommonArgs& common, const SwarmSweepArgs& args);
nlohmann::json cmd_mc(const CommonArgs& common, const McArgs& args);
nlohmann::json cmd_spacing_sweep(const CommonArgs& common, const SpacingSweepArgs& args);

/// Process exit code for an in-flight exception: 2 validation, 3 numerical,
/// 4 I/O, 1 anything else.
int exit_code_for_current_exception(std::string& message);

}  // namespace uavrelay::cli

#endif  // UAVRELAY_CLI_COMMANDS_HPP
