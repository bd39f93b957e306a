// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 uavrelay contributors

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/output.hpp"

namespace {

using uavrelay::SwarmAnchor;
namespace cli = uavrelay::cli;

void add_common(CLI::App& app, cli::CommonArgs& args) {
  app.add_option("--config", args.config, "Scenario config (JSON)")->required();
  app.add_option("--out", args.out_dir, "Output directory")->capture_default_str();
  app.add_option("--seed", args.seed, "Master seed")->capture_default_str();
  app.add_option("--power-mode", args.power_mode, "Relay budget: per-uav | total")
      ->check(CLI::IsMember({"per-uav", "total"}));
  app.add_option("--nf-db", args.nf_db, "Override the relay noise figure (dB)");
  app.add_option("--threads", args.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
}

void add_grid(CLI::App& app, cli::R1Grid& grid) {
  app.add_option("--r1-min", grid.min_m, "First hop distance (m)")->capture_default_str();
  app.add_option("--r1-max", grid.max_m, "Last hop distance (m), default R - 10");
  app.add_option("--r1-step", grid.step_m, "Hop distance step (m)")->capture_default_str();
}

void add_anchor(CLI::App& app, SwarmAnchor& anchor) {
  static const std::map<std::string, SwarmAnchor> anchors = {
      {"base", SwarmAnchor::BaseHeight}, {"boresight", SwarmAnchor::Boresight}};
  app.add_option("--anchor", anchor, "Swarm position: base | boresight")
      ->transform(CLI::CheckedTransformer(anchors, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Placement and capacity analysis for UAV-swarm amplify-and-forward MIMO relays"};
  app.set_version_flag("--version", std::string(cli::tool_version()));
  app.require_subcommand(1);

  cli::CommonArgs common;

  cli::SingleSweepArgs single_sweep;
  auto* sub_single_sweep = app.add_subcommand("single-sweep", "Single-UAV capacity versus R1");
  add_common(*sub_single_sweep, common);
  add_grid(*sub_single_sweep, single_sweep.grid);
  sub_single_sweep->add_flag("--zero-gain", single_sweep.zero_gain, "Force D = 0");

  auto* sub_single_opt = app.add_subcommand("single-opt", "Optimal single-UAV hop distance");
  add_common(*sub_single_opt, common);

  cli::SwarmSweepArgs swarm_sweep;
  std::string placement = "ura-search";
  auto* sub_swarm = app.add_subcommand("swarm-sweep", "Swarm capacity and bounds versus R1");
  add_common(*sub_swarm, common);
  add_grid(*sub_swarm, swarm_sweep.grid);
  sub_swarm->add_option("--placement", placement, "ura-search | fixed-spec")
      ->check(CLI::IsMember({"ura-search", "fixed-spec"}))
      ->capture_default_str();
  sub_swarm->add_option("--spacing", swarm_sweep.fixed_spacing_m,
                        "Swarm spacings d0 d1 (m) for fixed-spec")
      ->expected(2);
  sub_swarm->add_option("--points", swarm_sweep.sweep_points, "Spacing sweep points per axis")
      ->capture_default_str();
  add_anchor(*sub_swarm, swarm_sweep.anchor);

  cli::McArgs mc;
  auto* sub_mc = app.add_subcommand("mc", "Random-placement statistics versus R1");
  add_common(*sub_mc, common);
  add_grid(*sub_mc, mc.grid);
  sub_mc->add_option("--samples", mc.samples, "Placements per R1")->capture_default_str();
  sub_mc->add_option("--width", mc.width_m, "Placement square width (m)")->capture_default_str();

  cli::SpacingSweepArgs spacing;
  auto* sub_spacing = app.add_subcommand("spacing-sweep", "Capacity and ICN versus UAV spacing");
  add_common(*sub_spacing, common);
  sub_spacing->add_option("--r1", spacing.r1_m, "Hop distance (m)")->capture_default_str();
  sub_spacing->add_option("--spacing-min", spacing.spacing_min_m)->capture_default_str();
  sub_spacing->add_option("--spacing-max", spacing.spacing_max_m)->capture_default_str();
  sub_spacing->add_option("--points", spacing.points)->capture_default_str();
  add_anchor(*sub_spacing, spacing.anchor);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    nlohmann::json manifest;
    if (sub_single_sweep->parsed()) {
      manifest = cli::cmd_single_sweep(common, single_sweep);
    } else if (sub_single_opt->parsed()) {
      manifest = cli::cmd_single_opt(common);
    } else if (sub_swarm->parsed()) {
      swarm_sweep.fixed_spec = placement == "fixed-spec";
      manifest = cli::cmd_swarm_sweep(common, swarm_sweep);
    } else if (sub_mc->parsed()) {
      manifest = cli::cmd_mc(common, mc);
    } else if (sub_spacing->parsed()) {
      manifest = cli::cmd_spacing_sweep(common, spacing);
    }
    for (const auto& path : manifest["output_paths"]) std::cout << path.get<std::string>() << '\n';
    return 0;
  } catch (...) {
    std::string message;
    const int rc = cli::exit_code_for_current_exception(message);
    std::cerr << "error: " << message << '\n';
    return rc;
  }
}
