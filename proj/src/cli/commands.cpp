// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 uavrelay contributors

#include "cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cli/output.hpp"
#include "uavrelay/errors.hpp"
#include "uavrelay/montecarlo.hpp"
#include "uavrelay/placement.hpp"

namespace uavrelay::cli {

using nlohmann::json;

LoadedConfig apply_overrides(json doc, const CommonArgs& args) {
  if (!doc.is_object()) throw ValidationError("config", "must be a JSON object");
  if (args.power_mode) doc["relay_power_mode"] = *args.power_mode;
  if (args.nf_db) doc["noise_figure_db"] = *args.nf_db;
  LoadedConfig cfg;
  cfg.scenario = scenario_from_config(doc);
  cfg.swarm_counts = swarm_counts_from_config(doc);
  cfg.doc = std::move(doc);
  return cfg;
}

LoadedConfig load_config(const CommonArgs& args) {
  if (args.config.empty()) throw ValidationError("config", "--config is required");
  return apply_overrides(load_json_file(args.config), args);
}

namespace {

std::vector<double> expand_grid(const Scenario& s, const R1Grid& grid) {
  const double hi = grid.max_m.value_or(s.link_distance_m - 10.0);
  if (!(grid.step_m > 0.0)) throw ValidationError("r1-step", "must be > 0");
  if (!(grid.min_m > 0.0)) throw ValidationError("r1-min", "must be > 0");
  if (!(hi < s.link_distance_m)) throw ValidationError("r1-max", "must be < link_distance_m");
  if (!(hi >= grid.min_m)) throw ValidationError("r1-max", "must be >= r1-min");
  const auto n = static_cast<std::size_t>(std::floor((hi - grid.min_m) / grid.step_m + 1e-9)) + 1;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = grid.min_m + static_cast<double>(i) * grid.step_m;
  return out;
}

std::string root_flags(const Scenario& s, double r1, double half_step) {
  const double boundary = region_boundary(s);
  std::string flags;
  const auto mark = [&](double root, std::string_view name) {
    if (std::abs(root - r1) <= half_step) {
      if (!flags.empty()) flags += '|';
      flags += name;
    }
  };
  mark(boundary, "region-boundary");
  const double r_power = root_max_power(s);
  if (r_power <= boundary) mark(r_power, "root-max-power");
  for (double r : root_const_gain(s)) {
    if (r >= boundary) mark(r, "root-const-gain");
  }
  return flags;
}

json solution_to_json(const PlacementSolution& sol, const Scenario& s) {
  json candidates = json::array();
  for (const Candidate& c : sol.candidates_evaluated) {
    candidates.push_back({{"kind", to_string(c.kind)},
                          {"r1_m", c.r1_m},
                          {"spacing_m", c.spacing_m},
                          {"capacity_bits_per_use", c.capacity_bits_per_use},
                          {"regime", to_string(c.regime)}});
  }
  return {
      {"r1_m", sol.r1_m},
      {"capacity_bits_per_use", sol.capacity_bits_per_use},
      {"alpha_u", sol.alpha_u},
      {"regime", to_string(sol.regime)},
      {"power_mode", to_string(s.relay_power_mode)},
      {"bound_trace", sol.bound_trace},
      {"bound_singular", sol.bound_singular},
      {"bound_gap", sol.bound_gap},
      {"swarm",
       {{"counts", sol.swarm_spec.counts},
        {"spacing_m", sol.swarm_spec.spacings_m},
        {"reference_point_m",
         {sol.swarm_spec.reference_point_m.x(), sol.swarm_spec.reference_point_m.y(),
          sol.swarm_spec.reference_point_m.z()}}}},
      {"candidates_evaluated", candidates},
  };
}

}  // namespace

std::string render_single_sweep(const LoadedConfig& cfg, const SingleSweepArgs& args) {
  const Scenario& s = cfg.scenario;
  const std::vector<double> grid = expand_grid(s, args.grid);
  CsvTable csv{"R1_m", "capacity_bits_per_use", "alpha_u", "regime", "root_flags"};
  for (double r1 : grid) {
    csv.cell(r1);
    if (args.zero_gain) {
      const Vec3 tx[] = {Vec3::Zero()};
      const Vec3 uav[] = {Vec3(r1, 0.0, 0.0)};
      const Vec3 rx[] = {Vec3(s.link_distance_m, 0.0, 0.0)};
      const double c = capacity_end_to_end(los_channel(tx, uav, s.wavelength_m()).entries,
                                           los_channel(uav, rx, s.wavelength_m()).entries,
                                           CMatrix::Zero(1, 1), s.alpha_t(), s.sigma_u2(),
                                           s.sigma_r2());
      csv.cell(c).cell(0.0).cell("zero-gain");
    } else {
      const SingleLinkPoint p = single_link(s, r1);
      csv.cell(p.capacity_bits_per_use).cell(p.alpha_u).cell(to_string(p.regime));
    }
    csv.cell(root_flags(s, r1, 0.5 * args.grid.step_m));
    csv.end_row();
  }
  return csv.str();
}

std::string render_single_opt(const LoadedConfig& cfg) {
  return solution_to_json(optimize_single(cfg.scenario), cfg.scenario).dump(2) + "\n";
}

std::string render_swarm_sweep(const LoadedConfig& cfg, const SwarmSweepArgs& args,
                               unsigned threads) {
  const Scenario& s = cfg.scenario;
  CsvTable csv{"R1_m",           "capacity_bits_per_use", "bound_trace",
               "bound_singular", "bound_far_field_product", "bound_far_field_column",
               "near_field",     "icn_h1",                "icn_h2",
               "alpha_u",        "regime",                "spacing0_m",
               "spacing1_m"};
  UraSearchOptions opts;
  opts.sweep_points = args.sweep_points;
  opts.anchor = args.anchor;
  opts.threads = threads;
  const int n_uavs = cfg.swarm_counts[0] * cfg.swarm_counts[1];

  for (double r1 : expand_grid(s, args.grid)) {
    ArraySpec spec;
    if (args.fixed_spec) {
      spec = swarm_ura_spec(s, r1, cfg.swarm_counts, args.fixed_spacing_m, args.anchor);
    } else {
      spec = ura_search_at(s, r1, cfg.swarm_counts, opts).swarm_spec;
    }
    const Frame frame = canonical_frame(s, r1);
    const PointList swarm = build_ura(spec);
    const CapacityReport rep = evaluate_placement(s, frame.tx, frame.rx, swarm, r1);
    csv.cell(r1)
        .cell(rep.capacity_bits_per_use)
        .cell(rep.bound_trace)
        .cell(rep.bound_singular)
        .cell(bound_far_field(s, r1, n_uavs, rep.alpha_u, FarFieldConvention::AsPrintedProduct))
        .cell(bound_far_field(s, r1, n_uavs, rep.alpha_u, FarFieldConvention::ColumnNorm))
        .cell(static_cast<long long>(rep.near_field))
        .cell(rep.icn_h1)
        .cell(rep.icn_h2)
        .cell(rep.alpha_u)
        .cell(to_string(rep.regime))
        .cell(spec.spacings_m[0])
        .cell(spec.spacings_m[1]);
    csv.end_row();
  }
  return csv.str();
}

std::string render_mc(const LoadedConfig& cfg, const McArgs& args, std::uint64_t seed,
                      unsigned threads) {
  McOptions opts;
  opts.n_samples = args.samples;
  opts.square_width_m = args.width_m;
  opts.n_uavs = cfg.swarm_counts[0] * cfg.swarm_counts[1];
  opts.master_seed = seed;
  opts.threads = threads;
  const std::vector<double> grid = expand_grid(cfg.scenario, args.grid);
  CsvTable csv{"R1_m", "mean", "p5", "p95", "max", "min", "bound_trace_mean", "n_samples"};
  for (const McStats& st : mc_sweep(cfg.scenario, grid, opts)) {
    csv.cell(st.r1_m)
        .cell(st.mean)
        .cell(st.p5)
        .cell(st.p95)
        .cell(st.max)
        .cell(st.min)
        .cell(st.bound_trace_mean)
        .cell(static_cast<long long>(st.n_samples));
    csv.end_row();
  }
  return csv.str();
}

std::string render_spacing_sweep(const LoadedConfig& cfg, const SpacingSweepArgs& args,
                                 unsigned threads) {
  CsvTable csv{"spacing_m", "capacity_bits_per_use", "icn_h1", "icn_h2"};
  for (const SpacingSample& p :
       spacing_sweep(cfg.scenario, args.r1_m, {args.spacing_min_m, args.spacing_max_m},
                     args.points, cfg.swarm_counts, args.anchor, false, threads)) {
    csv.cell(p.spacing_m).cell(p.capacity_bits_per_use).cell(p.icn_h1).cell(p.icn_h2);
    csv.end_row();
  }
  return csv.str();
}

namespace {

template <class Render>
json run(const CommonArgs& common, const std::string& name, const std::string& extension,
         Render&& render) {
  const auto start = std::chrono::steady_clock::now();
  const LoadedConfig cfg = load_config(common);
  const std::string content = render(cfg);

  const std::filesystem::path output = common.out_dir / (name + extension);
  const std::filesystem::path manifest_path = common.out_dir / (name + ".manifest.json");
  write_atomically(output, content);

  RunManifest manifest;
  manifest.command = name;
  manifest.scenario_digest = scenario_digest(cfg.doc);
  manifest.seed = common.seed;
  manifest.output_paths = {output.string()};
  manifest.tool_version = std::string(tool_version());
  manifest.extra["power_mode"] = to_string(cfg.scenario.relay_power_mode);
  manifest.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const json j = manifest.to_json();
  write_atomically(manifest_path, j.dump(2) + "\n");
  return j;
}

}  // namespace

json cmd_single_sweep(const CommonArgs& common, const SingleSweepArgs& args) {
  return run(common, "single_sweep", ".csv",
             [&](const LoadedConfig& cfg) { return render_single_sweep(cfg, args); });
}

json cmd_single_opt(const CommonArgs& common) {
  return run(common, "single_opt", ".json",
             [&](const LoadedConfig& cfg) { return render_single_opt(cfg); });
}

json cmd_swarm_sweep(const CommonArgs& common, const SwarmSweepArgs& args) {
  return run(common, "swarm_sweep", ".csv", [&](const LoadedConfig& cfg) {
    return render_swarm_sweep(cfg, args, common.threads);
  });
}

json cmd_mc(const CommonArgs& common, const McArgs& args) {
  return run(common, "mc", ".csv", [&](const LoadedConfig& cfg) {
    return render_mc(cfg, args, common.seed, common.threads);
  });
}

json cmd_spacing_sweep(const CommonArgs& common, const SpacingSweepArgs& args) {
  return run(common, "spacing_sweep", ".csv", [&](const LoadedConfig& cfg) {
    return render_spacing_sweep(cfg, args, common.threads);
  });
}

int exit_code_for_current_exception(std::string& message) {
  try {
    throw;
  } catch (const IoError& e) {
    message = e.what();
    return 4;
  } catch (const NumericalError& e) {
    message = e.what();
    return 3;
  } catch (const std::invalid_argument& e) {
    message = e.what();
    return 2;
  } catch (const std::domain_error& e) {
    message = e.what();
    return 2;
  } catch (const std::exception& e) {
    message = e.what();
    return 1;
  }
}

}  // namespace uavrelay::cli
