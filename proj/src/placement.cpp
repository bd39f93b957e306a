// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 uavrelay contributors

#include "uavrelay/placement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "uavrelay/errors.hpp"
#include "uavrelay/parallel.hpp"

namespace uavrelay {

std::string_view to_string(CandidateKind kind) {
  switch (kind) {
    case CandidateKind::Endpoint: return "endpoint";
    case CandidateKind::RegionBoundary: return "region-boundary";
    case CandidateKind::RootMaxPower: return "root-max-power";
    case CandidateKind::RootConstGain: return "root-const-gain";
    case CandidateKind::Sweep: return "sweep";
  }
  return "unknown";
}

SingleLinkPoint single_link(const Scenario& scenario, double r1, bool include_noise_in_power) {
  if (!(r1 > 0.0) || !(r1 < scenario.link_distance_m)) {
    throw ValidationError("r1", "hop distance must lie in (0, link_distance_m)");
  }
  const double lambda = scenario.wavelength_m();
  const Vec3 tx[] = {Vec3::Zero()};
  const Vec3 uav[] = {Vec3(r1, 0.0, 0.0)};
  const Vec3 rx[] = {Vec3(scenario.link_distance_m, 0.0, 0.0)};
  const ChannelMatrix h1 = los_channel(tx, uav, lambda);
  const ChannelMatrix h2 = los_channel(uav, rx, lambda);
  const GainPolicyResult gain = equal_gain(h1, scenario, include_noise_in_power);

  SingleLinkPoint out;
  out.r1_m = r1;
  out.alpha_u = gain.alpha_u;
  out.regime = gain.regime;
  out.capacity_bits_per_use =
      capacity_end_to_end(h1.entries, h2.entries, gain.gain_matrix(), scenario.alpha_t(),
                          scenario.sigma_u2(), scenario.sigma_r2());
  return out;
}

std::vector<SingleLinkPoint> single_sweep(const Scenario& scenario, double r1_min, double r1_max,
                                          double step, bool include_noise_in_power) {
  if (!(step > 0.0)) throw ValidationError("step", "must be > 0");
  if (!(r1_max >= r1_min)) throw ValidationError("r1_range", "r1_max must be >= r1_min");
  const auto n = static_cast<std::size_t>(std::floor((r1_max - r1_min) / step + 0.5)) + 1;
  std::vector<SingleLinkPoint> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(single_link(scenario, r1_min + static_cast<double>(i) * step,
                              include_noise_in_power));
  }
  return out;
}

std::vector<double> root_const_gain(const Scenario& scenario) {
  const double big_r = scenario.link_distance_m;
  const double lambda = scenario.wavelength_m();
  const double alpha = scenario.relay_max_gain_amplitude;
  const double disc = big_r * big_r - lambda * lambda * alpha * alpha *
                                          scenario.relay_noise_figure /
                                          (2.0 * std::numbers::pi * std::numbers::pi);
  std::vector<double> roots;
  if (disc < 0.0) return roots;
  const double s = std::sqrt(disc);
  for (double r : {0.25 * (3.0 * big_r - s), 0.25 * (3.0 * big_r + s)}) {
    if (r > 0.0 && r < big_r) roots.push_back(r);
  }
  return roots;
}

double root_max_power(const Scenario& scenario) {
  const double alpha_t2 = scenario.tx_power_w;
  return alpha_t2 * scenario.link_distance_m /
         (scenario.relay_budget_w(1) * scenario.relay_noise_figure + alpha_t2);
}

namespace {

PlacementSolution from_single(const Scenario& scenario, const SingleLinkPoint& best) {
  PlacementSolution sol;
  sol.r1_m = best.r1_m;
  sol.swarm_spec.reference_point_m = Vec3(best.r1_m, 0.0, 0.0);
  sol.capacity_bits_per_use = best.capacity_bits_per_use;
  sol.alpha_u = best.alpha_u;
  sol.regime = best.regime;

  const double lambda = scenario.wavelength_m();
  const Vec3 tx[] = {Vec3::Zero()};
  const Vec3 uav[] = {sol.swarm_spec.reference_point_m};
  const Vec3 rx[] = {Vec3(scenario.link_distance_m, 0.0, 0.0)};
  const CMatrix h1 = los_channel(tx, uav, lambda).entries;
  const CMatrix h2 = los_channel(uav, rx, lambda).entries;
  const double f_u = scenario.relay_noise_figure;
  const double sigma2 = scenario.noise_power_w();
  sol.bound_trace = bound_trace(effective_channel(h1, h2, f_u, best.alpha_u), 1,
                                scenario.alpha_t(), best.alpha_u, sigma2);
  sol.bound_singular = bound_singular(h1, h2, scenario.alpha_t(), best.alpha_u, sigma2, f_u);
  sol.bound_gap = sol.bound_trace - sol.capacity_bits_per_use;
  return sol;
}

}  // namespace

PlacementSolution optimize_single(const Scenario& scenario, const SingleSearchOptions& options) {
  const double big_r = scenario.link_distance_m;
  const double lo = options.r1_min_m;
  const double hi = std::isnan(options.r1_max_m) ? big_r - 10.0 : options.r1_max_m;
  if (!(lo > 0.0) || !(hi < big_r) || !(lo <= hi)) {
    throw ValidationError("r1_range", "empty feasible range for the hop distance");
  }

  const double boundary = region_boundary(scenario);
  std::vector<std::pair<double, CandidateKind>> points = {{lo, CandidateKind::Endpoint},
                                                          {hi, CandidateKind::Endpoint}};
  if (boundary >= lo && boundary <= hi) points.emplace_back(boundary, CandidateKind::RegionBoundary);

  // Power-limited below the boundary, gain-limited above it.
  const double r_power = root_max_power(scenario);
  if (r_power >= lo && r_power <= std::min(boundary, hi)) {
    points.emplace_back(r_power, CandidateKind::RootMaxPower);
  }
  for (double r : root_const_gain(scenario)) {
    if (r >= std::max(boundary, lo) && r <= hi) points.emplace_back(r, CandidateKind::RootConstGain);
  }
  std::sort(points.begin(), points.end());

  PlacementSolution sol;
  SingleLinkPoint best;
  best.capacity_bits_per_use = -1.0;
  for (const auto& [r1, kind] : points) {
    const SingleLinkPoint p = single_link(scenario, r1, options.include_noise_in_power);
    sol.candidates_evaluated.push_back({kind, r1, {0.0, 0.0}, p.capacity_bits_per_use, p.regime});
    if (p.capacity_bits_per_use > best.capacity_bits_per_use) best = p;
  }

  auto candidates = std::move(sol.candidates_evaluated);
  sol = from_single(scenario, best);
  sol.candidates_evaluated = std::move(candidates);
  return sol;
}

std::vector<double> spacing_candidates(Hop hop, const Scenario& scenario, double r1,
                                       ArrayCounts swarm_counts, int dim, int max_order) {
  if (dim != 0 && dim != 1) throw ValidationError("dim", "must be 0 or 1");
  if (max_order < 0) throw ValidationError("max_order", "must be >= 0");
  if (!(r1 > 0.0) || !(r1 < scenario.link_distance_m)) {
    throw ValidationError("r1", "hop distance must lie in (0, link_distance_m)");
  }
  const ArraySpec& other = hop == Hop::First ? scenario.tx_array : scenario.rx_array;
  if (other.counts[dim] < 2) {
    throw ValidationError(hop == Hop::First ? "tx_array.counts" : "rx_array.counts",
                          "no orthogonality condition along a single-element dimension");
  }
  const double distance = hop == Hop::First ? r1 : scenario.link_distance_m - r1;
  const double n_max = std::max(other.counts[dim], swarm_counts[dim]);
  const double scale = scenario.wavelength_m() * distance / other.spacings_m[dim];

  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(max_order) + 1);
  for (int order = 0; order <= max_order; ++order) out.push_back(scale * (order + 1.0 / n_max));
  return out;
}

namespace {

struct SweepEval {
  double capacity = 0.0;
  double alpha_u = 0.0;
  Regime regime = Regime::GainLimited;
};

SweepEval evaluate_capacity(const Scenario& scenario, const Frame& frame,
                            const PointList& swarm, bool include_noise) {
  const double lambda = scenario.wavelength_m();
  const ChannelMatrix h1 = los_channel(frame.tx, swarm, lambda);
  const ChannelMatrix h2 = los_channel(swarm, frame.rx, lambda);
  const GainPolicyResult gain = equal_gain(h1, scenario, include_noise);
  return {capacity_end_to_end(h1.entries, h2.entries, gain.gain_matrix(), scenario.alpha_t(),
                              scenario.sigma_u2(), scenario.sigma_r2()),
          gain.alpha_u, gain.regime};
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (lo == hi) return {lo};
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
  return out;
}

std::vector<double> dimension_grid(const Scenario& scenario, double r1, ArrayCounts counts,
                                   int dim, int points) {
  if (counts[dim] < 2) return {1.0};  // spacing has no effect on a single row

  std::vector<double> ends;
  for (Hop hop : {Hop::First, Hop::Second}) {
    const ArraySpec& other = hop == Hop::First ? scenario.tx_array : scenario.rx_array;
    if (other.counts[dim] >= 2) {
      ends.push_back(spacing_candidates(hop, scenario, r1, counts, dim, 0).front());
    }
  }
  if (ends.empty()) {
    throw ValidationError("swarm.counts",
                          "neither end array constrains the spacing along dimension " +
                              std::to_string(dim));
  }
  const auto [lo, hi] = std::minmax_element(ends.begin(), ends.end());
  return linspace(*lo, *hi, points);
}

}  // namespace

PlacementSolution ura_search_at(const Scenario& scenario, double r1, ArrayCounts swarm_counts,
                                const UraSearchOptions& options) {
  if (options.sweep_points < 2) throw ValidationError("sweep_points", "must be >= 2");
  const Frame frame = canonical_frame(scenario, r1);
  const std::vector<double> grid0 =
      dimension_grid(scenario, r1, swarm_counts, 0, options.sweep_points);
  const std::vector<double> grid1 =
      dimension_grid(scenario, r1, swarm_counts, 1, options.sweep_points);

  const std::size_t n = grid0.size() * grid1.size();
  std::vector<Candidate> evaluated(n);
  parallel_for(n, options.threads, [&](std::size_t k) {
    const std::array<double, 2> spacing{grid0[k / grid1.size()], grid1[k % grid1.size()]};
    const PointList swarm =
        build_ura(swarm_ura_spec(scenario, r1, swarm_counts, spacing, options.anchor));
    const SweepEval e = evaluate_capacity(scenario, frame, swarm, options.include_noise_in_power);
    evaluated[k] = {CandidateKind::Sweep, r1, spacing, e.capacity, e.regime};
  });

  // Index order is ascending in (d0, d1), so a strict comparison keeps the
  // most compact of several equal candidates.
  std::size_t best = 0;
  for (std::size_t k = 1; k < n; ++k) {
    if (evaluated[k].capacity_bits_per_use > evaluated[best].capacity_bits_per_use) best = k;
  }

  PlacementSolution sol;
  sol.r1_m = r1;
  sol.swarm_spec =
      swarm_ura_spec(scenario, r1, swarm_counts, evaluated[best].spacing_m, options.anchor);
  const PointList swarm = build_ura(sol.swarm_spec);
  EvaluateOptions eval;
  eval.include_noise_in_power = options.include_noise_in_power;
  eval.far_field.reset();
  const CapacityReport report = evaluate_placement(scenario, frame.tx, frame.rx, swarm, r1, eval);
  sol.capacity_bits_per_use = report.capacity_bits_per_use;
  sol.alpha_u = report.alpha_u;
  sol.regime = report.regime;
  sol.bound_trace = report.bound_trace;
  sol.bound_singular = report.bound_singular;
  sol.bound_gap = report.bound_trace - report.capacity_bits_per_use;
  sol.candidates_evaluated = std::move(evaluated);
  return sol;
}

PlacementSolution two_step_search(const Scenario& scenario, ArrayCounts swarm_counts,
                                  const UraSearchOptions& options) {
  if (options.sweep_points < 2) throw ValidationError("sweep_points", "must be >= 2");
  const PlacementSolution single = optimize_single(scenario, options.single);
  const bool scalar_link = swarm_counts == ArrayCounts{1, 1} && scenario.tx_array.size() == 1 &&
                           scenario.rx_array.size() == 1;
  if (scalar_link) return single;
  return ura_search_at(scenario, single.r1_m, swarm_counts, options);
}

std::vector<SpacingSample> spacing_sweep(const Scenario& scenario, double r1,
                                         std::array<double, 2> spacing_range_m, int points,
                                         ArrayCounts swarm_counts, SwarmAnchor anchor,
                                         bool include_noise_in_power, unsigned threads) {
  const auto [lo, hi] = spacing_range_m;
  if (!(lo > 0.0)) throw ValidationError("spacing_min", "must be > 0");
  if (!(hi > lo)) throw ValidationError("spacing_max", "must be > spacing_min");
  if (points < 2) throw ValidationError("points", "must be >= 2");

  const Frame frame = canonical_frame(scenario, r1);
  const double lambda = scenario.wavelength_m();
  std::vector<SpacingSample> out(static_cast<std::size_t>(points));
  parallel_for(out.size(), threads, [&](std::size_t k) {
    const double d = lo + (hi - lo) * static_cast<double>(k) / (points - 1);
    const PointList swarm = build_ura(swarm_ura_spec(scenario, r1, swarm_counts, {d, d}, anchor));
    const ChannelMatrix h1 = los_channel(frame.tx, swarm, lambda);
    const ChannelMatrix h2 = los_channel(swarm, frame.rx, lambda);
    const GainPolicyResult gain = equal_gain(h1, scenario, include_noise_in_power);
    out[k].spacing_m = d;
    out[k].capacity_bits_per_use =
        capacity_end_to_end(h1.entries, h2.entries, gain.gain_matrix(), scenario.alpha_t(),
                            scenario.sigma_u2(), scenario.sigma_r2());
    out[k].icn_h1 = icn(h1);
    out[k].icn_h2 = icn(h2);
  });
  return out;
}

}  // namespace uavrelay
