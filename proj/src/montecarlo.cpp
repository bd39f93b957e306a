// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 uavrelay contributors

#include "uavrelay/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "uavrelay/capacity.hpp"
#include "uavrelay/errors.hpp"
#include "uavrelay/parallel.hpp"

namespace uavrelay {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t sample_seed(std::uint64_t master_seed, std::uint64_t r1_index,
                          std::uint64_t sample_index) {
  const std::uint64_t stream = splitmix64(master_seed ^ splitmix64(r1_index));
  return splitmix64(stream ^ splitmix64(~sample_index));
}

namespace {

double unit_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

PointList sample_placement(double r1, double square_width_m, double base_height_m, int n_uavs,
                           std::uint64_t seed) {
  if (!(square_width_m > 0.0)) throw ValidationError("square_width_m", "must be > 0");
  if (n_uavs < 1) throw ValidationError("n_uavs", "must be >= 1");
  std::mt19937_64 gen(seed);
  PointList points;
  points.reserve(static_cast<std::size_t>(n_uavs));
  for (int i = 0; i < n_uavs; ++i) {
    const double y = (unit_uniform(gen) - 0.5) * square_width_m;
    const double z = base_height_m + unit_uniform(gen) * square_width_m;
    points.emplace_back(r1, y, z);
  }
  return points;
}

double nearest_rank(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw ValidationError("samples", "empty sample");
  const auto n = static_cast<double>(sorted.size());
  auto rank = static_cast<std::size_t>(std::ceil(q * n));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

McStats mc_at_r1(const Scenario& scenario, double r1, const McOptions& options,
                 std::uint64_t r1_index) {
  if (options.n_samples < 1) throw ValidationError("samples", "must be >= 1");
  const Frame frame = canonical_frame(scenario, r1);

  struct Sample {
    double capacity = 0.0;
    double bound = 0.0;
  };
  std::vector<Sample> samples(static_cast<std::size_t>(options.n_samples));
  EvaluateOptions eval;
  eval.include_noise_in_power = options.include_noise_in_power;
  eval.far_field.reset();
  parallel_for(samples.size(), options.threads, [&](std::size_t k) {
    const PointList swarm =
        sample_placement(r1, options.square_width_m, scenario.swarm_base_height_m, options.n_uavs,
                         sample_seed(options.master_seed, r1_index, k));
    const CapacityReport report = evaluate_placement(scenario, frame.tx, frame.rx, swarm, r1, eval);
    samples[k] = {report.capacity_bits_per_use, report.bound_trace};
  });

  McStats stats;
  stats.r1_m = r1;
  stats.n_samples = options.n_samples;
  stats.seed = options.master_seed;

  // Reductions run in index order so the result is independent of how the
  // samples were scheduled.
  std::vector<double> sorted(samples.size());
  double sum = 0.0;
  double bound_sum = 0.0;
  std::size_t argmax = 0;
  stats.max_bound_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < samples.size(); ++k) {
    sorted[k] = samples[k].capacity;
    sum += samples[k].capacity;
    bound_sum += samples[k].bound;
    if (samples[k].capacity > samples[argmax].capacity) argmax = k;
    stats.max_bound_excess =
        std::max(stats.max_bound_excess, samples[k].capacity - samples[k].bound);
  }
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(samples.size());
  stats.mean = sum / n;
  stats.bound_trace_mean = bound_sum / n;
  stats.min = sorted.front();
  stats.max = sorted.back();
  stats.p5 = nearest_rank(sorted, 0.05);
  stats.p95 = nearest_rank(sorted, 0.95);
  stats.bound_trace_at_max = samples[argmax].bound;
  return stats;
}

std::vector<McStats> mc_sweep(const Scenario& scenario, std::span<const double> r1_list,
                              const McOptions& options) {
  if (r1_list.empty()) throw ValidationError("r1_list", "must not be empty");
  std::vector<McStats> out;
  out.reserve(r1_list.size());
  for (std::size_t i = 0; i < r1_list.size(); ++i) {
    out.push_back(mc_at_r1(scenario, r1_list[i], options, i));
  }
  return out;
}

}  // namespace uavrelay
