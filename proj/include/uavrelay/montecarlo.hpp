// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 uavrelay contributors

#ifndef UAVRELAY_MONTECARLO_HPP
#define UAVRELAY_MONTECARLO_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "uavrelay/geometry.hpp"
#include "uavrelay/scenario.hpp"

namespace uavrelay {

/// SplitMix64 finaliser.
std::uint64_t splitmix64(std::uint64_t x);

/// Counter-based seed for one sample:
/// splitmix64(splitmix64(master ^ splitmix64(r1_index)) ^ splitmix64(~sample_index)).
/// Depends only on its arguments, never on evaluation order.
std::uint64_t sample_seed(std::uint64_t master_seed, std::uint64_t r1_index,
                          std::uint64_t sample_index);

/// `n_uavs` points drawn i.i.d. uniform on the vertical square
/// y in [-W/2, W/2], z in [base, base + W] at x = r1, from a mt19937_64
/// stream seeded with `seed` (53-bit mantissa mapping, so the sequence is
/// identical on every standard library).
PointList sample_placement(double r1, double square_width_m, double base_height_m, int n_uavs,
                           std::uint64_t seed);

struct McOptions {
  int n_samples = 5000;
  double square_width_m = 80.0;
  int n_uavs = 4;
  std::uint64_t master_seed = 1;
  bool include_noise_in_power = false;
  unsigned threads = 1;
};

struct McStats {
  double r1_m = 0.0;
  double mean = 0.0;
  double p5 = 0.0;
  double p95 = 0.0;
  double max = 0.0;
  double min = 0.0;
  int n_samples = 0;
  std::uint64_t seed = 0;
  /// Mean of the per-sample trace bounds.
  double bound_trace_mean = 0.0;
  /// Trace bound of the sample that reached `max`.
  double bound_trace_at_max = 0.0;
  /// Largest capacity - bound_trace over all samples (should be <= 0).
  double max_bound_excess = 0.0;
};

/// Nearest-rank percentile: the ceil(q n)-th smallest value (1-based),
/// `sorted` ascending and non-empty.
double nearest_rank(std::span<const double> sorted, double q);

/// Capacity statistics over random swarm placements at one hop distance.
/// Sample k uses sample_seed(master_seed, r1_index, k).
McStats mc_at_r1(const Scenario& scenario, double r1, const McOptions& options,
                 std::uint64_t r1_index = 0);

std::vector<McStats> mc_sweep(const Scenario& scenario, std::span<const double> r1_list,
                              const McOptions& options);

}  // namespace uavrelay

#endif  // UAVRELAY_MONTECARLO_HPP
