// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 uavrelay contributors

#ifndef UAVRELAY_PLACEMENT_HPP
#define UAVRELAY_PLACEMENT_HPP

#include <array>
#include <limits>
#include <string_view>
#include <vector>

#include "uavrelay/capacity.hpp"
#include "uavrelay/geometry.hpp"
#include "uavrelay/relay.hpp"
#include "uavrelay/scenario.hpp"

namespace uavrelay {

/// Why a candidate was evaluated.
enum class CandidateKind {
  Endpoint,
  RegionBoundary,
  RootMaxPower,
  RootConstGain,
  Sweep,
};

std::string_view to_string(CandidateKind kind);

struct Candidate {
  CandidateKind kind = CandidateKind::Sweep;
  double r1_m = 0.0;
  std::array<double, 2> spacing_m{0.0, 0.0};
  double capacity_bits_per_use = 0.0;
  Regime regime = Regime::GainLimited;
};

struct PlacementSolution {
  double r1_m = 0.0;
  ArraySpec swarm_spec;
  double capacity_bits_per_use = 0.0;
  double alpha_u = 0.0;
  Regime regime = Regime::GainLimited;
  double bound_trace = 0.0;
  double bound_singular = 0.0;
  /// bound_trace - capacity at the returned placement.
  double bound_gap = 0.0;
  std::vector<Candidate> candidates_evaluated;
};

/// One point of the single-antenna link: transmitter, UAV and receiver on
/// a straight line, so the hops are exactly R1 and R - R1 long.
struct SingleLinkPoint {
  double r1_m = 0.0;
  double capacity_bits_per_use = 0.0;
  double alpha_u = 0.0;
  Regime regime = Regime::GainLimited;
};

/// Exact end-to-end capacity of the single-antenna link at `r1`; array
/// layouts in the scenario are ignored.
SingleLinkPoint single_link(const Scenario& scenario, double r1, bool include_noise_in_power = false);

/// single_link on r1_min, r1_min + step, ... up to r1_max (inclusive within
/// half a step).
std::vector<SingleLinkPoint> single_sweep(const Scenario& scenario, double r1_min, double r1_max,
                                          double step, bool include_noise_in_power = false);

/// Stationary points of the gain-limited single-UAV capacity,
/// (3R +/- sqrt(R^2 - lambda^2 alpha_max^2 f_U / (2 pi^2))) / 4, keeping
/// only real values in (0, R). Both signs are returned; empty when the
/// discriminant is negative.
std::vector<double> root_const_gain(const Scenario& scenario);

/// Maximiser of the power-limited single-UAV capacity,
/// alpha_T^2 R / (P_U f_U + alpha_T^2).
double root_max_power(const Scenario& scenario);

struct SingleSearchOptions {
  double r1_min_m = 10.0;
  /// Defaults to R - 10 m when left as NaN.
  double r1_max_m = std::numeric_limits<double>::quiet_NaN();
  bool include_noise_in_power = false;
};

/// Best single-UAV hop distance: evaluates the exact capacity at the
/// analytic roots lying inside their own regime, the regime boundary and
/// the range endpoints, and returns the maximum.
PlacementSolution optimize_single(const Scenario& scenario, const SingleSearchOptions& options = {});

enum class Hop { First, Second };

/// UAV spacings along dimension `dim` that make one hop's channel
/// orthogonal between parallel URAs, for orders 0..max_order:
///
///   Hop::First:  d_T d_U = lambda R1       (m + 1 / max(N_T, N_U))
///   Hop::Second: d_U d_R = lambda (R - R1) (n + 1 / max(N_U, N_R))
///
/// Throws ValidationError when the counterpart array has a single element
/// along `dim` (no such condition exists).
std::vector<double> spacing_candidates(Hop hop, const Scenario& scenario, double r1,
                                       ArrayCounts swarm_counts, int dim, int max_order);

struct UraSearchOptions {
  int sweep_points = 21;
  SwarmAnchor anchor = SwarmAnchor::BaseHeight;
  bool include_noise_in_power = false;
  unsigned threads = 1;
  SingleSearchOptions single;
};

/// Spacing search at a fixed hop distance: per dimension, sweep evenly
/// between the order-0 spacings of the two hops (Cartesian product across
/// dimensions) and keep the best. Ties go to the smaller spacing.
PlacementSolution ura_search_at(const Scenario& scenario, double r1, ArrayCounts swarm_counts,
                                const UraSearchOptions& options = {});

/// Hop distance from optimize_single, then ura_search_at there. A 1x1
/// swarm between single antennas is exactly optimize_single.
PlacementSolution two_step_search(const Scenario& scenario, ArrayCounts swarm_counts,
                                  const UraSearchOptions& options = {});

struct SpacingSample {
  double spacing_m = 0.0;
  double capacity_bits_per_use = 0.0;
  double icn_h1 = 0.0;
  double icn_h2 = 0.0;
};

/// Capacity and per-hop ICN for a square swarm (same spacing on both axes)
/// at `points` spacings evenly covering [lo, hi].
std::vector<SpacingSample> spacing_sweep(const Scenario& scenario, double r1,
                                         std::array<double, 2> spacing_range_m, int points,
                                         ArrayCounts swarm_counts = {2, 2},
                                         SwarmAnchor anchor = SwarmAnchor::BaseHeight,
                                         bool include_noise_in_power = false, unsigned threads = 1);

}  // namespace uavrelay

#endif  // UAVRELAY_PLACEMENT_HPP
