// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 uavrelay contributors

#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "uavrelay/errors.hpp"
#include "uavrelay/placement.hpp"

using namespace uavrelay;
using fixtures::rel_diff;

namespace {

struct GridMax {
  double r1 = 0.0;
  double value = -1.0;
};

template <typename F>
GridMax grid_argmax(double lo, double hi, double step, F&& f) {
  GridMax best;
  const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  for (long i = 0; i <= n; ++i) {
    const double r1 = lo + static_cast<double>(i) * step;
    const double v = f(r1);
    if (v > best.value) best = {r1, v};
  }
  return best;
}

bool has_kind(const PlacementSolution& sol, CandidateKind kind) {
  return std::any_of(sol.candidates_evaluated.begin(), sol.candidates_evaluated.end(),
                     [&](const Candidate& c) { return c.kind == kind; });
}

}  // namespace

TEST(Placement, ConstGainRootsNegativeDiscriminant) {
  Scenario s = fixtures::baseline();
  s.relay_max_gain_amplitude = 1e7;
  EXPECT_TRUE(root_const_gain(s).empty());
}

TEST(Placement, ConstGainRootsSmallWavelengthLimit) {
  Scenario s = fixtures::baseline();
  s.carrier_freq_hz = 1e15;
  s.relay_max_gain_amplitude = 1.0;
  // The upper root collapses onto R and drops out; only R/2 stays interior.
  const auto roots = root_const_gain(s);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_NEAR(roots[0], 500.0, 1e-9);

  s.carrier_freq_hz = 5e9;
  s.relay_max_gain_amplitude = 100.0;
  const auto both = root_const_gain(s);
  ASSERT_EQ(both.size(), 2u);
  EXPECT_NEAR(both[0], 500.0, 0.1);
  EXPECT_NEAR(both[1], 1000.0, 0.1);
  EXPECT_LT(both[1], 1000.0);
}

TEST(Placement, ConstGainRootMatchesGainRegionGrid) {
  // The gain-limited capacity peaks at the near endpoint; the analytic root is the interior
  // maximum of the gain-limited region.
  const Scenario s = fixtures::single_antenna(fixtures::baseline(5.0));
  const double boundary = region_boundary(s);
  const GridMax g = grid_argmax(std::ceil(boundary * 10.0) / 10.0, 990.0, 0.1, [&](double r1) {
    return capacity_single_uav_gain_limited(s, r1);
  });
  const auto roots = root_const_gain(s);
  const bool hit = std::any_of(roots.begin(), roots.end(),
                               [&](double r) { return std::abs(r - g.r1) <= 0.5; });
  EXPECT_TRUE(hit) << "grid argmax " << g.r1;
}

TEST(Placement, MaxPowerRootSymmetric) {
  Scenario s = fixtures::baseline();
  s.relay_noise_figure = 4.0;
  s.relay_power_budget_w = s.tx_power_w / 4.0;
  EXPECT_NEAR(root_max_power(s), 500.0, 1e-9);
}

TEST(Placement, MaxPowerRootMovesTowardTransmitter) {
  Scenario s = fixtures::baseline();
  double prev = root_max_power(s);
  for (double f : {1e1, 1e3, 1e6, 1e9}) {
    s.relay_noise_figure = f;
    const double r = root_max_power(s);
    EXPECT_LT(r, prev);
    prev = r;
  }
  EXPECT_LT(prev, 1e-3);
}

TEST(Placement, MaxPowerRootMatchesGrid) {
  for (double nf : {5.0, 12.0}) {
    const Scenario s = fixtures::baseline(nf);
    const GridMax g = grid_argmax(10.0, 990.0, 0.1, [&](double r1) {
      return capacity_single_uav_power_limited(s, r1);
    });
    EXPECT_NEAR(root_max_power(s), g.r1, 0.5);
  }
}

TEST(Placement, OptimizeSingleBeatsDenseGrid) {
  for (GainRule rule : {GainRule::Amplitude, GainRule::Power}) {
    for (double nf : {5.0, 12.0}) {
      const Scenario s = fixtures::baseline(nf, rule);
      const PlacementSolution sol = optimize_single(s);
      const GridMax g = grid_argmax(10.0, 990.0, 0.1, [&](double r1) {
        return single_link(s, r1).capacity_bits_per_use;
      });
      EXPECT_GE(sol.capacity_bits_per_use, g.value - 1e-6);
      EXPECT_LT(rel_diff(sol.capacity_bits_per_use, g.value), 1e-3);
      EXPECT_NEAR(sol.r1_m, g.r1, 0.5);
    }
  }
}

TEST(Placement, OptimizeSingleReturnsBestCandidate) {
  const PlacementSolution sol = optimize_single(fixtures::baseline());
  ASSERT_FALSE(sol.candidates_evaluated.empty());
  double best = -1.0;
  for (const Candidate& c : sol.candidates_evaluated) {
    best = std::max(best, c.capacity_bits_per_use);
    EXPECT_GE(c.r1_m, 10.0);
    EXPECT_LE(c.r1_m, 990.0);
  }
  EXPECT_EQ(sol.capacity_bits_per_use, best);
  EXPECT_GT(sol.r1_m, 0.0);
  EXPECT_LT(sol.r1_m, 1000.0);
  EXPECT_TRUE(has_kind(sol, CandidateKind::Endpoint));
  EXPECT_TRUE(has_kind(sol, CandidateKind::RegionBoundary));
  EXPECT_NEAR(sol.bound_gap, sol.bound_trace - sol.capacity_bits_per_use, 1e-15);
}

TEST(Placement, OptimizeSingleAlwaysGainLimited) {
  Scenario s = fixtures::baseline();
  s.relay_max_gain_amplitude = 10.0;
  ASSERT_LT(region_boundary(s), 10.0);
  const PlacementSolution sol = optimize_single(s);
  EXPECT_FALSE(has_kind(sol, CandidateKind::RootMaxPower));
  EXPECT_FALSE(has_kind(sol, CandidateKind::RegionBoundary));
  for (const Candidate& c : sol.candidates_evaluated) EXPECT_EQ(c.regime, Regime::GainLimited);
}

TEST(Placement, OptimizeSingleSymmetricPowerLimited) {
  Scenario s = fixtures::baseline();
  s.relay_max_gain_amplitude = 1e12;
  s.relay_noise_figure = 2.0;
  s.relay_power_budget_w = s.tx_power_w / 2.0;
  const PlacementSolution sol = optimize_single(s);
  EXPECT_NEAR(sol.r1_m, 500.0, 1e-9);
  EXPECT_EQ(sol.regime, Regime::PowerLimited);
}

TEST(Placement, OptimizeSingleEmptyRange) {
  SingleSearchOptions o;
  o.r1_min_m = 600.0;
  o.r1_max_m = 500.0;
  EXPECT_THROW(optimize_single(fixtures::baseline(), o), ValidationError);
  o.r1_min_m = 0.0;
  o.r1_max_m = 500.0;
  EXPECT_THROW(optimize_single(fixtures::baseline(), o), ValidationError);
}

TEST(Placement, SpacingCandidatesFirstHop) {
  const Scenario s = fixtures::baseline();
  const double lam = s.wavelength_m();
  const auto c = spacing_candidates(Hop::First, s, 500.0, {2, 2}, 0, 3);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_NEAR(c[0], 29.9792458, 1e-9);
  for (int m = 0; m < 4; ++m) EXPECT_NEAR(c[m], lam * 500.0 * (m + 0.5) / 0.5, 1e-9);
  for (std::size_t i = 1; i < c.size(); ++i) EXPECT_GT(c[i], c[i - 1]);
  const auto scaled = spacing_candidates(Hop::First, s, 250.0, {2, 2}, 0, 3);
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_NEAR(scaled[i] * 2.0, c[i], 1e-9);
}

TEST(Placement, SpacingCandidatesSecondHop) {
  Scenario s = fixtures::baseline();
  s.rx_array.counts = {3, 2};
  s.rx_array.spacings_m = {0.25, 0.5};
  const double lam = s.wavelength_m();
  const auto c = spacing_candidates(Hop::Second, s, 800.0, {2, 2}, 0, 1);
  EXPECT_NEAR(c[0], lam * 200.0 / 3.0 / 0.25, 1e-9);
  EXPECT_NEAR(c[1], lam * 200.0 * (1.0 + 1.0 / 3.0) / 0.25, 1e-9);
  EXPECT_NEAR(spacing_candidates(Hop::Second, s, 800.0, {2, 4}, 1, 0)[0],
              lam * 200.0 / 4.0 / 0.5, 1e-9);
  EXPECT_THROW(spacing_candidates(Hop::First, s, 800.0, {2, 2}, 2, 0), ValidationError);
  s.tx_array.counts = {1, 2};
  EXPECT_THROW(spacing_candidates(Hop::First, s, 800.0, {2, 2}, 0, 0), ValidationError);
}

TEST(Placement, MidpointSweepIsDegenerateAndAttainsBound) {
  const Scenario s = fixtures::baseline();
  const PlacementSolution sol = ura_search_at(s, 500.0, {2, 2});
  EXPECT_EQ(sol.candidates_evaluated.size(), 1u);
  EXPECT_LE(sol.capacity_bits_per_use, sol.bound_trace + 1e-9);
  EXPECT_LT(rel_diff(sol.capacity_bits_per_use, sol.bound_singular), 0.01);
}

TEST(Placement, UraSearchKeepsFullSweep) {
  const Scenario s = fixtures::baseline();
  UraSearchOptions o;
  o.sweep_points = 7;
  const PlacementSolution sol = ura_search_at(s, 300.0, {2, 2}, o);
  ASSERT_EQ(sol.candidates_evaluated.size(), 49u);
  double best = -1.0;
  for (const Candidate& c : sol.candidates_evaluated) best = std::max(best, c.capacity_bits_per_use);
  EXPECT_EQ(sol.capacity_bits_per_use, best);
  const double d1 = spacing_candidates(Hop::First, s, 300.0, {2, 2}, 0, 0)[0];
  const double d2 = spacing_candidates(Hop::Second, s, 300.0, {2, 2}, 0, 0)[0];
  EXPECT_DOUBLE_EQ(sol.candidates_evaluated.front().spacing_m[0], std::min(d1, d2));
  EXPECT_DOUBLE_EQ(sol.candidates_evaluated.back().spacing_m[1], std::max(d1, d2));
  EXPECT_LE(sol.capacity_bits_per_use, sol.bound_trace + 1e-9);
}

TEST(Placement, UraSearchIndependentOfThreads) {
  const Scenario s = fixtures::baseline(12.0);
  UraSearchOptions serial, parallel;
  parallel.threads = 4;
  const PlacementSolution a = ura_search_at(s, 700.0, {2, 2}, serial);
  const PlacementSolution b = ura_search_at(s, 700.0, {2, 2}, parallel);
  EXPECT_EQ(a.capacity_bits_per_use, b.capacity_bits_per_use);
  EXPECT_EQ(a.swarm_spec.spacings_m, b.swarm_spec.spacings_m);
  ASSERT_EQ(a.candidates_evaluated.size(), b.candidates_evaluated.size());
  for (std::size_t i = 0; i < a.candidates_evaluated.size(); ++i) {
    EXPECT_EQ(a.candidates_evaluated[i].capacity_bits_per_use,
              b.candidates_evaluated[i].capacity_bits_per_use);
  }
}

TEST(Placement, TwoStepUsesSingleAntennaDistance) {
  const Scenario s = fixtures::baseline();
  const PlacementSolution single = optimize_single(s);
  const PlacementSolution sol = two_step_search(s, {2, 2});
  EXPECT_EQ(sol.r1_m, single.r1_m);
  EXPECT_LE(sol.capacity_bits_per_use, sol.bound_trace + 1e-9);
  UraSearchOptions o;
  o.sweep_points = 1;
  EXPECT_THROW(two_step_search(s, {2, 2}, o), ValidationError);
  EXPECT_THROW(ura_search_at(s, 500.0, {2, 2}, o), ValidationError);
}

TEST(Placement, TwoStepSingleUavReducesToOptimizeSingle) {
  const Scenario s = fixtures::single_antenna(fixtures::baseline(12.0));
  const PlacementSolution a = optimize_single(s);
  const PlacementSolution b = two_step_search(s, {1, 1});
  EXPECT_EQ(a.r1_m, b.r1_m);
  EXPECT_EQ(a.capacity_bits_per_use, b.capacity_bits_per_use);
}

TEST(Placement, SpacingSweepValidation) {
  const Scenario s = fixtures::baseline();
  EXPECT_THROW(spacing_sweep(s, 800.0, {30.0, 30.0}, 11), ValidationError);
  EXPECT_THROW(spacing_sweep(s, 800.0, {0.0, 30.0}, 11), ValidationError);
  EXPECT_THROW(spacing_sweep(s, 800.0, {20.0, 30.0}, 1), ValidationError);
}

TEST(Placement, SpacingSweepDeterministicAndConsistent) {
  const Scenario s = fixtures::baseline();
  const auto a = spacing_sweep(s, 800.0, {20.0, 70.0}, 26);
  const auto b = spacing_sweep(s, 800.0, {20.0, 70.0}, 26, {2, 2}, SwarmAnchor::BaseHeight, false, 3);
  ASSERT_EQ(a.size(), 26u);
  EXPECT_EQ(a.front().spacing_m, 20.0);
  EXPECT_EQ(a.back().spacing_m, 70.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].capacity_bits_per_use, b[i].capacity_bits_per_use);
    EXPECT_EQ(a[i].icn_h1, b[i].icn_h1);
    EXPECT_EQ(a[i].icn_h2, b[i].icn_h2);
  }
  const Frame f = canonical_frame(s, 800.0);
  const PointList swarm = build_ura(swarm_ura_spec(s, 800.0, {2, 2}, {a[5].spacing_m, a[5].spacing_m},
                                                   SwarmAnchor::BaseHeight));
  const CapacityReport rep = evaluate_placement(s, f.tx, f.rx, swarm, 800.0);
  EXPECT_EQ(rep.capacity_bits_per_use, a[5].capacity_bits_per_use);
  EXPECT_EQ(rep.icn_h1, a[5].icn_h1);
}

TEST(Placement, SpacingSweepFirstHopPeakAtOrthogonalSpacing) {
  // Linear pairs at both ends isolate the first-hop condition.
  Scenario s = fixtures::baseline();
  s.tx_array.counts = {2, 1};
  s.rx_array.counts = {2, 1};
  const double du = spacing_candidates(Hop::First, s, 800.0, {2, 1}, 0, 0)[0];
  const auto sweep = spacing_sweep(s, 800.0, {du - 5.0, du + 5.0}, 101, {2, 1},
                                   SwarmAnchor::Boresight);
  const auto best = std::max_element(sweep.begin(), sweep.end(), [](const auto& x, const auto& y) {
    return x.icn_h1 < y.icn_h1;
  });
  EXPECT_GE(best->icn_h1, 0.999);
  EXPECT_NEAR(best->spacing_m, du, 0.5);
}
