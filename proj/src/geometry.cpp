// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 uavrelay contributors

#include "uavrelay/geometry.hpp"

#include <cmath>

#include "uavrelay/errors.hpp"
#include "uavrelay/scenario.hpp"

namespace uavrelay {

void ArraySpec::validate() const {
  if (counts[0] < 1 || counts[1] < 1) throw ValidationError("counts", "must be >= 1");
  if (!(spacings_m[0] > 0.0) || !(spacings_m[1] > 0.0)) {
    throw ValidationError("spacings_m", "must be > 0");
  }
  constexpr double tol = 1e-12;
  if (std::abs(axis0.norm() - 1.0) > tol || std::abs(axis1.norm() - 1.0) > tol ||
      std::abs(axis0.dot(axis1)) > tol) {
    throw ValidationError("orientation", "axes must be orthonormal");
  }
}

PointList build_ura(const ArraySpec& spec) {
  spec.validate();
  PointList points;
  points.reserve(static_cast<std::size_t>(spec.size()));
  for (int i = 0; i < spec.counts[0]; ++i) {
    for (int j = 0; j < spec.counts[1]; ++j) {
      points.push_back(spec.reference_point_m + i * spec.spacings_m[0] * spec.axis0 +
                       j * spec.spacings_m[1] * spec.axis1);
    }
  }
  return points;
}

namespace {

// Lateral offset that centres an array's first dimension on y = 0.
double centred_y(const ArrayCounts& counts, const std::array<double, 2>& spacings) {
  return -0.5 * (counts[0] - 1) * spacings[0];
}

ArraySpec place_end_array(const ArraySpec& spec, double x) {
  ArraySpec placed = spec;
  placed.axis0 = Vec3::UnitY();
  placed.axis1 = Vec3::UnitZ();
  placed.reference_point_m = Vec3(x, centred_y(spec.counts, spec.spacings_m), 0.0);
  return placed;
}

void check_hop_distance(const Scenario& scenario, double r1) {
  if (!(r1 > 0.0) || !(r1 < scenario.link_distance_m)) {
    throw ValidationError("r1", "hop distance must lie in (0, link_distance_m)");
  }
}

}  // namespace

ArraySpec placed_tx_array(const Scenario& scenario) {
  return place_end_array(scenario.tx_array, 0.0);
}

ArraySpec placed_rx_array(const Scenario& scenario) {
  return place_end_array(scenario.rx_array, scenario.link_distance_m);
}

Frame canonical_frame(const Scenario& scenario, double r1) {
  check_hop_distance(scenario, r1);
  Frame frame;
  frame.tx = build_ura(placed_tx_array(scenario));
  frame.rx = build_ura(placed_rx_array(scenario));
  frame.swarm_reference = Vec3(r1, 0.0, scenario.swarm_base_height_m);
  frame.hop1_distance_m = r1;
  return frame;
}

ArraySpec swarm_ura_spec(const Scenario& scenario, double r1, ArrayCounts counts,
                         std::array<double, 2> spacings_m, SwarmAnchor anchor) {
  check_hop_distance(scenario, r1);
  ArraySpec spec;
  spec.counts = counts;
  spec.spacings_m = spacings_m;
  spec.axis0 = Vec3::UnitY();
  spec.axis1 = Vec3::UnitZ();

  double z = scenario.swarm_base_height_m;
  if (anchor == SwarmAnchor::Boresight) {
    const ArraySpec& tx = scenario.tx_array;
    const double tx_centre_z = 0.5 * (tx.counts[1] - 1) * tx.spacings_m[1];
    z = tx_centre_z - 0.5 * (counts[1] - 1) * spacings_m[1];
  }
  spec.reference_point_m = Vec3(r1, centred_y(counts, spacings_m), z);
  spec.validate();
  return spec;
}

}  // namespace uavrelay
