// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 uavrelay contributors

#ifndef UAVRELAY_GEOMETRY_HPP
#define UAVRELAY_GEOMETRY_HPP

#include <array>
#include <vector>

#include <Eigen/Core>

namespace uavrelay {

struct Scenario;

using Vec3 = Eigen::Vector3d;
using PointList = std::vector<Vec3>;

/// Element counts per array dimension, (n0, n1).
using ArrayCounts = std::array<int, 2>;

/// Uniform rectangular array layout.
///
/// Element (i, j) sits at reference + i*d0*axis0 + j*d1*axis1. Elements are
/// enumerated row-major with j running fastest, so element index i*n1 + j
/// is the row/column index used for channel matrices.
struct ArraySpec {
  ArrayCounts counts{1, 1};
  std::array<double, 2> spacings_m{0.5, 0.5};
  Vec3 reference_point_m = Vec3::Zero();
  Vec3 axis0 = Vec3::UnitY();
  Vec3 axis1 = Vec3::UnitZ();

  int size() const { return counts[0] * counts[1]; }

  /// Throws ValidationError on non-positive counts/spacings or a
  /// non-orthonormal axis pair (tolerance 1e-12).
  void validate() const;
};

PointList build_ura(const ArraySpec& spec);

/// Where a URA swarm sits in its plane at x = R1.
enum class SwarmAnchor {
  /// Lowest row at the scenario's swarm base height, centred on y = 0.
  BaseHeight,
  /// Swarm centre aligned with the transmit array centre (broadside).
  Boresight,
};

/// Transmit/receive positions and the swarm reference for one hop distance.
///
/// x is the link axis and z is height. Both end arrays lie in y-z planes
/// (x = 0 and x = R), centred on y = 0 with their bottom row at z = 0. The
/// swarm reference is (R1, 0, base height).
struct Frame {
  PointList tx;
  PointList rx;
  Vec3 swarm_reference;
  double hop1_distance_m = 0.0;
};

Frame canonical_frame(const Scenario& scenario, double r1);

/// The end-array spec as placed by canonical_frame (at x = 0 or x = R).
ArraySpec placed_tx_array(const Scenario& scenario);
ArraySpec placed_rx_array(const Scenario& scenario);

/// Layout of a URA swarm parallel to the end arrays at x = R1.
ArraySpec swarm_ura_spec(const Scenario& scenario, double r1, ArrayCounts counts,
                         std::array<double, 2> spacings_m, SwarmAnchor anchor);

struct Placement {
  PointList positions_m;
  double hop1_distance_m = 0.0;
};

}  // namespace uavrelay

#endif  // UAVRELAY_GEOMETRY_HPP
