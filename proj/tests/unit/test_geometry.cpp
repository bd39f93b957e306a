// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 uavrelay contributors

#include <algorithm>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "uavrelay/errors.hpp"
#include "uavrelay/geometry.hpp"

using namespace uavrelay;

namespace {

std::vector<double> pairwise(const PointList& pts) {
  std::vector<double> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) out.push_back((pts[i] - pts[j]).norm());
  }
  return out;
}

}  // namespace

TEST(Geometry, SingleElementIsReference) {
  ArraySpec spec;
  spec.reference_point_m = Vec3(1.0, 2.0, 3.0);
  const PointList pts = build_ura(spec);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0], spec.reference_point_m);
}

TEST(Geometry, TwoByTwoHalfMetreSquare) {
  ArraySpec spec;
  spec.counts = {2, 2};
  spec.spacings_m = {0.5, 0.5};
  const PointList pts = build_ura(spec);
  ASSERT_EQ(pts.size(), 4u);
  EXPECT_EQ(pts[1], Vec3(0.0, 0.0, 0.5));
  EXPECT_EQ(pts[2], Vec3(0.0, 0.5, 0.0));
  EXPECT_EQ(pts[3], Vec3(0.0, 0.5, 0.5));
  for (const Vec3& p : pts) EXPECT_EQ(p.x(), 0.0);
}

TEST(Geometry, RowMajorAndMinDistance) {
  ArraySpec spec;
  spec.counts = {2, 3};
  spec.spacings_m = {0.7, 0.4};
  const PointList pts = build_ura(spec);
  ASSERT_EQ(pts.size(), 6u);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(pts[static_cast<std::size_t>(i * 3 + j)], Vec3(0.0, 0.7 * i, 0.4 * j));
    }
  }
  const auto d = pairwise(pts);
  EXPECT_NEAR(*std::min_element(d.begin(), d.end()), 0.4, 1e-15);
  EXPECT_EQ(build_ura(spec), pts);
}

TEST(Geometry, ValidateRejectsBadSpecs) {
  ArraySpec spec;
  spec.counts = {0, 2};
  EXPECT_THROW(spec.validate(), ValidationError);
  spec = ArraySpec{};
  spec.spacings_m = {0.5, -1.0};
  EXPECT_THROW(spec.validate(), ValidationError);
  spec = ArraySpec{};
  spec.axis1 = Vec3(0.0, 1e-6, 1.0).normalized();
  EXPECT_THROW(spec.validate(), ValidationError);
  spec = ArraySpec{};
  spec.axis0 = Vec3(0.0, 2.0, 0.0);
  EXPECT_THROW(spec.validate(), ValidationError);
  EXPECT_NO_THROW(ArraySpec{}.validate());
}

TEST(Geometry, RigidTranslationKeepsDistances) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  ArraySpec spec;
  spec.counts = {3, 2};
  spec.spacings_m = {1.5, 0.25};
  const auto before = pairwise(build_ura(spec));
  for (int k = 0; k < 20; ++k) {
    spec.reference_point_m = Vec3(u(rng), u(rng), u(rng));
    const auto after = pairwise(build_ura(spec));
    ASSERT_EQ(after.size(), before.size());
    for (std::size_t i = 0; i < before.size(); ++i) EXPECT_NEAR(after[i], before[i], 1e-12);
  }
}

TEST(Geometry, CanonicalFrameSwarmReference) {
  const Scenario s = fixtures::baseline();
  const Frame f = canonical_frame(s, 500.0);
  EXPECT_EQ(f.swarm_reference, Vec3(500.0, 0.0, 30.0));
  EXPECT_EQ(f.hop1_distance_m, 500.0);
  ASSERT_EQ(f.tx.size(), 4u);
  ASSERT_EQ(f.rx.size(), 4u);
  for (const Vec3& p : f.tx) EXPECT_EQ(p.x(), 0.0);
  for (const Vec3& p : f.rx) EXPECT_EQ(p.x(), 1000.0);
  double zmin = std::numeric_limits<double>::infinity();
  for (const Vec3& p : f.tx) zmin = std::min(zmin, p.z());
  EXPECT_EQ(zmin, 0.0);
}

TEST(Geometry, MidpointFrameIsMirrorSymmetric) {
  const Scenario s = fixtures::baseline();
  const Frame f = canonical_frame(s, 500.0);
  for (std::size_t i = 0; i < f.tx.size(); ++i) {
    const Vec3 mirrored(1000.0 - f.tx[i].x(), f.tx[i].y(), f.tx[i].z());
    EXPECT_NEAR((mirrored - f.rx[i]).norm(), 0.0, 1e-12);
  }
}

TEST(Geometry, CanonicalFrameRange) {
  const Scenario s = fixtures::baseline();
  EXPECT_THROW(canonical_frame(s, 0.0), ValidationError);
  EXPECT_THROW(canonical_frame(s, -1.0), ValidationError);
  EXPECT_THROW(canonical_frame(s, 1000.0), ValidationError);
  EXPECT_NO_THROW(canonical_frame(s, 1e-6));
}

TEST(Geometry, SwarmSpecAnchors) {
  const Scenario s = fixtures::baseline();
  const ArraySpec base = swarm_ura_spec(s, 400.0, {2, 2}, {30.0, 20.0}, SwarmAnchor::BaseHeight);
  const PointList pts = build_ura(base);
  double zmin = 1e9, ysum = 0.0;
  for (const Vec3& p : pts) {
    EXPECT_EQ(p.x(), 400.0);
    zmin = std::min(zmin, p.z());
    ysum += p.y();
  }
  EXPECT_EQ(zmin, 30.0);
  EXPECT_NEAR(ysum, 0.0, 1e-12);

  const ArraySpec bore = swarm_ura_spec(s, 400.0, {2, 2}, {30.0, 20.0}, SwarmAnchor::Boresight);
  Vec3 centre = Vec3::Zero();
  for (const Vec3& p : build_ura(bore)) centre += p / 4.0;
  Vec3 tx_centre = Vec3::Zero();
  for (const Vec3& p : canonical_frame(s, 400.0).tx) tx_centre += p / 4.0;
  EXPECT_NEAR(centre.y(), tx_centre.y(), 1e-12);
  EXPECT_NEAR(centre.z(), tx_centre.z(), 1e-12);
}
