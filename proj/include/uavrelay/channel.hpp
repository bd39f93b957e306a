// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 uavrelay contributors

#ifndef UAVRELAY_CHANNEL_HPP
#define UAVRELAY_CHANNEL_HPP

#include <iosfwd>
#include <span>

#include <Eigen/Core>

#include "uavrelay/geometry.hpp"

namespace uavrelay {

using CMatrix = Eigen::MatrixXcd;

/// Narrowband channel between two point sets: rows index receive
/// elements, columns index transmit elements.
struct ChannelMatrix {
  CMatrix entries;
  double wavelength_m = 0.0;

  Eigen::Index rows() const { return entries.rows(); }
  Eigen::Index cols() const { return entries.cols(); }
};

/// Free-space line-of-sight channel. Entry (i, j) is
/// lambda / (4 pi d) * exp(+j 2 pi d / lambda), with d the exact Euclidean
/// distance between rx point i and tx point j.
///
/// Throws std::domain_error for coincident points.
ChannelMatrix los_channel(std::span<const Vec3> tx_points, std::span<const Vec3> rx_points,
                          double wavelength_m);

/// Singular values in non-increasing order.
Eigen::VectorXd singular_values(const CMatrix& m);

/// Inverse condition number sigma_min / sigma_max, in [0, 1].
/// Throws std::domain_error for an empty or all-zero matrix.
double icn(const CMatrix& m);
inline double icn(const ChannelMatrix& h) { return icn(h.entries); }

struct FarFieldFactor {
  double scale = 0.0;  ///< lambda / (4 pi nominal distance)
  CMatrix normalized;  ///< entries / scale
  double max_magnitude_deviation = 0.0;  ///< max | |normalized_ij| - 1 |
};

/// Splits a channel into the common free-space magnitude at
/// `nominal_distance_m` and a residual whose entries are ideally unit-modulus.
FarFieldFactor far_field_factor(const ChannelMatrix& h, double nominal_distance_m);

/// Writes "row,col,re,im" lines (with header), row-major, 17 significant digits.
void write_channel_csv(std::ostream& out, const ChannelMatrix& h);

}  // namespace uavrelay

#endif  // UAVRELAY_CHANNEL_HPP
