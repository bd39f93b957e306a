// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 uavrelay contributors

#include "uavrelay/channel.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <Eigen/SVD>

#include "uavrelay/errors.hpp"

namespace uavrelay {

ChannelMatrix los_channel(std::span<const Vec3> tx_points, std::span<const Vec3> rx_points,
                          double wavelength_m) {
  if (!(wavelength_m > 0.0)) throw ValidationError("wavelength_m", "must be > 0");
  constexpr double pi = std::numbers::pi;
  const auto n_rx = static_cast<Eigen::Index>(rx_points.size());
  const auto n_tx = static_cast<Eigen::Index>(tx_points.size());

  ChannelMatrix h{CMatrix(n_rx, n_tx), wavelength_m};
  for (Eigen::Index i = 0; i < n_rx; ++i) {
    for (Eigen::Index j = 0; j < n_tx; ++j) {
      const double d = (rx_points[i] - tx_points[j]).norm();
      if (!(d > 0.0)) throw std::domain_error("los_channel: coincident tx/rx points");
      h.entries(i, j) = std::polar(wavelength_m / (4.0 * pi * d), 2.0 * pi * d / wavelength_m);
    }
  }
  return h;
}

Eigen::VectorXd singular_values(const CMatrix& m) {
  // JacobiSVD returns singular values sorted in decreasing order.
  return Eigen::JacobiSVD<CMatrix>(m).singularValues();
}

double icn(const CMatrix& m) {
  if (m.size() == 0) throw std::domain_error("icn: empty matrix");
  const Eigen::VectorXd s = singular_values(m);
  if (!(s[0] > 0.0)) throw std::domain_error("icn: all-zero matrix");
  return s[s.size() - 1] / s[0];
}

FarFieldFactor far_field_factor(const ChannelMatrix& h, double nominal_distance_m) {
  if (!(nominal_distance_m > 0.0)) {
    throw ValidationError("nominal_distance_m", "must be > 0");
  }
  FarFieldFactor out;
  out.scale = h.wavelength_m / (4.0 * std::numbers::pi * nominal_distance_m);
  out.normalized = h.entries / out.scale;
  out.max_magnitude_deviation = (out.normalized.cwiseAbs().array() - 1.0).abs().maxCoeff();
  return out;
}

void write_channel_csv(std::ostream& out, const ChannelMatrix& h) {
  const auto old_precision = out.precision(17);
  out << "row,col,re,im\n";
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    for (Eigen::Index j = 0; j < h.cols(); ++j) {
      out << i << ',' << j << ',' << h.entries(i, j).real() << ',' << h.entries(i, j).imag()
          << '\n';
    }
  }
  out.precision(old_precision);
}

}  // namespace uavrelay
