// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 uavrelay contributors

#include "uavrelay/relay.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uavrelay {

std::string_view to_string(Regime regime) {
  return regime == Regime::PowerLimited ? "power-limited" : "gain-limited";
}

CMatrix GainPolicyResult::gain_matrix() const {
  const auto n = static_cast<Eigen::Index>(per_uav_tx_power_w.size());
  return CMatrix::Identity(n, n) * alpha_u;
}

GainPolicyResult equal_gain(const ChannelMatrix& h1, const Scenario& scenario,
                            bool include_noise_in_power) {
  const auto n_uavs = static_cast<int>(h1.rows());
  if (n_uavs < 1) throw std::domain_error("equal_gain: empty first-hop channel");

  const double alpha_t2 = scenario.tx_power_w;
  Eigen::VectorXd received = alpha_t2 * h1.entries.rowwise().squaredNorm();
  if (include_noise_in_power) received.array() += scenario.sigma_u2();

  const double worst = received.maxCoeff();
  if (!(worst > 0.0)) throw std::domain_error("equal_gain: UAVs receive no power");

  GainPolicyResult out;
  out.budget_w = scenario.relay_budget_w(n_uavs);
  const double power_gain = std::sqrt(out.budget_w / worst);
  if (power_gain >= scenario.relay_max_gain_amplitude) {
    out.alpha_u = scenario.relay_max_gain_amplitude;
    out.regime = Regime::GainLimited;
  } else {
    out.alpha_u = power_gain;
    out.regime = Regime::PowerLimited;
  }

  out.per_uav_tx_power_w.resize(static_cast<std::size_t>(n_uavs));
  const double alpha_u2 = out.alpha_u * out.alpha_u;
  for (int i = 0; i < n_uavs; ++i) out.per_uav_tx_power_w[i] = alpha_u2 * received[i];
  return out;
}

double region_boundary(const Scenario& scenario) {
  const double b = scenario.relay_budget_w(1);
  const double r = scenario.alpha_t() * scenario.relay_max_gain_amplitude *
                   scenario.wavelength_m() / (4.0 * std::numbers::pi * std::sqrt(b));
  const double big_r = scenario.link_distance_m;
  // Keep the result strictly inside the open interval.
  return std::clamp(r, big_r * 1e-12, big_r * (1.0 - 1e-12));
}

}  // namespace uavrelay
