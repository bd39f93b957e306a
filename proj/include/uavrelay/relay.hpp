// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 uavrelay contributors

#ifndef UAVRELAY_RELAY_HPP
#define UAVRELAY_RELAY_HPP

#include <string_view>
#include <vector>

#include "uavrelay/channel.hpp"
#include "uavrelay/scenario.hpp"

namespace uavrelay {

enum class Regime { PowerLimited, GainLimited };

std::string_view to_string(Regime regime);

/// Common amplify-and-forward gain shared by every UAV.
struct GainPolicyResult {
  double alpha_u = 0.0;
  Regime regime = Regime::GainLimited;
  std::vector<double> per_uav_tx_power_w;
  double budget_w = 0.0;  ///< per-UAV budget that was enforced

  /// D = alpha_u * I, sized to the swarm.
  CMatrix gain_matrix() const;
};

/// Largest common gain that keeps every UAV within its transmit budget and
/// below the gain cap.
///
/// UAV i receives p_i = alpha_T^2 * sum_j |H1_ij|^2 (+ sigma_U^2 when
/// `include_noise_in_power`), and alpha_U = min(alpha_max, sqrt(b / max_i p_i))
/// with b the per-UAV budget for the scenario's power mode. Throws
/// std::domain_error when no UAV receives any power.
GainPolicyResult equal_gain(const ChannelMatrix& h1, const Scenario& scenario,
                            bool include_noise_in_power = false);

/// Hop distance at which a single on-axis UAV switches from the power-limited
/// to the gain-limited regime: alpha_T * alpha_max * lambda / (4 pi sqrt(b)),
/// clamped into (0, R).
double region_boundary(const Scenario& scenario);

}  // namespace uavrelay

#endif  // UAVRELAY_RELAY_HPP
