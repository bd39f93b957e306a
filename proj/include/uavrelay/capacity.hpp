// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 uavrelay contributors

#ifndef UAVRELAY_CAPACITY_HPP
#define UAVRELAY_CAPACITY_HPP

#include <optional>
#include <span>
#include <string_view>

#include "uavrelay/channel.hpp"
#include "uavrelay/relay.hpp"
#include "uavrelay/scenario.hpp"

namespace uavrelay {

/// End-to-end noise covariance at the receiver:
/// sigma_U^2 H2 D D^H H2^H + sigma_R^2 I.
CMatrix noise_covariance(const CMatrix& h2, const CMatrix& d, double sigma_u2, double sigma_r2);

/// log2 det(I + alpha_T^2 H1^H D^H H2^H Sigma^-1 H2 D H1) in bits per channel use.
///
/// Evaluated through Cholesky factors of well-scaled Hermitian positive
/// definite matrices, so large SNRs do not overflow the determinant.
/// Throws NumericalError if the result is not finite.
double capacity_end_to_end(const CMatrix& h1, const CMatrix& h2, const CMatrix& d, double alpha_t,
                           double sigma_u2, double sigma_r2);

/// Noise-whitened composite channel for a common relay gain:
/// (f_U alpha_U^2 H2 H2^H + I)^(-1/2) H2 H1.
///
/// Its point-to-point capacity with per-symbol power alpha_T^2 alpha_U^2
/// and noise sigma^2 equals capacity_end_to_end with D = alpha_U I.
CMatrix effective_channel(const CMatrix& h1, const CMatrix& h2, double f_u, double alpha_u);

/// log2 det(I + (alpha_T^2 alpha_U^2 / sigma^2) Ht^H Ht).
double capacity_effective(const CMatrix& h_tilde, double alpha_t, double alpha_u, double sigma2);

/// Rank-K trace bound: K log2(1 + (alpha_T^2 alpha_U^2 / (sigma^2 K)) Tr(Ht Ht^H)),
/// K = min(N_T, N_R, N_U). Equality iff Ht has orthogonal equal-norm columns.
double bound_trace(const CMatrix& h_tilde, int n_uavs, double alpha_t, double alpha_u,
                   double sigma2);

/// Bound from the per-hop singular values, paired largest with largest:
/// K log2(1 + (alpha_T^2 alpha_U^2 / (sigma^2 K)) *
///          sum_i psi1_i^2 psi2_i^2 / (1 + f_U alpha_U^2 psi2_i^2)).
double bound_singular(const CMatrix& h1, const CMatrix& h2, double alpha_t, double alpha_u,
                      double sigma2, double f_u);

/// Column-norm reading for the second-hop factor in the closed-form
/// far-field bound.
enum class FarFieldConvention {
  AsPrintedProduct,  ///< psi2^2 = N_U * N_R
  ColumnNorm,        ///< psi2^2 = N_R
};

std::string_view to_string(FarFieldConvention convention);
FarFieldConvention parse_far_field_convention(std::string_view text);

/// Closed-form far-field bound for orthogonal hops with
/// phi1 = max(N_T, N_U), phi2 = max(N_U, N_R):
///
///   K log2(1 + alpha_T^2 alpha_U^2 lambda^4 phi1^2 phi2^2 /
///          (sigma^2 R1^2 (f_U lambda^2 alpha_U^2 (4 pi)^2 + psi2^2 (4 pi)^4 (R - R1)^2)))
///
/// N_T and N_R come from the scenario's arrays. With single antennas both
/// conventions reduce to capacity_single_uav_gain_limited at alpha_U.
double bound_far_field(const Scenario& scenario, double r1, int n_uavs, double alpha_u,
                       FarFieldConvention convention);

/// Single on-axis UAV at its maximum gain.
double capacity_single_uav_gain_limited(const Scenario& scenario, double r1);

/// Single on-axis UAV transmitting at its full budget,
/// alpha_U^2 = P_U / (alpha_T^2 |h1|^2).
double capacity_single_uav_power_limited(const Scenario& scenario, double r1);

struct CapacityReport {
  double capacity_bits_per_use = 0.0;
  double alpha_u = 0.0;
  Regime regime = Regime::GainLimited;
  PowerMode power_mode = PowerMode::PerUav;
  double bound_trace = 0.0;
  double bound_singular = 0.0;
  std::optional<double> bound_far_field;
  double icn_h1 = 0.0;
  double icn_h2 = 0.0;
  int k_min = 0;
  /// Largest relative spread of entry magnitudes over both hops; above
  /// kNearFieldDeviation the closed-form far-field bound is not meaningful.
  double far_field_deviation = 0.0;
  bool near_field = false;
};

inline constexpr double kNearFieldDeviation = 0.05;

struct EvaluateOptions {
  bool include_noise_in_power = false;
  std::optional<FarFieldConvention> far_field = FarFieldConvention::AsPrintedProduct;
};

/// Full pipeline for one swarm placement: channels, equal gain, exact
/// capacity, both bounds, and the per-hop diagnostics.
CapacityReport evaluate_placement(const Scenario& scenario, std::span<const Vec3> tx,
                                  std::span<const Vec3> rx, std::span<const Vec3> swarm, double r1,
                                  const EvaluateOptions& options = {});

}  // namespace uavrelay

#endif  // UAVRELAY_CAPACITY_HPP
