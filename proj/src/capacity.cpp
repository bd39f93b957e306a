// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 uavrelay contributors

#include "uavrelay/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "uavrelay/errors.hpp"

namespace uavrelay {

namespace {

constexpr double kPi = std::numbers::pi;

// log2 det(I + A) for Hermitian positive semidefinite A. Cholesky recurrence on
// I + A with the unit diagonal kept implicit, so each pivot is 1 + delta and
// contributes log1p(delta); small capacities keep full relative precision.
double log2_det_eye_plus(const CMatrix& a_in, const char* what) {
  const CMatrix a = 0.5 * (a_in + a_in.adjoint());
  const Eigen::Index n = a.rows();
  CMatrix l = CMatrix::Zero(n, n);
  double acc = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    double delta = a(j, j).real();
    for (Eigen::Index k = 0; k < j; ++k) delta -= std::norm(l(j, k));
    if (!(delta > -1.0)) {
      std::ostringstream msg;
      msg << what << ": matrix is not positive definite (size " << n << ")";
      throw NumericalError(msg.str());
    }
    const double pivot = std::sqrt(1.0 + delta);
    l(j, j) = pivot;
    acc += std::log1p(delta);
    for (Eigen::Index i = j + 1; i < n; ++i) {
      std::complex<double> s = a(i, j);
      for (Eigen::Index k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / pivot;
    }
  }
  return acc / std::numbers::ln2;
}

double finite_or_throw(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw NumericalError(std::string(what) + ": non-finite result (" + std::to_string(value) + ")");
  }
  return value;
}

int rank_ceiling(Eigen::Index n_t, Eigen::Index n_r, Eigen::Index n_u) {
  return static_cast<int>(std::min({n_t, n_r, n_u}));
}

}  // namespace

CMatrix noise_covariance(const CMatrix& h2, const CMatrix& d, double sigma_u2, double sigma_r2) {
  const CMatrix g = h2 * d;
  CMatrix sigma = sigma_u2 * (g * g.adjoint());
  sigma.diagonal().array() += sigma_r2;
  return 0.5 * (sigma + sigma.adjoint());
}

double capacity_end_to_end(const CMatrix& h1, const CMatrix& h2, const CMatrix& d, double alpha_t,
                           double sigma_u2, double sigma_r2) {
  if (h2.cols() != d.rows() || d.cols() != h1.rows()) {
    throw ValidationError("channels", "non-conformant H1/D/H2 dimensions");
  }
  if (!(sigma_r2 > 0.0)) throw ValidationError("sigma_r2", "must be > 0");

  // Normalise by sigma_R^2 so the covariance is O(1): Sigma / sigma_R^2.
  const CMatrix sigma_n = noise_covariance(h2, d, sigma_u2 / sigma_r2, 1.0);
  const CMatrix a = h2 * d * h1;
  Eigen::LLT<CMatrix> llt(sigma_n);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("capacity_end_to_end: noise covariance factorisation failed");
  }
  const CMatrix whitened_solve = llt.solve(a);
  const CMatrix m = (alpha_t * alpha_t / sigma_r2) * (a.adjoint() * whitened_solve);
  const double c = log2_det_eye_plus(m, "capacity_end_to_end");
  return std::max(0.0, finite_or_throw(c, "capacity_end_to_end"));
}

CMatrix effective_channel(const CMatrix& h1, const CMatrix& h2, double f_u, double alpha_u) {
  if (!(f_u >= 0.0)) throw ValidationError("f_u", "must be >= 0");
  CMatrix a = (f_u * alpha_u * alpha_u) * (h2 * h2.adjoint());
  a.diagonal().array() += 1.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(0.5 * (a + a.adjoint()));
  return eig.operatorInverseSqrt() * (h2 * h1);
}

double capacity_effective(const CMatrix& h_tilde, double alpha_t, double alpha_u, double sigma2) {
  const CMatrix m =
      (alpha_t * alpha_t * alpha_u * alpha_u / sigma2) * (h_tilde.adjoint() * h_tilde);
  return std::max(0.0, finite_or_throw(log2_det_eye_plus(m, "capacity_effective"),
                                       "capacity_effective"));
}

double bound_trace(const CMatrix& h_tilde, int n_uavs, double alpha_t, double alpha_u,
                   double sigma2) {
  const int k = rank_ceiling(h_tilde.cols(), h_tilde.rows(), n_uavs);
  const double snr = alpha_t * alpha_t * alpha_u * alpha_u / sigma2;
  const double x = snr / k * h_tilde.squaredNorm();
  return finite_or_throw(k * std::log1p(x) / std::numbers::ln2, "bound_trace");
}

double bound_singular(const CMatrix& h1, const CMatrix& h2, double alpha_t, double alpha_u,
                      double sigma2, double f_u) {
  const int k = rank_ceiling(h1.cols(), h2.rows(), h1.rows());
  const Eigen::VectorXd psi1 = singular_values(h1);
  const Eigen::VectorXd psi2 = singular_values(h2);
  const double alpha_u2 = alpha_u * alpha_u;
  double sum = 0.0;
  for (int i = 0; i < k; ++i) {
    const double p1 = psi1[i] * psi1[i];
    const double p2 = psi2[i] * psi2[i];
    sum += p1 * p2 / (1.0 + f_u * alpha_u2 * p2);
  }
  const double snr = alpha_t * alpha_t * alpha_u2 / sigma2;
  return finite_or_throw(k * std::log1p(snr / k * sum) / std::numbers::ln2, "bound_singular");
}

std::string_view to_string(FarFieldConvention convention) {
  return convention == FarFieldConvention::AsPrintedProduct ? "product" : "column-norm";
}

FarFieldConvention parse_far_field_convention(std::string_view text) {
  if (text == "product") return FarFieldConvention::AsPrintedProduct;
  if (text == "column-norm") return FarFieldConvention::ColumnNorm;
  throw ValidationError("far_field_convention",
                        "expected 'product' or 'column-norm', got '" + std::string(text) + "'");
}

namespace {

void check_r1(const Scenario& scenario, double r1) {
  if (!(r1 > 0.0) || !(r1 < scenario.link_distance_m)) {
    throw ValidationError("r1", "hop distance must lie in (0, link_distance_m)");
  }
}

}  // namespace

double bound_far_field(const Scenario& scenario, double r1, int n_uavs, double alpha_u,
                       FarFieldConvention convention) {
  check_r1(scenario, r1);
  if (n_uavs < 1) throw ValidationError("n_uavs", "must be >= 1");
  const int n_t = scenario.tx_array.size();
  const int n_r = scenario.rx_array.size();
  const int k = std::min({n_t, n_r, n_uavs});
  const double phi1 = std::max(n_t, n_uavs);
  const double phi2 = std::max(n_uavs, n_r);
  const double psi2_sq = convention == FarFieldConvention::AsPrintedProduct
                             ? static_cast<double>(n_uavs) * n_r
                             : static_cast<double>(n_r);

  const double lambda = scenario.wavelength_m();
  const double lambda2 = lambda * lambda;
  const double four_pi2 = 16.0 * kPi * kPi;
  const double r2 = scenario.link_distance_m - r1;
  const double alpha_u2 = alpha_u * alpha_u;

  const double num = scenario.tx_power_w * alpha_u2 * lambda2 * lambda2 * phi1 * phi1 * phi2 * phi2;
  const double den = scenario.noise_power_w() * r1 * r1 *
                     (scenario.relay_noise_figure * lambda2 * alpha_u2 * four_pi2 +
                      psi2_sq * four_pi2 * four_pi2 * r2 * r2);
  return finite_or_throw(k * std::log1p(num / den) / std::numbers::ln2, "bound_far_field");
}

double capacity_single_uav_gain_limited(const Scenario& scenario, double r1) {
  check_r1(scenario, r1);
  const double alpha_u2 = scenario.relay_max_gain_amplitude * scenario.relay_max_gain_amplitude;
  const double lambda2 = scenario.wavelength_m() * scenario.wavelength_m();
  const double four_pi2 = 16.0 * kPi * kPi;
  const double r2 = scenario.link_distance_m - r1;

  const double num = scenario.tx_power_w * alpha_u2 * lambda2 * lambda2;
  const double den = scenario.noise_power_w() * r1 * r1 *
                     (scenario.relay_noise_figure * lambda2 * alpha_u2 * four_pi2 +
                      four_pi2 * four_pi2 * r2 * r2);
  return std::log1p(num / den) / std::numbers::ln2;
}

double capacity_single_uav_power_limited(const Scenario& scenario, double r1) {
  check_r1(scenario, r1);
  const double p_u = scenario.relay_budget_w(1);
  const double alpha_t2 = scenario.tx_power_w;
  const double sigma2 = scenario.noise_power_w();
  const double lambda2 = scenario.wavelength_m() * scenario.wavelength_m();
  const double r2 = scenario.link_distance_m - r1;

  const double num = p_u * alpha_t2 * lambda2;
  const double den = 16.0 * kPi * kPi *
                     (p_u * scenario.relay_noise_figure * sigma2 * r1 * r1 +
                      alpha_t2 * sigma2 * r2 * r2);
  return std::log1p(num / den) / std::numbers::ln2;
}

CapacityReport evaluate_placement(const Scenario& scenario, std::span<const Vec3> tx,
                                  std::span<const Vec3> rx, std::span<const Vec3> swarm, double r1,
                                  const EvaluateOptions& options) {
  const double lambda = scenario.wavelength_m();
  const ChannelMatrix h1 = los_channel(tx, swarm, lambda);
  const ChannelMatrix h2 = los_channel(swarm, rx, lambda);
  const GainPolicyResult gain = equal_gain(h1, scenario, options.include_noise_in_power);

  CapacityReport report;
  report.alpha_u = gain.alpha_u;
  report.regime = gain.regime;
  report.power_mode = scenario.relay_power_mode;
  report.capacity_bits_per_use =
      capacity_end_to_end(h1.entries, h2.entries, gain.gain_matrix(), scenario.alpha_t(),
                          scenario.sigma_u2(), scenario.sigma_r2());

  const double f_u = scenario.relay_noise_figure;
  const double sigma2 = scenario.noise_power_w();
  const CMatrix h_tilde = effective_channel(h1.entries, h2.entries, f_u, gain.alpha_u);
  const auto n_uavs = static_cast<int>(swarm.size());
  report.bound_trace = bound_trace(h_tilde, n_uavs, scenario.alpha_t(), gain.alpha_u, sigma2);
  report.bound_singular =
      bound_singular(h1.entries, h2.entries, scenario.alpha_t(), gain.alpha_u, sigma2, f_u);
  report.icn_h1 = icn(h1);
  report.icn_h2 = icn(h2);
  report.k_min = rank_ceiling(h1.cols(), h2.rows(), n_uavs);

  report.far_field_deviation =
      std::max(far_field_factor(h1, r1).max_magnitude_deviation,
               far_field_factor(h2, scenario.link_distance_m - r1).max_magnitude_deviation);
  report.near_field = report.far_field_deviation > kNearFieldDeviation;
  if (options.far_field) {
    report.bound_far_field = bound_far_field(scenario, r1, n_uavs, gain.alpha_u, *options.far_field);
  }
  return report;
}

}  // namespace uavrelay
