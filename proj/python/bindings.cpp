// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 uavrelay contributors

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uavrelay/capacity.hpp"
#include "uavrelay/channel.hpp"
#include "uavrelay/errors.hpp"
#include "uavrelay/montecarlo.hpp"
#include "uavrelay/placement.hpp"
#include "uavrelay/relay.hpp"
#include "uavrelay/scenario.hpp"

namespace py = pybind11;
using namespace uavrelay;

namespace {

using PointArray = Eigen::Matrix<double, Eigen::Dynamic, 3, Eigen::RowMajor>;

PointList to_points(const PointArray& a) {
  PointList out;
  out.reserve(static_cast<std::size_t>(a.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) out.emplace_back(a(i, 0), a(i, 1), a(i, 2));
  return out;
}

PointArray from_points(const PointList& pts) {
  PointArray out(static_cast<Eigen::Index>(pts.size()), 3);
  for (std::size_t i = 0; i < pts.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = pts[i];
  return out;
}

py::dict solution_dict(const PlacementSolution& sol) {
  py::list candidates;
  for (const Candidate& c : sol.candidates_evaluated) {
    py::dict d;
    d["kind"] = std::string(to_string(c.kind));
    d["r1_m"] = c.r1_m;
    d["spacing_m"] = c.spacing_m;
    d["capacity_bits_per_use"] = c.capacity_bits_per_use;
    d["regime"] = std::string(to_string(c.regime));
    candidates.append(d);
  }
  py::dict d;
  d["r1_m"] = sol.r1_m;
  d["capacity_bits_per_use"] = sol.capacity_bits_per_use;
  d["alpha_u"] = sol.alpha_u;
  d["regime"] = std::string(to_string(sol.regime));
  d["bound_trace"] = sol.bound_trace;
  d["bound_singular"] = sol.bound_singular;
  d["bound_gap"] = sol.bound_gap;
  d["swarm_counts"] = sol.swarm_spec.counts;
  d["swarm_spacing_m"] = sol.swarm_spec.spacings_m;
  d["candidates_evaluated"] = candidates;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Capacity and placement analysis for UAV-swarm amplify-and-forward MIMO relays";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  py::enum_<PowerMode>(m, "PowerMode")
      .value("PerUav", PowerMode::PerUav)
      .value("TotalSplitEven", PowerMode::TotalSplitEven);
  py::enum_<Regime>(m, "Regime")
      .value("PowerLimited", Regime::PowerLimited)
      .value("GainLimited", Regime::GainLimited);
  py::enum_<SwarmAnchor>(m, "SwarmAnchor")
      .value("BaseHeight", SwarmAnchor::BaseHeight)
      .value("Boresight", SwarmAnchor::Boresight);
  py::enum_<FarFieldConvention>(m, "FarFieldConvention")
      .value("AsPrintedProduct", FarFieldConvention::AsPrintedProduct)
      .value("ColumnNorm", FarFieldConvention::ColumnNorm);
  py::enum_<Hop>(m, "Hop").value("First", Hop::First).value("Second", Hop::Second);

  py::class_<Scenario>(m, "Scenario")
      .def_static(
          "from_json",
          [](const std::string& text) { return scenario_from_config(nlohmann::json::parse(text)); },
          py::arg("text"))
      .def_readonly("link_distance_m", &Scenario::link_distance_m)
      .def_readonly("carrier_freq_hz", &Scenario::carrier_freq_hz)
      .def_readonly("tx_power_w", &Scenario::tx_power_w)
      .def_readonly("relay_power_budget_w", &Scenario::relay_power_budget_w)
      .def_readonly("relay_power_mode", &Scenario::relay_power_mode)
      .def_readonly("relay_max_gain_amplitude", &Scenario::relay_max_gain_amplitude)
      .def_readonly("relay_noise_figure", &Scenario::relay_noise_figure)
      .def_readonly("swarm_base_height_m", &Scenario::swarm_base_height_m)
      .def_property_readonly("wavelength_m", &Scenario::wavelength_m)
      .def_property_readonly("alpha_t", &Scenario::alpha_t)
      .def_property_readonly("noise_power_w", &Scenario::noise_power_w);

  m.def(
      "baseline_config",
      [](double nf_db, const std::string& gain_rule) {
        return baseline_config(nf_db, parse_gain_rule(gain_rule)).dump();
      },
      py::arg("noise_figure_db") = 5.0, py::arg("gain_rule") = "amplitude",
      "Reference scenario as a JSON string.");

  m.def(
      "los_channel",
      [](const PointArray& tx, const PointArray& rx, double wavelength) {
        return los_channel(to_points(tx), to_points(rx), wavelength).entries;
      },
      py::arg("tx_points"), py::arg("rx_points"), py::arg("wavelength_m"));
  m.def("singular_values", &singular_values);
  m.def("icn", py::overload_cast<const CMatrix&>(&icn));

  py::class_<GainPolicyResult>(m, "GainPolicyResult")
      .def_readonly("alpha_u", &GainPolicyResult::alpha_u)
      .def_readonly("regime", &GainPolicyResult::regime)
      .def_readonly("per_uav_tx_power_w", &GainPolicyResult::per_uav_tx_power_w)
      .def_readonly("budget_w", &GainPolicyResult::budget_w);
  m.def(
      "equal_gain",
      [](const CMatrix& h1, const Scenario& s, bool include_noise) {
        return equal_gain(ChannelMatrix{h1, s.wavelength_m()}, s, include_noise);
      },
      py::arg("h1"), py::arg("scenario"), py::arg("include_noise_in_power") = false);
  m.def("region_boundary", &region_boundary);

  m.def("noise_covariance", &noise_covariance);
  m.def("capacity_end_to_end", &capacity_end_to_end, py::arg("h1"), py::arg("h2"), py::arg("d"),
        py::arg("alpha_t"), py::arg("sigma_u2"), py::arg("sigma_r2"));
  m.def("effective_channel", &effective_channel, py::arg("h1"), py::arg("h2"), py::arg("f_u"),
        py::arg("alpha_u"));
  m.def("capacity_effective", &capacity_effective);
  m.def("bound_trace", &bound_trace, py::arg("h_tilde"), py::arg("n_uavs"), py::arg("alpha_t"),
        py::arg("alpha_u"), py::arg("sigma2"));
  m.def("bound_singular", &bound_singular, py::arg("h1"), py::arg("h2"), py::arg("alpha_t"),
        py::arg("alpha_u"), py::arg("sigma2"), py::arg("f_u"));
  m.def("bound_far_field", &bound_far_field, py::arg("scenario"), py::arg("r1"),
        py::arg("n_uavs"), py::arg("alpha_u"),
        py::arg("convention") = FarFieldConvention::AsPrintedProduct);
  m.def("capacity_single_uav_gain_limited", &capacity_single_uav_gain_limited);
  m.def("capacity_single_uav_power_limited", &capacity_single_uav_power_limited);

  py::class_<CapacityReport>(m, "CapacityReport")
      .def_readonly("capacity_bits_per_use", &CapacityReport::capacity_bits_per_use)
      .def_readonly("alpha_u", &CapacityReport::alpha_u)
      .def_readonly("regime", &CapacityReport::regime)
      .def_readonly("bound_trace", &CapacityReport::bound_trace)
      .def_readonly("bound_singular", &CapacityReport::bound_singular)
      .def_readonly("bound_far_field", &CapacityReport::bound_far_field)
      .def_readonly("icn_h1", &CapacityReport::icn_h1)
      .def_readonly("icn_h2", &CapacityReport::icn_h2)
      .def_readonly("k_min", &CapacityReport::k_min)
      .def_readonly("near_field", &CapacityReport::near_field);
  m.def(
      "evaluate_placement",
      [](const Scenario& s, const PointArray& swarm, double r1) {
        const Frame frame = canonical_frame(s, r1);
        return evaluate_placement(s, frame.tx, frame.rx, to_points(swarm), r1);
      },
      py::arg("scenario"), py::arg("swarm_points"), py::arg("r1"),
      "Evaluates a swarm placement between the scenario's end arrays.");

  m.def("root_const_gain", &root_const_gain);
  m.def("root_max_power", &root_max_power);
  m.def(
      "single_link",
      [](const Scenario& s, double r1) {
        const SingleLinkPoint p = single_link(s, r1);
        return py::make_tuple(p.capacity_bits_per_use, p.alpha_u, p.regime);
      },
      py::arg("scenario"), py::arg("r1"));
  m.def(
      "optimize_single",
      [](const Scenario& s, double r1_min, std::optional<double> r1_max) {
        SingleSearchOptions o;
        o.r1_min_m = r1_min;
        if (r1_max) o.r1_max_m = *r1_max;
        return solution_dict(optimize_single(s, o));
      },
      py::arg("scenario"), py::arg("r1_min") = 10.0, py::arg("r1_max") = py::none());
  m.def("spacing_candidates", &spacing_candidates, py::arg("hop"), py::arg("scenario"),
        py::arg("r1"), py::arg("swarm_counts"), py::arg("dim"), py::arg("max_order"));
  m.def(
      "ura_search_at",
      [](const Scenario& s, double r1, ArrayCounts counts, int points, SwarmAnchor anchor) {
        UraSearchOptions o;
        o.sweep_points = points;
        o.anchor = anchor;
        return solution_dict(ura_search_at(s, r1, counts, o));
      },
      py::arg("scenario"), py::arg("r1"), py::arg("swarm_counts") = ArrayCounts{2, 2},
      py::arg("sweep_points") = 21, py::arg("anchor") = SwarmAnchor::BaseHeight);
  m.def(
      "two_step_search",
      [](const Scenario& s, ArrayCounts counts, int points, SwarmAnchor anchor) {
        UraSearchOptions o;
        o.sweep_points = points;
        o.anchor = anchor;
        return solution_dict(two_step_search(s, counts, o));
      },
      py::arg("scenario"), py::arg("swarm_counts") = ArrayCounts{2, 2},
      py::arg("sweep_points") = 21, py::arg("anchor") = SwarmAnchor::BaseHeight);
  m.def(
      "spacing_sweep",
      [](const Scenario& s, double r1, double lo, double hi, int points, ArrayCounts counts,
         SwarmAnchor anchor) {
        py::list rows;
        for (const SpacingSample& p : spacing_sweep(s, r1, {lo, hi}, points, counts, anchor)) {
          rows.append(py::make_tuple(p.spacing_m, p.capacity_bits_per_use, p.icn_h1, p.icn_h2));
        }
        return rows;
      },
      py::arg("scenario"), py::arg("r1"), py::arg("spacing_min"), py::arg("spacing_max"),
      py::arg("points"), py::arg("swarm_counts") = ArrayCounts{2, 2},
      py::arg("anchor") = SwarmAnchor::BaseHeight);

  m.def(
      "sample_placement",
      [](double r1, double width, double base, int n, std::uint64_t seed) {
        return from_points(sample_placement(r1, width, base, n, seed));
      },
      py::arg("r1"), py::arg("square_width_m"), py::arg("base_height_m"), py::arg("n_uavs"),
      py::arg("seed"));

  py::class_<McStats>(m, "McStats")
      .def_readonly("r1_m", &McStats::r1_m)
      .def_readonly("mean", &McStats::mean)
      .def_readonly("p5", &McStats::p5)
      .def_readonly("p95", &McStats::p95)
      .def_readonly("max", &McStats::max)
      .def_readonly("min", &McStats::min)
      .def_readonly("n_samples", &McStats::n_samples)
      .def_readonly("seed", &McStats::seed);
  m.def(
      "mc_sweep",
      [](const Scenario& s, const std::vector<double>& r1_list, int n_samples, double width,
         std::uint64_t seed, unsigned threads) {
        McOptions o;
        o.n_samples = n_samples;
        o.square_width_m = width;
        o.master_seed = seed;
        o.threads = threads;
        py::gil_scoped_release release;
        return mc_sweep(s, r1_list, o);
      },
      py::arg("scenario"), py::arg("r1_list"), py::arg("n_samples") = 5000,
      py::arg("square_width_m") = 80.0, py::arg("seed") = 1, py::arg("threads") = 1);
}
