// SPDX-License-Identifier: Apache-2.0
//
// isac-hwi: hardware-impairment bounds for monostatic OFDM sensing
// Copyright (C) 2026 The isac-hwi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <pybind11/pybind11.h>
#include <pybind11/eigen.h>
#include <pybind11/stl.h>

#include "isac/comm.hpp"
#include "isac/crb.hpp"
#include "isac/errors.hpp"
#include "isac/mc.hpp"
#include "isac/pa.hpp"
#include "isac/pn.hpp"
#include "isac/scenario.hpp"

namespace py = pybind11;
using namespace isac;

namespace {

OfdmFrame frame_from_grid(const Grid& g)
{
    OfdmFrame f;
    f.symbols = g;
    f.centered_k = centered_indices(static_cast<int>(g.rows()));
    f.centered_m = centered_indices(static_cast<int>(g.cols()));
    return f;
}

py::dict table_to_dict(const CsvTable& t)
{
    py::dict columns;
    for (const auto& name : t.header)
        columns[py::str(name)] = t.column_values(name);
    py::dict out;
    out["header"] = t.header;
    out["columns"] = columns;
    out["provenance"] = t.provenance;
    out["csv"] = t.to_string();
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Hardware-impairment Cramer-Rao bounds for monostatic OFDM sensing";
    m.attr("__version__") = version_string();

    static py::exception<ConfigError> config_error(m, "ConfigError", PyExc_ValueError);
    static py::exception<DegenerateError> degenerate_error(m, "DegenerateError", PyExc_ArithmeticError);
    static py::exception<NumericalError> numerical_error(m, "NumericalError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const ConfigError& e) {
            PyErr_SetString(config_error.ptr(), e.what());
        } catch (const DegenerateError& e) {
            PyErr_SetString(degenerate_error.ptr(), e.what());
        } catch (const NumericalError& e) {
            PyErr_SetString(numerical_error.ptr(), e.what());
        }
    });

    py::class_<SystemConfig>(m, "SystemConfig")
        .def(py::init<>())
        .def_readwrite("n_subcarriers", &SystemConfig::n_subcarriers)
        .def_readwrite("n_symbols", &SystemConfig::n_symbols)
        .def_readwrite("subcarrier_spacing", &SystemConfig::subcarrier_spacing)
        .def_readwrite("cp_duration", &SystemConfig::cp_duration)
        .def_readwrite("carrier_freq", &SystemConfig::carrier_freq)
        .def_readwrite("qam_order", &SystemConfig::qam_order)
        .def_readwrite("symbol_energy", &SystemConfig::symbol_energy)
        .def_readwrite("noise_var", &SystemConfig::noise_var)
        .def("symbol_duration", &SystemConfig::symbol_duration)
        .def("validate", &SystemConfig::validate);

    py::class_<RappParams>(m, "RappParams")
        .def(py::init<>())
        .def_static("from_ibo", &RappParams::from_ibo, py::arg("ibo_db"), py::arg("smoothness") = 3.0,
                    py::arg("symbol_energy") = 1.0)
        .def_readwrite("ibo_db", &RappParams::ibo_db)
        .def_readwrite("smoothness", &RappParams::smoothness)
        .def_readwrite("sat_amplitude", &RappParams::sat_amplitude);

    py::class_<PnParams>(m, "PnParams")
        .def(py::init([](double linewidth, double symbol_duration) { return PnParams{linewidth, symbol_duration}; }),
             py::arg("linewidth") = 100.0, py::arg("symbol_duration") = 8.9e-6)
        .def_readwrite("linewidth", &PnParams::linewidth)
        .def_readwrite("symbol_duration", &PnParams::symbol_duration)
        .def("increment_var", &PnParams::increment_var)
        .def("cpe_valid", &PnParams::cpe_valid);

    py::class_<TargetParams>(m, "TargetParams")
        .def(py::init([](double delay, double doppler, cplx reflectivity) {
                 return TargetParams{delay, doppler, reflectivity};
             }),
             py::arg("delay") = 200e-9, py::arg("doppler") = 1000.0, py::arg("reflectivity") = cplx(1.0, 0.0))
        .def_readwrite("delay", &TargetParams::delay)
        .def_readwrite("doppler", &TargetParams::doppler)
        .def_readwrite("reflectivity", &TargetParams::reflectivity);

    py::class_<CommConfig>(m, "CommConfig")
        .def(py::init<>())
        .def_readwrite("channel_gain", &CommConfig::channel_gain)
        .def_readwrite("comm_noise_var", &CommConfig::comm_noise_var)
        .def_readwrite("n_pilots", &CommConfig::n_pilots);

    py::class_<BussgangCoeffs>(m, "BussgangCoeffs")
        .def(py::init<>())
        .def_readwrite("alpha_b", &BussgangCoeffs::alpha_b)
        .def_readwrite("distortion_var", &BussgangCoeffs::distortion_var)
        .def_readonly("sample_count", &BussgangCoeffs::sample_count)
        .def_readonly("low_precision", &BussgangCoeffs::low_precision);

    py::class_<CrbReport>(m, "CrbReport")
        .def_property_readonly("model", [](const CrbReport& r) { return std::string(to_string(r.model)); })
        .def_readonly("crb_delay", &CrbReport::crb_delay)
        .def_readonly("crb_doppler", &CrbReport::crb_doppler)
        .def_readonly("crb_velocity", &CrbReport::crb_velocity)
        .def_readonly("snr_db", &CrbReport::snr_db)
        .def_readonly("metadata", &CrbReport::metadata);

    py::class_<Overestimation>(m, "Overestimation")
        .def_readonly("total_db", &Overestimation::total_db)
        .def_readonly("moment_factor_db", &Overestimation::moment_factor_db)
        .def_readonly("noise_factor_db", &Overestimation::noise_factor_db);

    py::class_<PnFloor>(m, "PnFloor")
        .def_readonly("crb_doppler", &PnFloor::crb_doppler)
        .def_readonly("velocity_std", &PnFloor::velocity_std);

    py::class_<McResult>(m, "McResult")
        .def_readonly("mse_delay", &McResult::mse_delay)
        .def_readonly("mse_doppler", &McResult::mse_doppler)
        .def_readonly("mse_velocity", &McResult::mse_velocity)
        .def_readonly("crb_delay", &McResult::crb_delay)
        .def_readonly("crb_doppler", &McResult::crb_doppler)
        .def_readonly("crb_ratio_delay_db", &McResult::crb_ratio_delay_db)
        .def_readonly("crb_ratio_doppler_db", &McResult::crb_ratio_doppler_db)
        .def_readonly("n_trials", &McResult::n_trials)
        .def_readonly("outlier_count", &McResult::outlier_count);

    // grids are (N, M) complex arrays, rows = subcarriers
    m.def("generate_frame", [](const SystemConfig& cfg, std::uint64_t seed) { return generate_frame(cfg, seed).symbols; },
          py::arg("cfg"), py::arg("seed"));
    m.def("apply_pa", [](const Grid& x, const RappParams& pa) { return apply_pa_grid(x, pa).symbols; }, py::arg("grid"),
          py::arg("pa"));
    m.def("rapp_gain", &rapp_gain, py::arg("x"), py::arg("pa"));
    m.def("estimate_bussgang", &estimate_bussgang, py::arg("pa"), py::arg("cfg"), py::arg("n_samples") = 1000000,
          py::arg("seed") = 1);
    m.def("pa_degradation_db",
          [](const Grid& x, const Grid& z) { return pa_degradation_db(frame_from_grid(x), make_pa_output(z)); },
          py::arg("x"), py::arg("z"));

    m.def("crb_ideal", [](const SystemConfig& cfg, const Grid& x, const TargetParams& t) {
        return crb_ideal(cfg, frame_from_grid(x), t);
    }, py::arg("cfg"), py::arg("x"), py::arg("target") = TargetParams{});
    m.def("crb_pa", [](const SystemConfig& cfg, const Grid& z, const TargetParams& t) {
        return crb_pa(cfg, make_pa_output(z), t);
    }, py::arg("cfg"), py::arg("z"), py::arg("target") = TargetParams{});
    m.def("crb_kappa", [](const SystemConfig& cfg, const BussgangCoeffs& b, const Grid& x, const TargetParams& t) {
        return crb_kappa(cfg, b, frame_from_grid(x), t);
    }, py::arg("cfg"), py::arg("bussgang"), py::arg("x"), py::arg("target") = TargetParams{});
    m.def("crb_pn", [](const SystemConfig& cfg, const Grid& x, const PnParams& pn, const TargetParams& t) {
        return crb_pn(cfg, frame_from_grid(x), build_cpe_covariance(pn, cfg.n_symbols), t);
    }, py::arg("cfg"), py::arg("x"), py::arg("pn"), py::arg("target") = TargetParams{});
    m.def("crb_joint", [](const SystemConfig& cfg, const Grid& z, const PnParams& pn, const TargetParams& t) {
        return crb_joint(cfg, make_pa_output(z), build_cpe_covariance(pn, cfg.n_symbols), t);
    }, py::arg("cfg"), py::arg("z"), py::arg("pn"), py::arg("target") = TargetParams{});
    m.def("crb_pn_floor", [](const SystemConfig& cfg, const PnParams& pn) {
        return crb_pn_floor(cfg, build_cpe_covariance(pn, cfg.n_symbols));
    }, py::arg("cfg"), py::arg("pn"));
    m.def("overestimation_ratio", &overestimation_ratio, py::arg("kappa_report"), py::arg("pa_report"));
    m.def("velocity_scale", &velocity_scale, py::arg("carrier_freq"));

    m.def("sinr_pa", &sinr_pa, py::arg("comm"), py::arg("bussgang"), py::arg("symbol_energy") = 1.0);
    m.def("rate", &rate, py::arg("sinr"));
    m.def("pn_sinr_loss_db", &pn_sinr_loss_db, py::arg("comm"));
    m.def("sinr_with_pn", &sinr_with_pn, py::arg("comm"), py::arg("gamma_c"), py::arg("linewidth"));

    m.def("run_mc_mse",
          [](const SystemConfig& cfg, const RappParams& pa, std::optional<PnParams> pn, const TargetParams& t,
             int n_trials, std::uint64_t seed, bool cpe_prior) {
              McConfig mc = reference_mc_config(cfg, t, n_trials, seed);
              mc.doppler_estimator = cpe_prior ? DopplerEstimator::cpe_prior : DopplerEstimator::periodogram;
              py::gil_scoped_release release;
              return run_mc_mse(cfg, pa, pn, t, mc);
          },
          py::arg("cfg"), py::arg("pa"), py::arg("pn") = std::nullopt, py::arg("target") = TargetParams{},
          py::arg("n_trials") = 200, py::arg("seed") = 1, py::arg("cpe_prior") = false);

    m.def("scenario_names", [] {
        std::vector<std::string> names;
        for (const auto& info : scenario_catalog())
            names.push_back(info.name);
        return names;
    });
    m.def("scenario_columns", [](const std::string& name) { return scenario_info(name).columns; }, py::arg("name"));
    m.def("run_scenario",
          [](const std::string& name, const std::map<std::string, std::string>& overrides,
             std::optional<std::uint64_t> seed, std::string out) {
              ScenarioSpec request;
              request.name = name;
              request.overrides.assign(overrides.begin(), overrides.end());
              request.seed = seed;
              request.output_path = out;
              CsvTable t;
              {
                  py::gil_scoped_release release;
                  t = run_scenario(request);
              }
              return table_to_dict(t);
          },
          py::arg("name"), py::arg("overrides") = std::map<std::string, std::string>{}, py::arg("seed") = std::nullopt,
          py::arg("out") = std::string());
}
