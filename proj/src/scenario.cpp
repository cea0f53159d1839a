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

#include "isac/scenario.hpp"

#include <cmath>
#include <map>

#include "isac/comm.hpp"
#include "isac/crb.hpp"
#include "isac/errors.hpp"
#include "isac/mc.hpp"

#ifndef ISAC_VERSION
#define ISAC_VERSION "unknown"
#endif
#ifndef ISAC_GIT_REVISION
#define ISAC_GIT_REVISION "unknown"
#endif

namespace isac {

namespace {

double db(double x) { return 10.0 * std::log10(x); }

double undb(double x) { return std::pow(10.0, x / 10.0); }

CsvTable make_table(const std::string& name)
{
    CsvTable t;
    t.header = scenario_info(name).columns;
    return t;
}

std::string provenance(const std::string& name, const Settings& s)
{
    std::string p = "isac-hwi " + version_string() + " scenario=" + name + " seed=" + std::to_string(s.seed) + " config:";
    for (const auto& [k, v] : describe(s))
        p += " " + k + "=" + v;
    return p;
}

struct PaPoint {
    OfdmFrame frame;
    PaOutputFrame z;
    BussgangCoeffs bussgang;
};

PaPoint pa_point(const Settings& s, double ibo)
{
    const SystemConfig cfg = s.system_config();
    PaPoint p;
    p.frame = generate_frame(cfg, static_cast<std::uint64_t>(s.seed));
    p.z = apply_pa_frame(p.frame, s.rapp(ibo));
    p.bussgang = estimate_bussgang(s.rapp(ibo), cfg, static_cast<std::size_t>(s.bussgang_samples),
                                   static_cast<std::uint64_t>(s.seed));
    return p;
}

void require_positive_linewidth(double beta)
{
    if (!(beta > 0.0))
        throw ConfigError("this scenario needs linewidths > 0 Hz");
}

} // namespace

std::vector<double> linear_sweep(double min, double max, double step)
{
    if (!(step > 0.0) || max < min)
        throw ConfigError("invalid sweep range");
    const auto n = static_cast<int>(std::floor((max - min) / step + 1e-9)) + 1;
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v.push_back(min + i * step);
    return v;
}

std::vector<double> log_sweep(double min, double max, int n)
{
    if (!(min > 0.0) || max < min || n < 1)
        throw ConfigError("invalid logarithmic sweep");
    if (n == 1)
        return {min};
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v.push_back(i == n - 1 ? max : min * std::pow(max / min, static_cast<double>(i) / (n - 1)));
    return v;
}

std::string version_string()
{
    return std::string(ISAC_VERSION) + " (rev " + ISAC_GIT_REVISION + ")";
}

const std::vector<ScenarioInfo>& scenario_catalog()
{
    static const std::vector<ScenarioInfo> catalog = {
        {"pa-overestimation", "kappa vs physics delay bound over SNR for each IBO",
         {"snr_db", "ibo_db", "crb_pa_delay_s2", "crb_kappa_delay_s2", "moment_factor_db", "noise_factor_db",
          "overest_db"}},
        {"pa-vs-ibo", "PA sensing degradation and kappa overestimation over IBO",
         {"ibo_db", "snr_db", "delta_sens_db", "overest_db", "alpha_b_lin", "distortion_var_lin"}},
        {"pn-floor", "velocity bound under CPE noise over SNR for each linewidth",
         {"snr_db", "beta_hz", "crb_velocity_mps2", "crb_velocity_ideal_mps2", "velocity_std_mps", "floor_mps"}},
        {"dpd-sweep", "Monte-Carlo range overhead of an imperfect transmit template",
         {"nmse_db", "overhead_db", "mse_delay_s2", "crb_delay_s2", "outliers_count"},
         true},
        {"design-map", "velocity bound and rate over IBO x linewidth",
         {"ibo_db", "beta_hz", "crb_velocity_mps2", "velocity_std_mps", "rate_bpshz", "sinr_db"}},
        {"pareto", "rate vs range accuracy frontier over IBO, physics and kappa",
         {"snr_db", "ibo_db", "rate_bpshz", "crb_delay_phys_s2", "crb_delay_kappa_s2", "range_rmse_phys_m",
          "range_rmse_kappa_m", "gap_db"}},
        {"asymmetry", "PA and PN degradations of sensing and communication over SNR",
         {"snr_db", "pa_comm_db", "pa_sens_db", "pn_sens_db", "pn_comm_db", "pa_ratio_lin", "pn_ratio_lin"}},
        {"mc-validate", "Monte-Carlo ML estimation error against the matching bounds",
         {"snr_db", "ibo_db", "beta_hz", "cpe_prior_lin", "n_trials_count", "mse_delay_s2", "crb_delay_s2",
          "ratio_delay_db", "mse_velocity_mps2", "crb_velocity_mps2", "ratio_velocity_db", "rmse_velocity_mps",
          "floor_mps", "outliers_count"},
         true},
    };
    return catalog;
}

const ScenarioInfo& scenario_info(const std::string& name)
{
    for (const auto& info : scenario_catalog())
        if (info.name == name)
            return info;
    throw ConfigError("unknown scenario '" + name + "'");
}

Settings scenario_defaults(const std::string& name)
{
    scenario_info(name);
    Settings s;
    if (name == "pn-floor") {
        s.snr_max_db = 40.0;
    } else if (name == "design-map") {
        s.ibo_min_db = 2.0;
        s.ibo_max_db = 10.0;
    } else if (name == "pareto") {
        s.ibo_min_db = 5.0;
        s.ibo_max_db = 12.0;
    } else if (name == "asymmetry") {
        s.snr_min_db = 0.0;
        s.snr_max_db = 30.0;
    }
    return s;
}

Settings resolve_settings(const ScenarioSpec& request)
{
    Settings s = scenario_defaults(request.name);
    if (request.config_path)
        apply_config_file(s, *request.config_path);
    for (const auto& [k, v] : request.overrides)
        apply_setting(s, k, v);
    if (request.seed) {
        if (*request.seed > static_cast<std::uint64_t>(INT64_MAX))
            throw ConfigError("seed out of range");
        s.seed = static_cast<std::int64_t>(*request.seed);
    }
    s.validate();
    return s;
}

CsvTable run_pa_overestimation(const Settings& s)
{
    CsvTable t = make_table("pa-overestimation");
    const TargetParams target = s.target();
    for (double ibo : s.ibo_values_db) {
        const PaPoint p = pa_point(s, ibo);
        for (double snr : linear_sweep(s.snr_min_db, s.snr_max_db, s.snr_step_db)) {
            const SystemConfig cfg = s.system_config(snr);
            const CrbReport phys = crb_pa(cfg, p.z, target);
            const CrbReport kappa = crb_kappa(cfg, p.bussgang, p.frame, target);
            const Overestimation o = overestimation_ratio(kappa, phys);
            t.rows.push_back({snr, ibo, phys.crb_delay, kappa.crb_delay, o.moment_factor_db, o.noise_factor_db,
                              o.total_db});
        }
    }
    return t;
}

CsvTable run_pa_vs_ibo(const Settings& s)
{
    CsvTable t = make_table("pa-vs-ibo");
    const TargetParams target = s.target();
    for (double ibo : linear_sweep(s.ibo_min_db, s.ibo_max_db, s.ibo_step_db)) {
        const PaPoint p = pa_point(s, ibo);
        const double delta = pa_degradation_db(p.frame, p.z).first;
        for (double snr : s.snr_values_db) {
            const SystemConfig cfg = s.system_config(snr);
            const Overestimation o =
                overestimation_ratio(crb_kappa(cfg, p.bussgang, p.frame, target), crb_pa(cfg, p.z, target));
            t.rows.push_back({ibo, snr, delta, o.total_db, std::abs(p.bussgang.alpha_b), p.bussgang.distortion_var});
        }
    }
    return t;
}

CsvTable run_pn_floor(const Settings& s)
{
    CsvTable t = make_table("pn-floor");
    const TargetParams target = s.target();
    const OfdmFrame frame = generate_frame(s.system_config(), static_cast<std::uint64_t>(s.seed));
    for (double beta : s.beta_values_hz) {
        require_positive_linewidth(beta);
        const CpeCovariance cov = build_cpe_covariance(s.pn(beta), s.n_symbols);
        const PnFloor floor = crb_pn_floor(s.system_config(), cov);
        for (double snr : linear_sweep(s.snr_min_db, s.snr_max_db, s.snr_step_db)) {
            const SystemConfig cfg = s.system_config(snr);
            const CrbReport pn = crb_pn(cfg, frame, cov, target);
            const CrbReport ideal = crb_ideal(cfg, frame, target);
            t.rows.push_back({snr, beta, pn.crb_velocity, ideal.crb_velocity, std::sqrt(pn.crb_velocity),
                              floor.velocity_std});
        }
    }
    return t;
}

CsvTable run_dpd_sweep(const Settings& s)
{
    CsvTable t = make_table("dpd-sweep");
    const SystemConfig cfg = s.system_config();
    const auto points = dpd_overhead_sweep(cfg, s.rapp(), s.nmse_values_db, s.target(), s.mc(s.n_trials_dpd));
    for (const auto& p : points)
        t.rows.push_back({p.nmse_db, p.overhead_db, p.mse_delay, p.crb_delay, static_cast<double>(p.outlier_count)});
    return t;
}

CsvTable run_design_map(const Settings& s)
{
    CsvTable t = make_table("design-map");
    const SystemConfig cfg = s.system_config();
    const CommConfig comm = s.comm();
    const TargetParams target = s.target();
    const auto betas = log_sweep(s.beta_min_hz, s.beta_max_hz, s.beta_points);
    std::vector<CpeCovariance> covs;
    for (double beta : betas)
        covs.push_back(build_cpe_covariance(s.pn(beta), s.n_symbols));
    for (double ibo : linear_sweep(s.ibo_min_db, s.ibo_max_db, s.ibo_step_db)) {
        const PaPoint p = pa_point(s, ibo);
        const double sinr = sinr_pa(comm, p.bussgang, s.symbol_energy);
        for (std::size_t b = 0; b < betas.size(); ++b) {
            const CrbReport joint = crb_joint(cfg, p.z, covs[b], target);
            const double sinr_b = sinr_with_pn(comm, sinr, betas[b]);
            t.rows.push_back({ibo, betas[b], joint.crb_velocity, std::sqrt(joint.crb_velocity), rate(sinr_b),
                              db(sinr_b)});
        }
    }
    return t;
}

CsvTable run_pareto(const Settings& s)
{
    CsvTable t = make_table("pareto");
    const TargetParams target = s.target();
    const double range_scale = kSpeedOfLight / 2.0;
    const auto ibos = linear_sweep(s.ibo_min_db, s.ibo_max_db, s.ibo_step_db);
    std::vector<PaPoint> points;
    for (double ibo : ibos)
        points.push_back(pa_point(s, ibo));
    for (double snr : s.snr_values_db) {
        const SystemConfig cfg = s.system_config(snr);
        const CommConfig comm = s.comm(snr);
        for (std::size_t i = 0; i < ibos.size(); ++i) {
            const PaPoint& p = points[i];
            const CrbReport phys = crb_pa(cfg, p.z, target);
            const CrbReport kappa = crb_kappa(cfg, p.bussgang, p.frame, target);
            t.rows.push_back({snr, ibos[i], rate(sinr_pa(comm, p.bussgang, s.symbol_energy)), phys.crb_delay,
                              kappa.crb_delay, range_scale * std::sqrt(phys.crb_delay),
                              range_scale * std::sqrt(kappa.crb_delay), db(kappa.crb_delay / phys.crb_delay)});
        }
    }
    return t;
}

CsvTable run_asymmetry(const Settings& s)
{
    CsvTable t = make_table("asymmetry");
    const TargetParams target = s.target();
    const PaPoint p = pa_point(s, s.ibo_db);
    const double pa_sens = pa_degradation_db(p.frame, p.z).first;
    std::optional<CpeCovariance> cov;
    if (s.linewidth_hz > 0.0)
        cov = build_cpe_covariance(s.pn(), s.n_symbols);
    for (double snr : linear_sweep(s.snr_min_db, s.snr_max_db, s.snr_step_db)) {
        const SystemConfig cfg = s.system_config(snr);
        const CommConfig comm = s.comm(snr);
        const double pa_comm = pa_comm_degradation_db(comm, p.bussgang, s.symbol_energy);
        double pn_sens = 0.0;
        double pn_comm = 0.0;
        if (cov) {
            pn_sens = db(crb_pn(cfg, p.frame, *cov, target).crb_doppler / crb_ideal(cfg, p.frame, target).crb_doppler);
            const double gamma = comm_snr(comm, s.symbol_energy);
            pn_comm = db(gamma / sinr_with_pn(comm, gamma, s.linewidth_hz));
        }
        t.rows.push_back({snr, pa_comm, pa_sens, pn_sens, pn_comm, undb(pa_sens - pa_comm), undb(pn_sens - pn_comm)});
    }
    return t;
}

CsvTable run_mc_validate(const Settings& s)
{
    CsvTable t = make_table("mc-validate");
    const TargetParams target = s.target();
    const double vscale2 = velocity_crb(1.0, s.carrier_freq_hz);
    auto add_row = [&](double snr, double beta, bool prior, const McResult& r, double floor) {
        t.rows.push_back({snr, s.ibo_db, beta, prior ? 1.0 : 0.0, static_cast<double>(r.n_trials), r.mse_delay,
                          r.crb_delay, r.crb_ratio_delay_db, r.mse_velocity, vscale2 * r.crb_doppler,
                          r.crb_ratio_doppler_db, std::sqrt(r.mse_velocity), floor,
                          static_cast<double>(r.outlier_count)});
    };

    for (double snr : s.snr_values_db) {
        const McResult r = run_mc_mse(s.system_config(snr), s.rapp(), std::nullopt, target, s.mc(s.n_trials_pa));
        add_row(snr, 0.0, false, r, 0.0);
    }

    if (s.linewidth_hz > 0.0) {
        const SystemConfig cfg = s.system_config(s.pn_mc_snr_db);
        const double floor = crb_pn_floor(cfg, build_cpe_covariance(s.pn(), s.n_symbols)).velocity_std;
        for (DopplerEstimator est : {DopplerEstimator::periodogram, DopplerEstimator::cpe_prior}) {
            McConfig mc = s.mc(s.n_trials_pn);
            mc.doppler_estimator = est;
            const McResult r = run_mc_mse(cfg, s.rapp(), s.pn(), target, mc);
            add_row(s.pn_mc_snr_db, s.linewidth_hz, est == DopplerEstimator::cpe_prior, r, floor);
        }
    }
    return t;
}

CsvTable run_scenario(const std::string& name, const Settings& settings)
{
    using Runner = CsvTable (*)(const Settings&);
    static const std::map<std::string, Runner> runners = {
        {"pa-overestimation", &run_pa_overestimation},
        {"pa-vs-ibo", &run_pa_vs_ibo},
        {"pn-floor", &run_pn_floor},
        {"dpd-sweep", &run_dpd_sweep},
        {"design-map", &run_design_map},
        {"pareto", &run_pareto},
        {"asymmetry", &run_asymmetry},
        {"mc-validate", &run_mc_validate},
    };
    const auto it = runners.find(name);
    if (it == runners.end())
        throw ConfigError("unknown scenario '" + name + "'");
    settings.validate();
    CsvTable t = it->second(settings);
    t.provenance = provenance(name, settings);
    t.validate();
    return t;
}

CsvTable run_scenario(const ScenarioSpec& request)
{
    const Settings s = resolve_settings(request);
    CsvTable t = run_scenario(request.name, s);
    if (!request.output_path.empty())
        t.write_file(request.output_path);
    return t;
}

} // namespace isac
