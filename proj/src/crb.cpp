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

#include "isac/crb.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "isac/errors.hpp"

namespace isac {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double db(double x) { return 10.0 * std::log10(x); }

void check_positive_finite(const CrbReport& r)
{
    for (double v : {r.crb_delay, r.crb_doppler, r.crb_velocity})
        if (!(v > 0.0) || !std::isfinite(v))
            throw NumericalError("CRB report is not strictly positive and finite");
}

/// Diagonal Slepian-Bangs bounds for a known waveform with moments (e20, e02)
/// observed in noise of variance `noise`.
CrbReport diagonal_report(CrbModel model, const SystemConfig& cfg, const TargetParams& target, double e20,
                          double e02, double noise)
{
    if (!(e20 > 0.0) || !(e02 > 0.0))
        throw DegenerateError("zero spectral moment: bound is infinite");
    const double a2 = std::norm(target.reflectivity);
    const double wd = kTwoPi * cfg.subcarrier_spacing;
    const double wt = kTwoPi * cfg.symbol_duration();
    CrbReport r;
    r.model = model;
    r.crb_delay = noise / (2.0 * a2 * wd * wd * e20);
    r.crb_doppler = noise / (2.0 * a2 * wt * wt * e02);
    r.crb_velocity = velocity_crb(r.crb_doppler, cfg.carrier_freq);
    r.snr_db = db(sensing_snr(cfg, target));
    r.metadata = {
        {"noise_var", cfg.noise_var},
        {"reflectivity_power", a2},
        {"moment_e20", e20},
        {"moment_e02", e02},
        {"symbol_duration", cfg.symbol_duration()},
        {"carrier_freq", cfg.carrier_freq},
    };
    return r;
}

void check_inputs(const SystemConfig& cfg, const TargetParams& target)
{
    cfg.validate();
    target.validate(cfg);
}

} // namespace

void TargetParams::validate(const SystemConfig& cfg) const
{
    if (!(std::abs(reflectivity) > 0.0))
        throw DegenerateError("zero reflectivity: Fisher information is singular");
    if (delay < 0.0 || delay >= 1.0 / cfg.subcarrier_spacing)
        throw ConfigError("delay outside the unambiguous range [0, 1/df)");
    if (std::abs(doppler) >= 0.5 / cfg.symbol_duration())
        throw ConfigError("Doppler outside the unambiguous range |nu| < 1/(2T)");
}

std::string_view to_string(CrbModel model)
{
    switch (model) {
    case CrbModel::ideal: return "ideal";
    case CrbModel::pa: return "pa";
    case CrbModel::kappa: return "kappa";
    case CrbModel::pn: return "pn";
    case CrbModel::joint: return "joint";
    }
    return "unknown";
}

double sensing_snr(const SystemConfig& cfg, const TargetParams& target)
{
    return std::norm(target.reflectivity) * cfg.symbol_energy / cfg.noise_var;
}

double velocity_scale(double carrier_freq)
{
    if (!(carrier_freq > 0.0))
        throw ConfigError("carrier frequency must be positive");
    return kSpeedOfLight / (2.0 * carrier_freq);
}

double velocity_crb(double crb_doppler, double carrier_freq)
{
    const double s = velocity_scale(carrier_freq);
    return s * s * crb_doppler;
}

CrbReport crb_ideal(const SystemConfig& cfg, const OfdmFrame& frame, const TargetParams& target)
{
    check_inputs(cfg, target);
    const auto mom = spectral_moments(frame.symbols);
    auto r = diagonal_report(CrbModel::ideal, cfg, target, mom.e20, mom.e02, cfg.noise_var);
    check_positive_finite(r);
    return r;
}

CrbReport crb_pa(const SystemConfig& cfg, const PaOutputFrame& pa_out, const TargetParams& target)
{
    check_inputs(cfg, target);
    auto r = diagonal_report(CrbModel::pa, cfg, target, pa_out.moment_e20, pa_out.moment_e02, cfg.noise_var);
    check_positive_finite(r);
    return r;
}

CrbReport crb_kappa(const SystemConfig& cfg, const BussgangCoeffs& bussgang, const OfdmFrame& frame,
                    const TargetParams& target)
{
    check_inputs(cfg, target);
    const double gain = std::norm(bussgang.alpha_b);
    if (!(gain > 0.0))
        throw DegenerateError("Bussgang gain is zero");
    if (bussgang.distortion_var < 0.0)
        throw ConfigError("negative distortion variance");
    const auto mom = spectral_moments(frame.symbols);
    const double a2 = std::norm(target.reflectivity);
    const double noise_eff = a2 * bussgang.distortion_var + cfg.noise_var;
    auto r = diagonal_report(CrbModel::kappa, cfg, target, gain * mom.e20, gain * mom.e02, noise_eff);
    r.metadata["effective_noise_var"] = noise_eff;
    r.metadata["alpha_b_power"] = gain;
    r.metadata["distortion_var"] = bussgang.distortion_var;
    check_positive_finite(r);
    return r;
}

Overestimation overestimation_ratio(const CrbReport& kappa_report, const CrbReport& pa_report)
{
    if (kappa_report.model != CrbModel::kappa || pa_report.model != CrbModel::pa)
        throw ConfigError("overestimation_ratio expects a kappa report and a PA report");
    if (kappa_report.snr_db != pa_report.snr_db
        || kappa_report.metadata.at("noise_var") != pa_report.metadata.at("noise_var"))
        throw ConfigError("reports were computed for different operating points");

    Overestimation o;
    o.total_db = db(kappa_report.crb_delay / pa_report.crb_delay);
    o.noise_factor_db = db(kappa_report.metadata.at("effective_noise_var") / kappa_report.metadata.at("noise_var"));
    o.moment_factor_db = db(pa_report.metadata.at("moment_e20") / kappa_report.metadata.at("moment_e20"));
    return o;
}

double aggregated_snr(const SystemConfig& cfg, const TargetParams& target, double symbol_energy_sum)
{
    return 2.0 * std::norm(target.reflectivity) * symbol_energy_sum / cfg.noise_var;
}

double crb_pn_doppler(const SystemConfig& cfg, const CpeCovariance& cov, double gamma0)
{
    if (!(gamma0 > 0.0))
        throw ConfigError("aggregated SNR must be positive");
    const auto m = cov.matrix.rows();
    Eigen::MatrixXd sys = gamma0 * cov.matrix + Eigen::MatrixXd::Identity(m, m);
    Eigen::LLT<Eigen::MatrixXd> llt(sys);
    if (llt.info() != Eigen::Success)
        throw NumericalError("gamma0 C + I is not positive definite");
    const double wt = kTwoPi * cfg.symbol_duration();
    const double info = gamma0 * wt * wt * cov.m_prime.dot(llt.solve(cov.m_prime));
    return 1.0 / info;
}

double crb_pn_doppler(const SystemConfig& cfg, const CpeCovariance& cov, std::span<const double> gammas)
{
    const auto m = cov.matrix.rows();
    if (static_cast<Eigen::Index>(gammas.size()) != m)
        throw ConfigError("one aggregated SNR per symbol is required");
    Eigen::MatrixXd sys = cov.matrix;
    for (Eigen::Index i = 0; i < m; ++i) {
        if (!(gammas[i] > 0.0))
            throw DegenerateError("zero-energy symbol in the CPE bound");
        sys(i, i) += 1.0 / gammas[i];
    }
    Eigen::LLT<Eigen::MatrixXd> llt(sys);
    if (llt.info() != Eigen::Success)
        throw NumericalError("C + diag(1/gamma) is not positive definite");
    const double wt = kTwoPi * cfg.symbol_duration();
    return 1.0 / (wt * wt * cov.m_prime.dot(llt.solve(cov.m_prime)));
}

PnFloor crb_pn_floor(const SystemConfig& cfg, const CpeCovariance& cov)
{
    if (!(cov.increment_var > 0.0))
        throw DegenerateError("velocity floor needs a positive linewidth");
    const double wt = kTwoPi * cfg.symbol_duration();
    PnFloor f;
    f.crb_doppler = 1.0 / (wt * wt * cpe_quadratic_form(cov));
    f.velocity_std = velocity_scale(cfg.carrier_freq) * std::sqrt(f.crb_doppler);
    return f;
}

namespace {

std::vector<double> per_symbol_snr(const SystemConfig& cfg, const TargetParams& target, const Eigen::VectorXd& energy)
{
    std::vector<double> g(energy.size());
    for (Eigen::Index m = 0; m < energy.size(); ++m)
        g[m] = aggregated_snr(cfg, target, energy[m]);
    return g;
}

CrbReport with_pn_doppler(CrbReport r, CrbModel model, const SystemConfig& cfg, const CpeCovariance& cov,
                          const TargetParams& target, const Eigen::VectorXd& energy)
{
    if (cov.matrix.rows() != energy.size())
        throw ConfigError("CPE covariance size does not match the number of symbols");
    r.model = model;
    r.crb_doppler = crb_pn_doppler(cfg, cov, per_symbol_snr(cfg, target, energy));
    r.crb_velocity = velocity_crb(r.crb_doppler, cfg.carrier_freq);
    r.metadata["increment_var"] = cov.increment_var;
    r.metadata["gamma0_mean"] = aggregated_snr(cfg, target, energy.mean());
    check_positive_finite(r);
    return r;
}

} // namespace

CrbReport crb_pn(const SystemConfig& cfg, const OfdmFrame& frame, const CpeCovariance& cov,
                 const TargetParams& target)
{
    auto base = crb_ideal(cfg, frame, target);
    return with_pn_doppler(std::move(base), CrbModel::pn, cfg, cov, target,
                           spectral_moments(frame.symbols).per_symbol_energy);
}

CrbReport crb_joint(const SystemConfig& cfg, const PaOutputFrame& pa_out, const CpeCovariance& cov,
                    const TargetParams& target)
{
    auto base = crb_pa(cfg, pa_out, target);
    return with_pn_doppler(std::move(base), CrbModel::joint, cfg, cov, target, pa_out.per_symbol_energy);
}

namespace {

Eigen::MatrixXd observation_fim(const SystemConfig& cfg, const Grid& grid, const TargetParams& target)
{
    check_inputs(cfg, target);
    const auto n = grid.rows();
    const auto m_total = grid.cols();
    if (n != cfg.n_subcarriers || m_total != cfg.n_symbols)
        throw ConfigError("grid shape does not match the system configuration");
    if (n * m_total > 16384)
        throw ConfigError("augmented FIM oracle is limited to N*M <= 16384");

    const auto kc = centered_indices(static_cast<int>(n));
    const auto mc = centered_indices(static_cast<int>(m_total));
    const double df = cfg.subcarrier_spacing;
    const double t = cfg.symbol_duration();
    const cplx j{0.0, 1.0};
    const int dim = AugmentedFim::kTargetDim + static_cast<int>(m_total);

    Eigen::MatrixXd fim = Eigen::MatrixXd::Zero(dim, dim);
    std::array<cplx, 5> d{};
    std::array<int, 5> idx{};
    for (Eigen::Index m = 0; m < m_total; ++m) {
        for (Eigen::Index k = 0; k < n; ++k) {
            const cplx steer = std::polar(1.0, -kTwoPi * kc[k] * df * target.delay)
                             * std::polar(1.0, kTwoPi * target.doppler * mc[m] * t);
            const cplx base = steer * grid(k, m);
            const cplx mu = target.reflectivity * base;
            d[0] = -j * kTwoPi * kc[k] * df * mu;   // d/dtau
            d[1] = j * kTwoPi * mc[m] * t * mu;     // d/dnu
            d[2] = base;                            // d/dalpha_R
            d[3] = j * base;                        // d/dalpha_I
            d[4] = j * mu;                          // d/dtheta_m
            idx = {0, 1, 2, 3, AugmentedFim::kTargetDim + static_cast<int>(m)};
            for (int a = 0; a < 5; ++a)
                for (int b = 0; b < 5; ++b)
                    fim(idx[a], idx[b]) += std::real(std::conj(d[a]) * d[b]);
        }
    }
    return fim * (2.0 / cfg.noise_var);
}

} // namespace

AugmentedFim augmented_fim_oracle(const SystemConfig& cfg, const Grid& grid, const TargetParams& target)
{
    AugmentedFim out;
    out.full = observation_fim(cfg, grid, target);
    out.effective = out.full.topLeftCorner(AugmentedFim::kTargetDim, AugmentedFim::kTargetDim);
    out.has_pn = false;
    return out;
}

AugmentedFim augmented_fim_oracle(const SystemConfig& cfg, const Grid& grid, const CpeCovariance& cov,
                                  const TargetParams& target)
{
    AugmentedFim out;
    out.full = observation_fim(cfg, grid, target);
    out.has_pn = true;
    const int d = AugmentedFim::kTargetDim;
    const auto m = out.full.rows() - d;
    if (cov.matrix.rows() != m)
        throw ConfigError("CPE covariance size does not match the number of symbols");

    Eigen::LLT<Eigen::MatrixXd> prior(cov.matrix);
    if (prior.info() != Eigen::Success)
        throw NumericalError("CPE covariance is not positive definite");
    const Eigen::MatrixXd prior_info = prior.solve(Eigen::MatrixXd::Identity(m, m));

    const Eigen::MatrixXd j_dd = out.full.topLeftCorner(d, d);
    const Eigen::MatrixXd j_dt = out.full.topRightCorner(d, m);
    const Eigen::MatrixXd j_tt = out.full.bottomRightCorner(m, m) + prior_info;
    Eigen::LLT<Eigen::MatrixXd> llt(j_tt);
    if (llt.info() != Eigen::Success)
        throw NumericalError("J_theta_theta + C^-1 is singular");
    out.effective = j_dd - j_dt * llt.solve(j_dt.transpose());
    return out;
}

CouplingResiduals coupling_residuals(const AugmentedFim& fim)
{
    const auto& j = fim.full;
    auto rho = [&](Eigen::Index a, Eigen::Index b) { return std::abs(j(a, b)) / std::sqrt(j(a, a) * j(b, b)); };
    CouplingResiduals c;
    c.delay_doppler = rho(AugmentedFim::kDelay, AugmentedFim::kDoppler);
    c.delay_reflectivity = std::max(rho(AugmentedFim::kDelay, AugmentedFim::kAlphaRe),
                                    rho(AugmentedFim::kDelay, AugmentedFim::kAlphaIm));
    c.doppler_reflectivity = std::max(rho(AugmentedFim::kDoppler, AugmentedFim::kAlphaRe),
                                      rho(AugmentedFim::kDoppler, AugmentedFim::kAlphaIm));
    for (Eigen::Index m = AugmentedFim::kTargetDim; m < j.rows(); ++m)
        c.delay_pn = std::max(c.delay_pn, rho(AugmentedFim::kDelay, m));
    return c;
}

std::pair<double, double> diagonal_approximation_error(const AugmentedFim& fim)
{
    const int d = AugmentedFim::kTargetDim;
    const Eigen::MatrixXd j_dd = fim.full.topLeftCorner(d, d);
    const Eigen::MatrixXd inv = j_dd.inverse();
    auto err = [&](int i) { return (inv(i, i) - 1.0 / j_dd(i, i)) / inv(i, i); };
    return {err(AugmentedFim::kDelay), err(AugmentedFim::kDoppler)};
}

} // namespace isac
