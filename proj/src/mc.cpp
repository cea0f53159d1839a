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

#include "isac/mc.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "isac/errors.hpp"
#include "isac/rng.hpp"

namespace isac {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kRefinePoints = 9;
constexpr double kRefineShrink = 8.0;

double wrap_phase(double x)
{
    return std::remainder(x, kTwoPi);
}

struct TrialOutcome {
    double err_delay = 0.0;
    double err_doppler = 0.0;
    bool outlier = false;
};

} // namespace

void GridSpec::validate(const char* axis) const
{
    if (n_coarse < 2)
        throw ConfigError(std::string(axis) + " grid needs at least 2 coarse points");
    if (!(max > min))
        throw ConfigError(std::string(axis) + " grid max must exceed min");
    if (n_refine_levels < 0)
        throw ConfigError(std::string(axis) + " grid refine levels must be >= 0");
}

void McConfig::validate() const
{
    if (n_trials < 1)
        throw ConfigError("n_trials must be >= 1");
    tau_grid.validate("delay");
    nu_grid.validate("Doppler");
    if (template_nmse_db && *template_nmse_db > 0.0)
        throw ConfigError("template NMSE must be <= 0 dB");
}

McConfig reference_mc_config(const SystemConfig& cfg, const TargetParams& target, int n_trials, std::uint64_t seed)
{
    const double tau_cell = 1.0 / (cfg.n_subcarriers * cfg.subcarrier_spacing);
    const double nu_cell = 1.0 / (cfg.n_symbols * cfg.symbol_duration());
    McConfig mc;
    mc.n_trials = n_trials;
    mc.seed = seed;
    mc.tau_grid = {target.delay - 4.0 * tau_cell, target.delay + 4.0 * tau_cell, 33, 5};
    mc.nu_grid = {target.doppler - 4.0 * nu_cell, target.doppler + 4.0 * nu_cell, 33, 5};
    return mc;
}

Grid synthesize_echo(const SystemConfig& cfg, const Grid& z, const TargetParams& target,
                     const std::optional<Eigen::VectorXd>& theta, double sigma2, std::uint64_t seed)
{
    if (theta && theta->size() != z.cols())
        throw ConfigError("theta length does not match the number of symbols");
    if (sigma2 < 0.0)
        throw ConfigError("noise variance must be non-negative");
    const auto kc = centered_indices(static_cast<int>(z.rows()));
    const auto mc = centered_indices(static_cast<int>(z.cols()));
    const double t = cfg.symbol_duration();

    Eigen::VectorXcd delay_steer(z.rows());
    for (Eigen::Index k = 0; k < z.rows(); ++k)
        delay_steer[k] = std::polar(1.0, -kTwoPi * kc[k] * cfg.subcarrier_spacing * target.delay);

    Rng rng(derive_seed(seed, Stream::noise));
    Grid y(z.rows(), z.cols());
    for (Eigen::Index m = 0; m < z.cols(); ++m) {
        double phase = kTwoPi * target.doppler * mc[m] * t;
        if (theta)
            phase += (*theta)[m];
        const cplx col_gain = target.reflectivity * std::polar(1.0, phase);
        for (Eigen::Index k = 0; k < z.rows(); ++k) {
            cplx v = col_gain * delay_steer[k] * z(k, m);
            if (sigma2 > 0.0)
                v += rng.complex_normal(sigma2);
            y(k, m) = v;
        }
    }
    return y;
}

namespace {

/// Per-symbol delay-compensated correlations A(i, m) for each delay candidate.
Eigen::MatrixXcd delay_correlations(const Grid& product, const Eigen::VectorXd& kc, double df,
                                    const std::vector<double>& delays)
{
    Eigen::MatrixXcd a(delays.size(), product.cols());
    Eigen::VectorXcd steer(product.rows());
    for (std::size_t i = 0; i < delays.size(); ++i) {
        for (Eigen::Index k = 0; k < product.rows(); ++k)
            steer[k] = std::polar(1.0, kTwoPi * kc[k] * df * delays[i]);
        a.row(static_cast<Eigen::Index>(i)) = steer.transpose() * product;
    }
    return a;
}

struct GridPeak {
    std::size_t i = 0;
    std::size_t j = 0;
    cplx value{0.0, 0.0};
};

GridPeak search(const Eigen::MatrixXcd& a, const Eigen::VectorXd& mc, double t, const std::vector<double>& dopplers)
{
    Eigen::MatrixXcd steer(a.cols(), dopplers.size());
    for (std::size_t j = 0; j < dopplers.size(); ++j)
        for (Eigen::Index m = 0; m < a.cols(); ++m)
            steer(m, static_cast<Eigen::Index>(j)) = std::polar(1.0, -kTwoPi * dopplers[j] * mc[m] * t);
    const Eigen::MatrixXcd s = a * steer;

    GridPeak best;
    double best_obj = -1.0;
    for (Eigen::Index i = 0; i < s.rows(); ++i)
        for (Eigen::Index j = 0; j < s.cols(); ++j) {
            const double obj = std::norm(s(i, j));
            if (obj > best_obj) {
                best_obj = obj;
                best = {static_cast<std::size_t>(i), static_cast<std::size_t>(j), s(i, j)};
            }
        }
    return best;
}

std::vector<double> linspace(double lo, double hi, int n)
{
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = lo + (hi - lo) * i / (n - 1);
    return v;
}

std::vector<double> around(double center, double spacing)
{
    std::vector<double> v(kRefinePoints);
    const int half = kRefinePoints / 2;
    for (int i = 0; i < kRefinePoints; ++i)
        v[i] = center + (i - half) * spacing;
    return v;
}

} // namespace

MlEstimate ml_grid_estimate(const SystemConfig& cfg, const Grid& y, const Grid& template_grid, const McConfig& mc)
{
    if (y.rows() != template_grid.rows() || y.cols() != template_grid.cols())
        throw ConfigError("template shape does not match the observation");
    mc.tau_grid.validate("delay");
    mc.nu_grid.validate("Doppler");
    const double energy = template_grid.squaredNorm();
    if (!(energy > 0.0))
        throw DegenerateError("template energy is zero");

    const auto kc = centered_indices(static_cast<int>(y.rows()));
    const auto mcv = centered_indices(static_cast<int>(y.cols()));
    const double t = cfg.symbol_duration();
    const Grid product = y.cwiseProduct(template_grid.conjugate());

    auto taus = linspace(mc.tau_grid.min, mc.tau_grid.max, mc.tau_grid.n_coarse);
    auto nus = linspace(mc.nu_grid.min, mc.nu_grid.max, mc.nu_grid.n_coarse);
    double tau_step = mc.tau_grid.coarse_spacing();
    double nu_step = mc.nu_grid.coarse_spacing();

    auto peak = search(delay_correlations(product, kc, cfg.subcarrier_spacing, taus), mcv, t, nus);
    double tau_best = taus[peak.i];
    double nu_best = nus[peak.j];
    const int levels = std::max(mc.tau_grid.n_refine_levels, mc.nu_grid.n_refine_levels);
    for (int level = 0; level < levels; ++level) {
        if (level < mc.tau_grid.n_refine_levels)
            tau_step /= kRefineShrink;
        if (level < mc.nu_grid.n_refine_levels)
            nu_step /= kRefineShrink;
        taus = around(tau_best, tau_step);
        nus = around(nu_best, nu_step);
        peak = search(delay_correlations(product, kc, cfg.subcarrier_spacing, taus), mcv, t, nus);
        tau_best = taus[peak.i];
        nu_best = nus[peak.j];
    }

    MlEstimate est;
    est.delay = tau_best;
    est.doppler = nu_best;
    est.reflectivity = peak.value / energy;
    est.objective = std::norm(peak.value) / energy;
    return est;
}

double cpe_prior_doppler_estimate(const SystemConfig& cfg, const Grid& y, const Grid& template_grid,
                                  const CpeCovariance& cov, const MlEstimate& coarse, double reflectivity_magnitude,
                                  double reference_phase)
{
    const auto m_total = y.cols();
    if (cov.matrix.rows() != m_total)
        throw ConfigError("CPE covariance size does not match the number of symbols");
    const auto kc = centered_indices(static_cast<int>(y.rows()));
    const auto mcv = centered_indices(static_cast<int>(m_total));
    const double t = cfg.symbol_duration();
    const Grid product = y.cwiseProduct(template_grid.conjugate());
    const Eigen::MatrixXcd a = delay_correlations(product, kc, cfg.subcarrier_spacing, {coarse.delay});

    Eigen::VectorXd phi(m_total);
    Eigen::MatrixXd r = cov.matrix;
    double prev = 0.0;
    for (Eigen::Index m = 0; m < m_total; ++m) {
        const double ramp = kTwoPi * coarse.doppler * mcv[m] * t;
        double resid = std::arg(a(0, m) * std::polar(1.0, -ramp - reference_phase));
        if (m > 0)
            resid = prev + wrap_phase(resid - prev);
        prev = resid;
        phi[m] = resid + ramp;
        const double e_m = template_grid.col(m).squaredNorm();
        const double gamma_m = 2.0 * reflectivity_magnitude * reflectivity_magnitude * e_m / cfg.noise_var;
        if (!(gamma_m > 0.0))
            throw DegenerateError("zero-energy template symbol");
        r(m, m) += 1.0 / gamma_m;
    }
    Eigen::LLT<Eigen::MatrixXd> llt(r);
    if (llt.info() != Eigen::Success)
        throw NumericalError("CPE weighting matrix is not positive definite");
    const Eigen::VectorXd w = llt.solve(mcv);
    return w.dot(phi) / (kTwoPi * t * w.dot(mcv));
}

Grid dpd_template_perturb(const Grid& z, double nmse_db, std::uint64_t seed)
{
    if (!std::isfinite(nmse_db)) {
        if (nmse_db > 0.0)
            throw ConfigError("template NMSE must be <= 0 dB");
        return z;
    }
    if (nmse_db > 0.0)
        throw ConfigError("template NMSE must be <= 0 dB");
    const double bin_power = z.squaredNorm() / static_cast<double>(z.size());
    const double var = std::pow(10.0, nmse_db / 10.0) * bin_power;
    Rng rng(derive_seed(seed, Stream::template_error));
    Grid out = z;
    for (Eigen::Index m = 0; m < z.cols(); ++m)
        for (Eigen::Index k = 0; k < z.rows(); ++k)
            out(k, m) += rng.complex_normal(var);
    return out;
}

McResult run_mc_mse(const SystemConfig& cfg, const RappParams& pa, const std::optional<PnParams>& pn,
                    const TargetParams& target, const McConfig& mc)
{
    cfg.validate();
    target.validate(cfg);
    mc.validate();
    if (!mc.tau_grid.contains(target.delay) || !mc.nu_grid.contains(target.doppler))
        throw ConfigError("search grids do not cover the true target parameters");

    const OfdmFrame frame = generate_frame(cfg, mc.seed);
    const PaOutputFrame z = apply_pa_frame(frame, pa);

    std::optional<CpeCovariance> cov;
    if (pn && pn->linewidth > 0.0)
        cov = build_cpe_covariance(*pn, cfg.n_symbols);
    const CrbReport bound = cov ? crb_joint(cfg, z, *cov, target) : crb_pa(cfg, z, target);

    const double tau_out = 10.0 * mc.tau_grid.coarse_spacing();
    const double nu_out = 10.0 * mc.nu_grid.coarse_spacing();
    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(mc.n_trials));

#pragma omp parallel for schedule(static)
    for (int i = 0; i < mc.n_trials; ++i) {
        const std::uint64_t trial_seed = mc.seed + static_cast<std::uint64_t>(i);
        std::optional<Eigen::VectorXd> theta;
        if (cov)
            theta = sample_cpe(*cov, trial_seed);
        const Grid y = synthesize_echo(cfg, z.symbols, target, theta, cfg.noise_var, trial_seed);
        const Grid templ = mc.template_nmse_db ? dpd_template_perturb(z.symbols, *mc.template_nmse_db, trial_seed)
                                               : z.symbols;
        const MlEstimate est = ml_grid_estimate(cfg, y, templ, mc);
        double nu_hat = est.doppler;
        if (cov && mc.doppler_estimator == DopplerEstimator::cpe_prior)
            nu_hat = cpe_prior_doppler_estimate(cfg, y, templ, *cov, est, std::abs(target.reflectivity),
                                                std::arg(target.reflectivity));
        TrialOutcome& o = outcomes[static_cast<std::size_t>(i)];
        o.err_delay = est.delay - target.delay;
        o.err_doppler = nu_hat - target.doppler;
        o.outlier = std::abs(o.err_delay) > tau_out || std::abs(o.err_doppler) > nu_out;
    }

    McResult r;
    r.n_trials = mc.n_trials;
    for (const auto& o : outcomes) {
        r.mse_delay += o.err_delay * o.err_delay;
        r.mse_doppler += o.err_doppler * o.err_doppler;
        r.bias_delay += o.err_delay;
        r.bias_doppler += o.err_doppler;
        r.outlier_count += o.outlier ? 1 : 0;
    }
    const double n = static_cast<double>(mc.n_trials);
    r.mse_delay /= n;
    r.mse_doppler /= n;
    r.bias_delay /= n;
    r.bias_doppler /= n;
    r.mse_velocity = velocity_crb(r.mse_doppler, cfg.carrier_freq);
    r.crb_delay = bound.crb_delay;
    r.crb_doppler = bound.crb_doppler;
    r.crb_ratio_delay_db = 10.0 * std::log10(r.mse_delay / r.crb_delay);
    r.crb_ratio_doppler_db = 10.0 * std::log10(r.mse_doppler / r.crb_doppler);
    r.crb_ratio_db = cov ? r.crb_ratio_doppler_db : r.crb_ratio_delay_db;
    return r;
}

std::vector<DpdPoint> dpd_overhead_sweep(const SystemConfig& cfg, const RappParams& pa,
                                         const std::vector<double>& nmse_grid_db, const TargetParams& target,
                                         const McConfig& mc)
{
    std::vector<DpdPoint> out;
    out.reserve(nmse_grid_db.size());
    for (double nmse : nmse_grid_db) {
        McConfig point = mc;
        point.template_nmse_db = nmse;
        const McResult res = run_mc_mse(cfg, pa, std::nullopt, target, point);
        DpdPoint p;
        p.nmse_db = nmse;
        p.mse_delay = res.mse_delay;
        p.crb_delay = res.crb_delay;
        p.overhead_db = res.crb_ratio_delay_db;
        p.outlier_count = res.outlier_count;
        out.push_back(p);
    }
    return out;
}

} // namespace isac
