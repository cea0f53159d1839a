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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isac/crb.hpp"
#include "isac/frame.hpp"
#include "isac/pa.hpp"
#include "isac/pn.hpp"

namespace isac {

/// Coarse search range plus hierarchical refinement. Each refinement level
/// evaluates 9 points per axis at 1/8 of the previous spacing around the
/// current best point.
struct GridSpec {
    double min = 0.0;
    double max = 0.0;
    int n_coarse = 33;
    int n_refine_levels = 5;

    double coarse_spacing() const { return (max - min) / (n_coarse - 1); }
    bool contains(double v) const { return v >= min && v <= max; }
    void validate(const char* axis) const;
};

enum class DopplerEstimator {
    periodogram,   // CPE left unmodeled
    cpe_prior,     // per-symbol phases fitted with the Wiener prior
};

struct McConfig {
    int n_trials = 1500;
    GridSpec tau_grid;
    GridSpec nu_grid;
    std::uint64_t seed = 1;
    std::optional<double> template_nmse_db;
    DopplerEstimator doppler_estimator = DopplerEstimator::periodogram;

    void validate() const;
};

/// Windows of +-4 resolution cells around the true target, coarse spacing a
/// quarter cell (1/(4 N df) in delay, 1/(4 M T) in Doppler).
McConfig reference_mc_config(const SystemConfig& cfg, const TargetParams& target, int n_trials, std::uint64_t seed);

struct McResult {
    double mse_delay = 0.0;      // s^2
    double mse_doppler = 0.0;    // Hz^2
    double mse_velocity = 0.0;   // (m/s)^2
    double bias_delay = 0.0;
    double bias_doppler = 0.0;
    double crb_delay = 0.0;      // reference bound used for the ratios
    double crb_doppler = 0.0;
    double crb_ratio_delay_db = 0.0;
    double crb_ratio_doppler_db = 0.0;
    double crb_ratio_db = 0.0;   // Doppler ratio for PN runs, delay ratio otherwise
    int n_trials = 0;
    int outlier_count = 0;
};

struct MlEstimate {
    double delay = 0.0;
    double doppler = 0.0;
    cplx reflectivity{0.0, 0.0};
    double objective = 0.0;
};

/// Y = alpha e^{-j 2 pi k' df tau} e^{j 2 pi nu m' T} e^{j theta_m} Z + W, W ~ CN(0, sigma2).
Grid synthesize_echo(const SystemConfig& cfg, const Grid& z, const TargetParams& target,
                     const std::optional<Eigen::VectorXd>& theta, double sigma2, std::uint64_t seed);

/// Grid-search maximum of |sum Y conj(Zh) e^{j 2 pi k' df tau} e^{-j 2 pi nu m' T}|^2 / sum |Zh|^2.
/// Ties go to the smallest delay, then the smallest Doppler.
MlEstimate ml_grid_estimate(const SystemConfig& cfg, const Grid& y, const Grid& template_grid, const McConfig& mc);

/// Doppler from the per-symbol matched-filter phases, weighted by the CPE
/// prior plus per-symbol phase-noise variance 1/gamma_m:
/// nu = m'^T R^-1 phi / (2 pi T m'^T R^-1 m'), R = C + diag(1/gamma_m).
/// The reflectivity phase is taken as known (`reference_phase`).
double cpe_prior_doppler_estimate(const SystemConfig& cfg, const Grid& y, const Grid& template_grid,
                                  const CpeCovariance& cov, const MlEstimate& coarse, double reflectivity_magnitude,
                                  double reference_phase);

/// Zh = Z + E, E i.i.d. CN(0, 10^(nmse/10) * mean|Z|^2). Non-finite nmse (-inf) returns Z.
Grid dpd_template_perturb(const Grid& z, double nmse_db, std::uint64_t seed);

/// Monte-Carlo MSE against the matching bound (PA-only or PA+CPE).
/// Trial i uses seed mc.seed + i; results do not depend on thread count.
McResult run_mc_mse(const SystemConfig& cfg, const RappParams& pa, const std::optional<PnParams>& pn,
                    const TargetParams& target, const McConfig& mc);

struct DpdPoint {
    double nmse_db = 0.0;
    double overhead_db = 0.0;   // 10 log10(MSE_delay / CRB_PA(tau))
    double mse_delay = 0.0;
    double crb_delay = 0.0;
    int outlier_count = 0;
};

std::vector<DpdPoint> dpd_overhead_sweep(const SystemConfig& cfg, const RappParams& pa,
                                         const std::vector<double>& nmse_grid_db, const TargetParams& target,
                                         const McConfig& mc);

} // namespace isac
