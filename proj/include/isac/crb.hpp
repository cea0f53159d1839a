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

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "isac/frame.hpp"
#include "isac/pa.hpp"
#include "isac/pn.hpp"

namespace isac {

/// Point target: delay tau (s), Doppler nu (Hz), complex reflectivity alpha_s.
struct TargetParams {
    double delay = 200e-9;
    double doppler = 1000.0;
    cplx reflectivity{1.0, 0.0};

    /// |alpha_s| > 0, tau in [0, 1/df), |nu| < 1/(2T).
    void validate(const SystemConfig& cfg) const;
};

enum class CrbModel { ideal, pa, kappa, pn, joint };

std::string_view to_string(CrbModel model);

struct CrbReport {
    CrbModel model = CrbModel::ideal;
    double crb_delay = 0.0;      // s^2
    double crb_doppler = 0.0;    // Hz^2
    double crb_velocity = 0.0;   // (m/s)^2
    double snr_db = 0.0;         // per-subcarrier sensing SNR gamma_s
    std::map<std::string, double> metadata;
};

/// gamma_s = |alpha_s|^2 P_X / sigma^2.
double sensing_snr(const SystemConfig& cfg, const TargetParams& target);

/// c / (2 f_c): converts Doppler (Hz) to radial velocity (m/s).
double velocity_scale(double carrier_freq);

/// (c / (2 f_c))^2 * crb_doppler.
double velocity_crb(double crb_doppler, double carrier_freq);

CrbReport crb_ideal(const SystemConfig& cfg, const OfdmFrame& frame, const TargetParams& target);

/// Slepian-Bangs bound with the known PA output Z as the waveform.
CrbReport crb_pa(const SystemConfig& cfg, const PaOutputFrame& pa_out, const TargetParams& target);

/// Distortion-as-noise bound: |alpha_B|^2 E20^(X) moments and
/// sigma_eff^2 = |alpha_s|^2 sigma_d^2 + sigma^2.
CrbReport crb_kappa(const SystemConfig& cfg, const BussgangCoeffs& bussgang, const OfdmFrame& frame,
                    const TargetParams& target);

/// kappa/physics ratio split into its moment factor and its SNR-proportional
/// noise factor; all in dB, total = moment + noise.
struct Overestimation {
    double total_db = 0.0;
    double moment_factor_db = 0.0;
    double noise_factor_db = 0.0;
};

Overestimation overestimation_ratio(const CrbReport& kappa_report, const CrbReport& pa_report);

/// 2 |alpha_s|^2 E_s / sigma^2.
double aggregated_snr(const SystemConfig& cfg, const TargetParams& target, double symbol_energy_sum);

/// Doppler CRB (Hz^2) under CPE noise with a symbol-independent aggregated SNR:
/// J = gamma0 (2 pi T)^2 m'^T (gamma0 C + I)^{-1} m'.
double crb_pn_doppler(const SystemConfig& cfg, const CpeCovariance& cov, double gamma0);

/// Same bound with per-symbol aggregated SNRs gamma_m:
/// J = (2 pi T)^2 m'^T (C + diag(1/gamma_m))^{-1} m', which reduces to the
/// scalar form when all gamma_m are equal.
double crb_pn_doppler(const SystemConfig& cfg, const CpeCovariance& cov, std::span<const double> gammas);

struct PnFloor {
    double crb_doppler = 0.0;    // Hz^2
    double velocity_std = 0.0;   // m/s
};

/// High-SNR limit [(2 pi T)^2 m'^T C^{-1} m']^{-1}.
PnFloor crb_pn_floor(const SystemConfig& cfg, const CpeCovariance& cov);

/// Linear transmitter with CPE noise; Doppler uses the frame's per-symbol energies.
CrbReport crb_pn(const SystemConfig& cfg, const OfdmFrame& frame, const CpeCovariance& cov,
                 const TargetParams& target);

/// PA + CPE. Delay is the PA-only bound, Doppler uses E_s^(Z) per symbol.
CrbReport crb_joint(const SystemConfig& cfg, const PaOutputFrame& pa_out, const CpeCovariance& cov,
                    const TargetParams& target);

/// Brute-force Fisher information for [tau, nu, alpha_R, alpha_I, theta_0..theta_{M-1}]
/// built from the mean derivatives of the echo model, plus the 4x4 effective
/// matrix after eliminating the CPE block with its Gaussian prior.
struct AugmentedFim {
    Eigen::MatrixXd full;        // (4+M) x (4+M) observation FIM (no prior)
    Eigen::MatrixXd effective;   // 4 x 4 Schur complement (J_dd if no PN)
    bool has_pn = false;

    static constexpr int kDelay = 0;
    static constexpr int kDoppler = 1;
    static constexpr int kAlphaRe = 2;
    static constexpr int kAlphaIm = 3;
    static constexpr int kTargetDim = 4;
};

/// Largest normalized couplings |J_ij| / sqrt(J_ii J_jj) of the observation FIM.
struct CouplingResiduals {
    double delay_doppler = 0.0;
    double delay_reflectivity = 0.0;
    double doppler_reflectivity = 0.0;
    double delay_pn = 0.0;   // max over m
};

/// Limited to N*M <= 16384.
AugmentedFim augmented_fim_oracle(const SystemConfig& cfg, const Grid& grid, const TargetParams& target);
AugmentedFim augmented_fim_oracle(const SystemConfig& cfg, const Grid& grid, const CpeCovariance& cov,
                                  const TargetParams& target);

CouplingResiduals coupling_residuals(const AugmentedFim& fim);

/// Relative error of the diagonal approximation: ([J^-1]_ii - 1/J_ii) / [J^-1]_ii
/// on the observation target block, for delay and Doppler.
std::pair<double, double> diagonal_approximation_error(const AugmentedFim& fim);

} // namespace isac
