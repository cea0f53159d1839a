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

#include "isac/frame.hpp"
#include "isac/pa.hpp"

namespace isac {

/// Flat-fading downlink: Y_c = h e^{j theta_m} Z + W_c.
struct CommConfig {
    cplx channel_gain{1.0, 0.0};
    double comm_noise_var = 0.01;
    int n_pilots = 16;

    void validate() const;
};

/// |h|^2 P_X / sigma_c^2: SNR of an ideal (linear, PN-free) link.
double comm_snr(const CommConfig& comm, double symbol_energy);

/// Bussgang SINR |h|^2 |alpha_B|^2 P_X / (|h|^2 sigma_d^2 + sigma_c^2).
double sinr_pa(const CommConfig& comm, const BussgangCoeffs& bussgang, double symbol_energy);

/// Gaussian-signaling rate log2(1 + sinr), bits/s/Hz.
double rate(double sinr);

/// Pilot-based CPE estimate residual 1 / (2 N_p gamma_c).
double pn_residual_variance(const CommConfig& comm, double gamma_c);

/// High-SNR SINR loss 10 log10(1 + 1/(2 N_p)), dB.
double pn_sinr_loss_db(const CommConfig& comm);

/// SINR after pilot-based CPE removal: gamma / (1 + gamma * residual).
/// With zero linewidth there is nothing to track and the SINR is unchanged.
double sinr_with_pn(const CommConfig& comm, double gamma_c, double linewidth);

/// 10 log10(comm_snr / sinr_pa): PA loss against the ideal link, dB.
double pa_comm_degradation_db(const CommConfig& comm, const BussgangCoeffs& bussgang, double symbol_energy);

} // namespace isac
