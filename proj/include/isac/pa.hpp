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
#include <utility>

#include "isac/frame.hpp"

namespace isac {

/// Rapp solid-state PA. A_sat^2 = P_X * 10^(IBO/10).
struct RappParams {
    double ibo_db = 5.0;
    double smoothness = 3.0;
    double sat_amplitude = 0.0;

    static RappParams from_ibo(double ibo_db, double smoothness, double symbol_energy);
};

struct PaOutputFrame {
    Grid symbols;   // Z[k,m]
    double moment_e20 = 0.0;
    double moment_e02 = 0.0;
    Eigen::VectorXd per_symbol_energy;   // E_s^(Z)[m]
};

struct BussgangCoeffs {
    cplx alpha_b{1.0, 0.0};
    double distortion_var = 0.0;   // sigma_d^2, same units as P_X
    std::size_t sample_count = 0;
    bool low_precision = false;    // fewer samples than the recommended 1e5
};

/// g(x) = x (1 + (|x|/A_sat)^(2p))^(-1/(2p)).
cplx rapp_gain(cplx x, const RappParams& params);

/// Per symbol: unitary IDFT, memoryless PA on every sample, unitary DFT.
PaOutputFrame apply_pa_frame(const OfdmFrame& frame, const RappParams& params);
PaOutputFrame apply_pa_grid(const Grid& grid, const RappParams& params);

/// Wraps an arbitrary grid (e.g. Z = X for a linear PA) with its moments.
PaOutputFrame make_pa_output(Grid symbols);

/// Bussgang gain and distortion power for circular Gaussian input of power
/// cfg.symbol_energy.
///
/// The input amplitude is drawn by stratified inverse-CDF sampling of the
/// Rayleigh law with uniform random phase, so each sample is marginally
/// CN(0, P_X) while the estimator variance is far below plain Monte Carlo.
/// alpha_b = sum z x^* / sum |x|^2, sigma_d^2 = mean |z - alpha_b x|^2.
BussgangCoeffs estimate_bussgang(const RappParams& params, const SystemConfig& cfg,
                                 std::size_t n_samples, std::uint64_t seed);

/// 10 log10 of X/Z moment ratios: (delay moment E20, Doppler moment E02), dB.
std::pair<double, double> pa_degradation_db(const OfdmFrame& input_frame, const PaOutputFrame& output);

/// |sum k' |G|^2| / sqrt(sum k'^2 |G|^2 * sum |G|^2).
///
/// Normalized delay/phase coupling of a grid; exactly zero when |G|^2 is
/// mirror-symmetric in k'.
double spectral_symmetry_residual(const Grid& grid);

} // namespace isac
