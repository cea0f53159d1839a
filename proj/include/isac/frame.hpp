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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace isac {

using cplx = std::complex<double>;

/// Frequency-domain resource grid, rows = subcarriers k, columns = symbols m.
using Grid = Eigen::MatrixXcd;

inline constexpr double kSpeedOfLight = 299792458.0;

/// OFDM, carrier and constellation parameters of one coherent processing interval.
struct SystemConfig {
    int n_subcarriers = 256;
    int n_symbols = 14;
    double subcarrier_spacing = 120e3;           // Hz
    double cp_duration = 8.9e-6 - 1.0 / 120e3;   // s, so that T = 8.9 us
    double carrier_freq = 28e9;                  // Hz
    int qam_order = 16;
    double symbol_energy = 1.0;                  // P_X
    double noise_var = 0.01;                     // sensing noise variance sigma^2

    /// T = 1/df + T_cp.
    double symbol_duration() const { return 1.0 / subcarrier_spacing + cp_duration; }

    /// Throws ConfigError on any violated invariant.
    void validate() const;

    /// N=256, M=14, df=120 kHz, T = 8.9 us, 16-QAM, fc = 28 GHz, P_X = 1.
    static SystemConfig reference() { return {}; }
};

struct OfdmFrame {
    Grid symbols;                  // X[k,m], N x M
    Eigen::VectorXd centered_k;    // k' = k - (N-1)/2
    Eigen::VectorXd centered_m;    // m' = m - (M-1)/2
};

/// Second-order spectral moments of a grid; used for both X and Z.
struct SpectralMoments {
    double e20 = 0.0;                     // sum (k')^2 |G|^2
    double e02 = 0.0;                     // sum (m')^2 |G|^2
    double total_energy = 0.0;            // sum |G|^2
    Eigen::VectorXd per_symbol_energy;    // E_s[m] = sum_k |G[k,m]|^2
};

/// Centered index vector i - (n-1)/2, i = 0..n-1.
Eigen::VectorXd centered_indices(int n);

/// Square QAM with zero mean and exact average power `target_power`.
std::vector<cplx> make_qam_constellation(int order, double target_power);

/// i.i.d. uniform constellation draws; bit-identical for identical (cfg, seed).
OfdmFrame generate_frame(const SystemConfig& cfg, std::uint64_t seed);

/// Frame whose |X[k,m]|^2 is mirror-symmetric in k' and in m'.
///
/// Bins are Hermitian-paired, X[N-1-k, m] = conj(X[k, m]), and symbols are
/// paired, X[:, M-1-m] = X[:, m]. The centered-frequency time signal is then
/// real, so any phase-preserving memoryless PA keeps |Z|^2 exactly
/// symmetric. Requires even N.
OfdmFrame generate_symmetric_frame(const SystemConfig& cfg, std::uint64_t seed);

/// x[n] = 1/sqrt(N) sum_k X[k] exp(+j 2 pi k n / N).
Eigen::VectorXcd idft_symbol(const Eigen::VectorXcd& column);

/// Z[k] = 1/sqrt(N) sum_n z[n] exp(-j 2 pi k n / N).
Eigen::VectorXcd dft_symbol(const Eigen::VectorXcd& column);

SpectralMoments spectral_moments(const Grid& grid);

} // namespace isac
