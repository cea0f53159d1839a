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

#include "isac/frame.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/FFT>

#include "isac/errors.hpp"
#include "isac/rng.hpp"

namespace isac {

void SystemConfig::validate() const
{
    if (n_subcarriers < 2)
        throw ConfigError("n_subcarriers must be >= 2");
    if (n_symbols < 2)
        throw ConfigError("n_symbols must be >= 2");
    if (!(subcarrier_spacing > 0.0))
        throw ConfigError("subcarrier_spacing must be positive");
    if (!(cp_duration >= 0.0))
        throw ConfigError("cp_duration must be non-negative");
    if (!(symbol_duration() > 0.0))
        throw ConfigError("symbol duration must be positive");
    if (!(carrier_freq > 0.0))
        throw ConfigError("carrier_freq must be positive");
    if (qam_order != 4 && qam_order != 16 && qam_order != 64)
        throw ConfigError("unsupported qam_order " + std::to_string(qam_order) + " (expected 4, 16 or 64)");
    if (!(symbol_energy > 0.0))
        throw ConfigError("symbol_energy must be positive");
    if (!(noise_var > 0.0))
        throw ConfigError("noise_var must be positive");
}

Eigen::VectorXd centered_indices(int n)
{
    Eigen::VectorXd v(n);
    const double c = 0.5 * (n - 1);
    for (int i = 0; i < n; ++i)
        v[i] = i - c;
    return v;
}

std::vector<cplx> make_qam_constellation(int order, double target_power)
{
    int side = 0;
    switch (order) {
    case 4: side = 2; break;
    case 16: side = 4; break;
    case 64: side = 8; break;
    default: throw ConfigError("unsupported QAM order " + std::to_string(order));
    }
    if (!(target_power > 0.0))
        throw ConfigError("constellation power must be positive");

    // Levels +-1, +-3, ...; mean power of the unscaled grid is 2 (side^2 - 1) / 3.
    const double scale = std::sqrt(target_power * 3.0 / (2.0 * (side * side - 1)));
    std::vector<cplx> points;
    points.reserve(order);
    for (int i = 0; i < side; ++i)
        for (int q = 0; q < side; ++q)
            points.emplace_back(scale * (2 * i - side + 1), scale * (2 * q - side + 1));
    return points;
}

namespace {

OfdmFrame empty_frame(const SystemConfig& cfg)
{
    OfdmFrame f;
    f.symbols = Grid::Zero(cfg.n_subcarriers, cfg.n_symbols);
    f.centered_k = centered_indices(cfg.n_subcarriers);
    f.centered_m = centered_indices(cfg.n_symbols);
    return f;
}

} // namespace

OfdmFrame generate_frame(const SystemConfig& cfg, std::uint64_t seed)
{
    cfg.validate();
    const auto points = make_qam_constellation(cfg.qam_order, cfg.symbol_energy);
    OfdmFrame f = empty_frame(cfg);
    Rng rng(derive_seed(seed, Stream::frame));
    for (int m = 0; m < cfg.n_symbols; ++m)
        for (int k = 0; k < cfg.n_subcarriers; ++k)
            f.symbols(k, m) = points[rng.uniform_index(points.size())];
    return f;
}

OfdmFrame generate_symmetric_frame(const SystemConfig& cfg, std::uint64_t seed)
{
    cfg.validate();
    if (cfg.n_subcarriers % 2 != 0)
        throw ConfigError("symmetric frames need an even number of subcarriers");
    const auto points = make_qam_constellation(cfg.qam_order, cfg.symbol_energy);
    OfdmFrame f = empty_frame(cfg);
    Rng rng(derive_seed(seed, Stream::frame));
    const int n = cfg.n_subcarriers;
    const int m_total = cfg.n_symbols;
    for (int m = 0; m < (m_total + 1) / 2; ++m) {
        for (int k = 0; k < n / 2; ++k) {
            const cplx x = points[rng.uniform_index(points.size())];
            f.symbols(k, m) = x;
            f.symbols(n - 1 - k, m) = std::conj(x);
        }
        f.symbols.col(m_total - 1 - m) = f.symbols.col(m);
    }
    return f;
}

Eigen::VectorXcd idft_symbol(const Eigen::VectorXcd& column)
{
    const auto n = column.size();
    if (n == 0)
        return {};
    Eigen::FFT<double> fft;
    fft.SetFlag(Eigen::FFT<double>::Unscaled);
    Eigen::VectorXcd out(n);
    fft.inv(out, column);
    return out / std::sqrt(static_cast<double>(n));
}

Eigen::VectorXcd dft_symbol(const Eigen::VectorXcd& column)
{
    const auto n = column.size();
    if (n == 0)
        return {};
    Eigen::FFT<double> fft;
    Eigen::VectorXcd out(n);
    fft.fwd(out, column);
    return out / std::sqrt(static_cast<double>(n));
}

SpectralMoments spectral_moments(const Grid& grid)
{
    const auto kc = centered_indices(static_cast<int>(grid.rows()));
    const auto mc = centered_indices(static_cast<int>(grid.cols()));
    SpectralMoments s;
    s.per_symbol_energy = Eigen::VectorXd::Zero(grid.cols());
    for (Eigen::Index m = 0; m < grid.cols(); ++m) {
        for (Eigen::Index k = 0; k < grid.rows(); ++k) {
            const double p = std::norm(grid(k, m));
            s.e20 += kc[k] * kc[k] * p;
            s.per_symbol_energy[m] += p;
        }
        s.e02 += mc[m] * mc[m] * s.per_symbol_energy[m];
        s.total_energy += s.per_symbol_energy[m];
    }
    return s;
}

} // namespace isac
