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

#include "isac/pa.hpp"

#include <cmath>
#include <numbers>

#include "isac/errors.hpp"
#include "isac/rng.hpp"

namespace isac {

RappParams RappParams::from_ibo(double ibo_db, double smoothness, double symbol_energy)
{
    if (!(smoothness > 0.0))
        throw ConfigError("Rapp smoothness must be positive");
    if (!(symbol_energy > 0.0))
        throw ConfigError("symbol_energy must be positive");
    RappParams p;
    p.ibo_db = ibo_db;
    p.smoothness = smoothness;
    p.sat_amplitude = std::sqrt(symbol_energy * std::pow(10.0, ibo_db / 10.0));
    return p;
}

cplx rapp_gain(cplx x, const RappParams& params)
{
    const double r = std::abs(x);
    if (r == 0.0)
        return {0.0, 0.0};
    const double two_p = 2.0 * params.smoothness;
    const double u = r / params.sat_amplitude;
    // log-domain evaluation keeps (1 + u^2p)^(-1/2p) finite for very large u
    const double log_u2p = two_p * std::log(u);
    double log_den;
    if (log_u2p > 40.0)
        log_den = log_u2p + std::log1p(std::exp(-log_u2p));
    else
        log_den = std::log1p(std::exp(log_u2p));
    return x * std::exp(-log_den / two_p);
}

PaOutputFrame make_pa_output(Grid symbols)
{
    PaOutputFrame out;
    const auto mom = spectral_moments(symbols);
    out.symbols = std::move(symbols);
    out.moment_e20 = mom.e20;
    out.moment_e02 = mom.e02;
    out.per_symbol_energy = mom.per_symbol_energy;
    return out;
}

PaOutputFrame apply_pa_grid(const Grid& grid, const RappParams& params)
{
    Grid z(grid.rows(), grid.cols());
    for (Eigen::Index m = 0; m < grid.cols(); ++m) {
        Eigen::VectorXcd x = idft_symbol(grid.col(m));
        for (auto& s : x)
            s = rapp_gain(s, params);
        z.col(m) = dft_symbol(x);
    }
    return make_pa_output(std::move(z));
}

PaOutputFrame apply_pa_frame(const OfdmFrame& frame, const RappParams& params)
{
    return apply_pa_grid(frame.symbols, params);
}

BussgangCoeffs estimate_bussgang(const RappParams& params, const SystemConfig& cfg,
                                 std::size_t n_samples, std::uint64_t seed)
{
    if (n_samples == 0)
        throw ConfigError("Bussgang estimation needs at least one sample");
    const double power = cfg.symbol_energy;
    const std::uint64_t stream = derive_seed(seed, Stream::bussgang);
    Rng rng(stream);

    // Two passes over the same samples; regenerate rather than store 1e6+ pairs.
    auto draw = [&](std::size_t i) {
        const double u = (static_cast<double>(i) + rng.uniform()) / static_cast<double>(n_samples);
        const double r = std::sqrt(-power * std::log1p(-u));   // |x|^2 ~ Exp(P_X)
        const double phi = 2.0 * std::numbers::pi * rng.uniform();
        return std::polar(r, phi);
    };

    cplx cross{0.0, 0.0};
    double in_power = 0.0;
    for (std::size_t i = 0; i < n_samples; ++i) {
        const cplx x = draw(i);
        const cplx z = rapp_gain(x, params);
        cross += z * std::conj(x);
        in_power += std::norm(x);
    }
    if (!(in_power > 0.0))
        throw DegenerateError("zero input power in Bussgang estimation");
    const cplx alpha = cross / in_power;

    double dist = 0.0;
    rng = Rng(stream);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const cplx x = draw(i);
        dist += std::norm(rapp_gain(x, params) - alpha * x);
    }

    BussgangCoeffs c;
    c.alpha_b = alpha;
    c.distortion_var = dist / static_cast<double>(n_samples);
    c.sample_count = n_samples;
    c.low_precision = n_samples < 100000;
    return c;
}

std::pair<double, double> pa_degradation_db(const OfdmFrame& input_frame, const PaOutputFrame& output)
{
    if (input_frame.symbols.rows() != output.symbols.rows() || input_frame.symbols.cols() != output.symbols.cols())
        throw ConfigError("frame shapes differ");
    const auto in = spectral_moments(input_frame.symbols);
    if (!(output.moment_e20 > 0.0) || !(output.moment_e02 > 0.0) || !(in.e20 > 0.0) || !(in.e02 > 0.0))
        throw DegenerateError("zero spectral moment");
    return {10.0 * std::log10(in.e20 / output.moment_e20), 10.0 * std::log10(in.e02 / output.moment_e02)};
}

double spectral_symmetry_residual(const Grid& grid)
{
    const auto kc = centered_indices(static_cast<int>(grid.rows()));
    double first = 0.0;
    double second = 0.0;
    double total = 0.0;
    for (Eigen::Index m = 0; m < grid.cols(); ++m)
        for (Eigen::Index k = 0; k < grid.rows(); ++k) {
            const double p = std::norm(grid(k, m));
            first += kc[k] * p;
            second += kc[k] * kc[k] * p;
            total += p;
        }
    if (!(second > 0.0) || !(total > 0.0))
        throw DegenerateError("zero-energy grid");
    return std::abs(first) / std::sqrt(second * total);
}

} // namespace isac
