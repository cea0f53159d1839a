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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "isac/crb.hpp"
#include "isac/errors.hpp"

using namespace isac;

namespace {

constexpr double kPi = std::numbers::pi;

SystemConfig small_config(int n)
{
    SystemConfig cfg;
    cfg.n_subcarriers = n;
    return cfg;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

} // namespace

TEST_CASE("velocity scale c / (2 fc)")
{
    CHECK(velocity_scale(28e9) == doctest::Approx(5.3534e-3).epsilon(1e-4));
    CHECK(velocity_crb(4.0, 28e9) == doctest::Approx(4.0 * std::pow(kSpeedOfLight / 56e9, 2)));
    CHECK_THROWS_AS(velocity_scale(0.0), ConfigError);
}

TEST_CASE("ideal bound matches the hand-written diagonal Fisher information")
{
    SystemConfig cfg;
    cfg.noise_var = 0.05;
    const TargetParams target{100e-9, -500.0, cplx(0.6, 0.8) * 0.5};
    const auto frame = generate_frame(cfg, 3);
    const auto mom = spectral_moments(frame.symbols);
    const auto r = crb_ideal(cfg, frame, target);
    const double a2 = 0.25;
    const double wd = 2.0 * kPi * cfg.subcarrier_spacing;
    const double wt = 2.0 * kPi * cfg.symbol_duration();
    CHECK(r.crb_delay == doctest::Approx(cfg.noise_var / (2.0 * a2 * wd * wd * mom.e20)).epsilon(1e-13));
    CHECK(r.crb_doppler == doctest::Approx(cfg.noise_var / (2.0 * a2 * wt * wt * mom.e02)).epsilon(1e-13));
    CHECK(r.crb_velocity == doctest::Approx(velocity_crb(r.crb_doppler, cfg.carrier_freq)));
    CHECK(r.snr_db == doctest::Approx(10.0 * std::log10(a2 / cfg.noise_var)));
    CHECK(sensing_snr(cfg, target) == doctest::Approx(a2 / cfg.noise_var));
}

TEST_CASE("PA bound with Z = X equals the ideal bound; kappa with no distortion too")
{
    const SystemConfig cfg;
    const TargetParams target;
    const auto frame = generate_frame(cfg, 4);
    const auto ideal = crb_ideal(cfg, frame, target);
    const auto pa = crb_pa(cfg, make_pa_output(frame.symbols), target);
    CHECK(pa.crb_delay == doctest::Approx(ideal.crb_delay).epsilon(1e-14));
    CHECK(pa.crb_doppler == doctest::Approx(ideal.crb_doppler).epsilon(1e-14));

    BussgangCoeffs linear;
    const auto kappa = crb_kappa(cfg, linear, frame, target);
    CHECK(kappa.crb_delay == doctest::Approx(ideal.crb_delay).epsilon(1e-14));
    const auto o = overestimation_ratio(kappa, pa);
    CHECK(std::abs(o.total_db) < 1e-10);
}

TEST_CASE("overestimation splits into moment and noise factors")
{
    SystemConfig cfg;
    const TargetParams target;
    const auto frame = generate_frame(cfg, 1);
    const auto pa = RappParams::from_ibo(3.0, 3.0, 1.0);
    const auto z = apply_pa_frame(frame, pa);
    const auto bg = estimate_bussgang(pa, cfg, 400'000, 1);
    double prev = -1e9;
    for (double snr : {-5.0, 0.0, 10.0, 20.0, 30.0}) {
        cfg.noise_var = std::pow(10.0, -snr / 10.0);
        const auto o = overestimation_ratio(crb_kappa(cfg, bg, frame, target), crb_pa(cfg, z, target));
        CHECK(o.total_db == doctest::Approx(o.moment_factor_db + o.noise_factor_db).epsilon(1e-12));
        CHECK(o.noise_factor_db
              == doctest::Approx(10.0 * std::log10(1.0 + bg.distortion_var / cfg.noise_var)).epsilon(1e-12));
        CHECK(o.total_db > prev);
        prev = o.total_db;
    }
    CHECK_THROWS_AS(overestimation_ratio(crb_pa(cfg, z, target), crb_pa(cfg, z, target)), ConfigError);
}

TEST_CASE("velocity floors and the sqrt(beta) law")
{
    const SystemConfig cfg;
    const std::vector<std::pair<double, double>> expected = {
        {50.0, 0.96}, {100.0, 1.36}, {500.0, 3.04}, {1000.0, 4.30}};
    for (const auto& [beta, v] : expected) {
        const auto f = crb_pn_floor(cfg, build_cpe_covariance(PnParams{beta, cfg.symbol_duration()}, 14));
        CAPTURE(beta);
        CHECK(f.velocity_std == doctest::Approx(v).epsilon(0.02));
        // independent form: c/(2fc) / (2 pi T sqrt(55.25 / (4 pi beta T)))
        const double s2 = 4.0 * kPi * beta * cfg.symbol_duration();
        const double direct = velocity_scale(cfg.carrier_freq)
                            / (2.0 * kPi * cfg.symbol_duration() * std::sqrt(55.25 / s2));
        CHECK(f.velocity_std == doctest::Approx(direct).epsilon(1e-12));
    }
    for (double beta = 10.0; beta <= 250.0; beta *= 1.37) {
        const auto f1 = crb_pn_floor(cfg, build_cpe_covariance(PnParams{beta, cfg.symbol_duration()}, 14));
        const auto f4 = crb_pn_floor(cfg, build_cpe_covariance(PnParams{4.0 * beta, cfg.symbol_duration()}, 14));
        CHECK(std::abs(f4.velocity_std / f1.velocity_std - 2.0) < 1e-6);
    }
}

TEST_CASE("CPE Doppler bound: scalar and per-symbol forms, limits")
{
    const SystemConfig cfg;
    const auto cov = build_cpe_covariance(PnParams{100.0, cfg.symbol_duration()}, 14);
    const double g0 = 5120.0;
    const std::vector<double> flat(14, g0);
    CHECK(crb_pn_doppler(cfg, cov, g0) == doctest::Approx(crb_pn_doppler(cfg, cov, flat)).epsilon(1e-12));

    // direct J = g0 wt^2 m'^T (g0 C + I)^-1 m' via a dense inverse
    const double wt = 2.0 * kPi * cfg.symbol_duration();
    const Eigen::MatrixXd a = (g0 * cov.matrix + Eigen::MatrixXd::Identity(14, 14)).inverse();
    CHECK(crb_pn_doppler(cfg, cov, g0) == doctest::Approx(1.0 / (g0 * wt * wt * cov.m_prime.dot(a * cov.m_prime))).epsilon(1e-10));

    // high SNR approaches the floor from above; low SNR approaches the PN-free bound
    const double floor = crb_pn_floor(cfg, cov).crb_doppler;
    CHECK(crb_pn_doppler(cfg, cov, 1e12) == doctest::Approx(floor).epsilon(1e-8));
    CHECK(crb_pn_doppler(cfg, cov, 1e3) > floor);
    const double m2 = cov.m_prime.squaredNorm();
    CHECK(crb_pn_doppler(cfg, cov, 1e-6) == doctest::Approx(1.0 / (1e-6 * wt * wt * m2)).epsilon(1e-4));

    CHECK_THROWS_AS(crb_pn_doppler(cfg, cov, 0.0), ConfigError);
    CHECK_THROWS_AS(crb_pn_doppler(cfg, cov, std::vector<double>(13, 1.0)), ConfigError);
}

TEST_CASE("joint bound keeps the PA delay bound and the PN Doppler bound")
{
    const SystemConfig cfg;
    const TargetParams target;
    const auto frame = generate_frame(cfg, 2);
    const auto cov = build_cpe_covariance(PnParams{100.0, cfg.symbol_duration()}, 14);
    for (double ibo : {3.0, 5.0, 9.0}) {
        const auto z = apply_pa_frame(frame, RappParams::from_ibo(ibo, 3.0, 1.0));
        const auto j = crb_joint(cfg, z, cov, target);
        CHECK(j.crb_delay == crb_pa(cfg, z, target).crb_delay);
        CHECK(j.model == CrbModel::joint);
        CHECK(j.crb_doppler > crb_pn_floor(cfg, cov).crb_doppler);
    }
    const auto pn = crb_pn(cfg, frame, cov, target);
    CHECK(pn.crb_delay == crb_ideal(cfg, frame, target).crb_delay);
    CHECK(pn.metadata.at("increment_var") == cov.increment_var);
}

TEST_CASE("augmented FIM oracle reproduces the closed forms")
{
    const TargetParams target{300e-9, 2500.0, cplx(0.8, -0.3)};
    for (int n : {16, 32, 64}) {
        auto cfg = small_config(n);
        cfg.noise_var = 0.02;
        for (bool symmetric : {false, true}) {
            const auto frame = symmetric ? generate_symmetric_frame(cfg, 5) : generate_frame(cfg, 5);
            const auto z = apply_pa_frame(frame, RappParams::from_ibo(4.0, 3.0, 1.0));
            const auto cov = build_cpe_covariance(PnParams{200.0, cfg.symbol_duration()}, 14);
            const auto fim = augmented_fim_oracle(cfg, z.symbols, cov, target);
            const auto pa = crb_pa(cfg, z, target);
            const auto joint = crb_joint(cfg, z, cov, target);
            CAPTURE(n);
            CAPTURE(symmetric);
            CHECK(rel(1.0 / fim.full(0, 0), pa.crb_delay) < 1e-10);
            CHECK(rel(1.0 / fim.full(1, 1), pa.crb_doppler) < 1e-10);
            CHECK(rel(1.0 / fim.effective(1, 1), joint.crb_doppler) < 1e-10);
            CHECK(rel(1.0 / fim.effective(0, 0), joint.crb_delay) < (symmetric ? 1e-10 : 5e-2));

            const auto c = coupling_residuals(fim);
            if (symmetric) {
                CHECK(c.delay_doppler < 1e-12);
                CHECK(c.delay_reflectivity < 1e-12);
                CHECK(c.doppler_reflectivity < 1e-12);
                CHECK(c.delay_pn < 1e-12);
                const auto [ed, ev] = diagonal_approximation_error(fim);
                CHECK(std::abs(ed) < 1e-12);
                CHECK(std::abs(ev) < 1e-12);
            } else {
                CHECK(c.delay_pn < 0.5);
            }

            const auto no_pn = augmented_fim_oracle(cfg, z.symbols, target);
            CHECK_FALSE(no_pn.has_pn);
            CHECK(no_pn.effective == fim.full.topLeftCorner(4, 4));
        }
    }
}

TEST_CASE("oracle rejects oversized or mismatched grids")
{
    const SystemConfig cfg;
    const TargetParams target;
    const auto frame = generate_frame(cfg, 1);
    auto big = cfg;
    big.n_subcarriers = 2048;
    CHECK_THROWS_AS(augmented_fim_oracle(big, Grid::Ones(2048, 14), target), ConfigError);
    CHECK_THROWS_AS(augmented_fim_oracle(small_config(64), frame.symbols, target), ConfigError);
}

TEST_CASE("target validation")
{
    const SystemConfig cfg;
    CHECK_NOTHROW(TargetParams{}.validate(cfg));
    CHECK_THROWS_AS((TargetParams{-1e-9, 0.0, {1.0, 0.0}}.validate(cfg)), ConfigError);
    CHECK_THROWS_AS((TargetParams{1e-5, 0.0, {1.0, 0.0}}.validate(cfg)), ConfigError);
    CHECK_THROWS_AS((TargetParams{1e-7, 6e4, {1.0, 0.0}}.validate(cfg)), ConfigError);
    CHECK_THROWS_AS((TargetParams{1e-7, 0.0, {0.0, 0.0}}.validate(cfg)), DegenerateError);
    CHECK(to_string(CrbModel::kappa) == "kappa");
}
