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

#include "isac/comm.hpp"
#include "isac/errors.hpp"

using namespace isac;

TEST_CASE("Gaussian-signaling rate")
{
    CHECK(rate(100.0) == doctest::Approx(std::log2(101.0)).epsilon(1e-15));
    CHECK(rate(100.0) == doctest::Approx(6.658).epsilon(1e-4));
    CHECK(rate(0.0) == 0.0);
    CHECK_THROWS_AS(rate(-1.0), ConfigError);
}

TEST_CASE("pilot-based CPE loss 10 log10(1 + 1/(2 Np))")
{
    CommConfig c;
    c.n_pilots = 16;
    CHECK(pn_sinr_loss_db(c) == doctest::Approx(10.0 * std::log10(33.0 / 32.0)).epsilon(1e-14));
    CHECK(pn_sinr_loss_db(c) < 0.14);
    c.n_pilots = 1;
    CHECK(pn_sinr_loss_db(c) == doctest::Approx(1.7609).epsilon(1e-4));
    c.n_pilots = 0;
    CHECK_THROWS_AS(pn_sinr_loss_db(c), ConfigError);
}

TEST_CASE("SINR with PN: residual scales as 1/gamma, loss independent of SNR and linewidth")
{
    CommConfig c;
    for (double g : {1.0, 100.0, 1e4}) {
        CHECK(pn_residual_variance(c, g) == doctest::Approx(1.0 / (32.0 * g)));
        for (double beta : {10.0, 1000.0}) {
            const double s = sinr_with_pn(c, g, beta);
            CHECK(10.0 * std::log10(g / s) == doctest::Approx(pn_sinr_loss_db(c)).epsilon(1e-12));
        }
        CHECK(sinr_with_pn(c, g, 0.0) == g);
    }
    CHECK_THROWS_AS(sinr_with_pn(c, 10.0, -1.0), ConfigError);
}

TEST_CASE("Bussgang SINR")
{
    CommConfig c;
    c.channel_gain = cplx(0.0, 2.0);
    c.comm_noise_var = 0.1;
    BussgangCoeffs b;
    b.alpha_b = cplx(0.9, 0.0);
    b.distortion_var = 0.02;
    const double expected = 4.0 * 0.81 / (4.0 * 0.02 + 0.1);
    CHECK(sinr_pa(c, b, 1.0) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(comm_snr(c, 1.0) == doctest::Approx(40.0));
    CHECK(pa_comm_degradation_db(c, b, 1.0) == doctest::Approx(10.0 * std::log10(40.0 / expected)));

    BussgangCoeffs linear;
    CHECK(pa_comm_degradation_db(c, linear, 1.0) == doctest::Approx(0.0));
}

TEST_CASE("PA communication loss at IBO 5 dB, SNR 20 dB")
{
    const SystemConfig cfg;
    CommConfig c;
    c.comm_noise_var = 0.01;
    const auto b = estimate_bussgang(RappParams::from_ibo(5.0, 3.0, 1.0), cfg, 1'000'000, 1);
    CHECK(pa_comm_degradation_db(c, b, 1.0) == doctest::Approx(2.35).epsilon(0.02));
}
