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
#include <limits>

#include "isac/csv.hpp"
#include "isac/errors.hpp"
#include "isac/settings.hpp"

using namespace isac;

TEST_CASE("config text: comments, sections, quotes and lists")
{
    Settings s;
    apply_config_text(s, R"(
# reference run
[pa]
ibo_db = 7.5          # dB
smoothness = "2"
[sweep]
snr_values_db = [0, 12.5, -3]
seed = 42
)");
    CHECK(s.ibo_db == 7.5);
    CHECK(s.smoothness == 2.0);
    CHECK(s.snr_values_db == std::vector<double>{0.0, 12.5, -3.0});
    CHECK(s.seed == 42);
}

TEST_CASE("config errors")
{
    Settings s;
    CHECK_THROWS_AS(apply_setting(s, "no_such_key", "1"), ConfigError);
    CHECK_THROWS_AS(apply_setting(s, "ibo_db", "five"), ConfigError);
    CHECK_THROWS_AS(apply_setting(s, "ibo_db", "5dB"), ConfigError);
    CHECK_THROWS_AS(apply_setting(s, "n_subcarriers", "12.5"), ConfigError);
    CHECK_THROWS_AS(apply_setting(s, "ibo_values_db", "[]"), ConfigError);
    CHECK_THROWS_AS(apply_config_text(s, "ibo_db 5"), ConfigError);
    CHECK_THROWS_AS(apply_config_file(s, "/nonexistent/isac.toml"), ConfigError);
    CHECK_THROWS_AS(parse_assignment("=3"), ConfigError);
    CHECK_THROWS_AS(parse_assignment("ibo_db"), ConfigError);
    const auto [k, v] = parse_assignment(" ibo_db = 4 ");
    CHECK(k == "ibo_db");
    CHECK(v == "4");
}

TEST_CASE("settings validation")
{
    Settings s;
    CHECK_NOTHROW(s.validate());
    s.n_trials_pa = 0;
    CHECK_THROWS_AS(s.validate(), ConfigError);
    s = Settings{};
    s.nmse_values_db = {-20.0, 3.0};
    CHECK_THROWS_AS(s.validate(), ConfigError);
    s = Settings{};
    s.target_delay_s = 1.0;
    CHECK_THROWS_AS(s.validate(), ConfigError);
}

TEST_CASE("settings map onto the library structs")
{
    Settings s;
    s.snr_db = 30.0;
    const auto cfg = s.system_config();
    CHECK(cfg.noise_var == doctest::Approx(1e-3));
    CHECK(cfg.symbol_duration() == doctest::Approx(8.9e-6));
    CHECK(s.rapp().sat_amplitude == doctest::Approx(std::sqrt(std::pow(10.0, 0.5))));
    CHECK(s.pn().linewidth == 100.0);
    CHECK(s.comm(10.0).comm_noise_var == doctest::Approx(0.1));
    const auto mc = s.mc(10);
    CHECK(mc.tau_grid.coarse_spacing() == doctest::Approx(1.0 / (4.0 * 256.0 * 120e3)));
    CHECK(mc.nu_grid.coarse_spacing() == doctest::Approx(1.0 / (4.0 * 14.0 * 8.9e-6)));
    CHECK(mc.tau_grid.contains(s.target_delay_s));
}

TEST_CASE("describe lists every key and round-trips")
{
    Settings s;
    s.ibo_db = 1.0 / 3.0;
    const auto d = describe(s);
    CHECK(d.size() == setting_keys().size());
    Settings t;
    for (const auto& [k, v] : d) {
        std::string value = v;
        for (auto& ch : value)
            if (ch == ';')
                ch = ',';
        apply_setting(t, k, value);
    }
    CHECK(t.ibo_db == s.ibo_db);
    CHECK(describe(t) == d);
}

TEST_CASE("number formatting is shortest round-trip")
{
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(5.0) == "5");
    CHECK(format_number(0.1) == "0.1");
    const double x = 1.0 / 7.0;
    CHECK(std::stod(format_number(x)) == x);
}

TEST_CASE("CSV validation and layout")
{
    CsvTable t;
    t.header = {"snr_db", "rate_bpshz"};
    t.rows = {{0.0, 1.5}, {10.0, 3.25}};
    t.provenance = "test";
    CHECK(t.to_string() == "# test\nsnr_db,rate_bpshz\n0,1.5\n10,3.25\n");
    CHECK(t.column_values("rate_bpshz") == std::vector<double>{1.5, 3.25});
    CHECK_THROWS(t.column("missing_db"));

    auto bad = t;
    bad.header[1] = "rate";
    CHECK_THROWS_AS(bad.validate(), NumericalError);
    bad = t;
    bad.rows[1].push_back(1.0);
    CHECK_THROWS_AS(bad.validate(), NumericalError);
    bad = t;
    bad.rows[0][1] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(bad.validate(), NumericalError);
    bad = t;
    bad.rows[0][0] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(bad.validate(), NumericalError);

    for (const char* name : {"a_db", "a_hz", "a_s", "a_s2", "a_hz2", "a_m", "a_mps", "a_mps2", "a_bpshz", "a_lin",
                             "a_count"})
        CHECK(has_unit_suffix(name));
    CHECK_FALSE(has_unit_suffix("_db"));
    CHECK_FALSE(has_unit_suffix("velocity"));
}
