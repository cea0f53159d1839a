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
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "isac/comm.hpp"
#include "isac/crb.hpp"
#include "isac/frame.hpp"
#include "isac/mc.hpp"
#include "isac/pa.hpp"
#include "isac/pn.hpp"

namespace isac {

/// Every tunable of a scenario run, addressable by a flat key.
///
/// Keys mirror the library structs (system, PA, phase noise, comm link, Monte
/// Carlo) plus the sweep axes. SNR keys are per-subcarrier values in dB with
/// |alpha_s| = 1 and P_X = symbol_energy, so sigma^2 = P_X / 10^(snr/10).
struct Settings {
    // system
    int n_subcarriers = 256;
    int n_symbols = 14;
    double subcarrier_spacing_hz = 120e3;
    double cp_duration_s = 8.9e-6 - 1.0 / 120e3;
    double carrier_freq_hz = 28e9;
    int qam_order = 16;
    double symbol_energy = 1.0;
    double snr_db = 20.0;
    double comm_snr_db = 20.0;

    // PA
    double ibo_db = 5.0;
    double smoothness = 3.0;
    std::int64_t bussgang_samples = 1000000;

    // phase noise and comm link
    double linewidth_hz = 100.0;
    int n_pilots = 16;

    // target
    double target_delay_s = 200e-9;
    double target_doppler_hz = 1000.0;

    // Monte Carlo
    std::int64_t seed = 1;
    int n_trials_pa = 1500;
    int n_trials_pn = 800;
    int n_trials_dpd = 2000;
    int grid_coarse_points = 33;
    int grid_refine_levels = 5;
    double grid_window_cells = 4.0;
    double pn_mc_snr_db = 40.0;

    // sweeps
    double snr_min_db = -5.0;
    double snr_max_db = 30.0;
    double snr_step_db = 1.0;
    double ibo_min_db = 0.0;
    double ibo_max_db = 12.0;
    double ibo_step_db = 0.5;
    double beta_min_hz = 10.0;
    double beta_max_hz = 1000.0;
    int beta_points = 21;
    std::vector<double> ibo_values_db{3.0, 5.0, 7.0};
    std::vector<double> beta_values_hz{50.0, 100.0, 500.0, 1000.0};
    std::vector<double> snr_values_db{10.0, 20.0, 30.0};
    std::vector<double> nmse_values_db{-40.0, -35.0, -30.0, -25.0, -20.0, -15.0};

    SystemConfig system_config(double snr_override_db) const;
    SystemConfig system_config() const { return system_config(snr_db); }
    RappParams rapp(double ibo) const;
    RappParams rapp() const { return rapp(ibo_db); }
    PnParams pn(double beta) const;
    PnParams pn() const { return pn(linewidth_hz); }
    CommConfig comm(double snr_override_db) const;
    CommConfig comm() const { return comm(comm_snr_db); }
    TargetParams target() const;
    McConfig mc(int n_trials) const;

    void validate() const;
};

/// Sets one key from its textual value; throws ConfigError for unknown keys
/// or unparsable values.
void apply_setting(Settings& s, const std::string& key, const std::string& value);

/// Applies "key = value" lines. `#` starts a comment, `[section]` headers are
/// ignored, strings may be quoted, lists use [a, b, c].
void apply_config_text(Settings& s, const std::string& text);
void apply_config_file(Settings& s, const std::filesystem::path& path);

/// Parses "key=value" as given to --set.
std::pair<std::string, std::string> parse_assignment(const std::string& arg);

std::vector<std::string> setting_keys();

/// Key/value echo in key order, e.g. "ibo_db=5".
std::vector<std::pair<std::string, std::string>> describe(const Settings& s);

/// Shortest round-trip formatting used in CSV cells and provenance.
std::string format_number(double v);

} // namespace isac
