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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isac/csv.hpp"
#include "isac/settings.hpp"

namespace isac {

/// One CLI invocation: scenario name, optional config file, --set overrides
/// (applied after the file), output path and seed override.
struct ScenarioSpec {
    std::string name;
    std::vector<std::pair<std::string, std::string>> overrides;
    std::optional<std::filesystem::path> config_path;
    std::filesystem::path output_path;   // empty: do not write
    std::optional<std::uint64_t> seed;
};

struct ScenarioInfo {
    std::string name;
    std::string description;
    std::vector<std::string> columns;
    bool monte_carlo = false;
};

const std::vector<ScenarioInfo>& scenario_catalog();

/// Throws ConfigError for unknown names.
const ScenarioInfo& scenario_info(const std::string& name);

/// Reference preset with the scenario's own sweep ranges applied.
Settings scenario_defaults(const std::string& name);

/// Defaults, then config file, then overrides, then seed; validated.
Settings resolve_settings(const ScenarioSpec& request);

/// Runs a scenario on already-resolved settings.
CsvTable run_scenario(const std::string& name, const Settings& settings);

/// Resolves settings, runs, and writes request.output_path when non-empty.
CsvTable run_scenario(const ScenarioSpec& request);

// Individual scenarios.
CsvTable run_pa_overestimation(const Settings& s);
CsvTable run_pa_vs_ibo(const Settings& s);
CsvTable run_pn_floor(const Settings& s);
CsvTable run_dpd_sweep(const Settings& s);
CsvTable run_design_map(const Settings& s);
CsvTable run_pareto(const Settings& s);
CsvTable run_asymmetry(const Settings& s);
CsvTable run_mc_validate(const Settings& s);

/// min, min + step, ... up to max (inclusive within 1e-9 step).
std::vector<double> linear_sweep(double min, double max, double step);

/// n points geometrically spaced from min to max.
std::vector<double> log_sweep(double min, double max, int n);

/// Library version plus the source revision captured at configure time.
std::string version_string();

} // namespace isac
