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

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isac/errors.hpp"
#include "isac/scenario.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

void print_catalog(std::ostream& os)
{
    for (const auto& info : isac::scenario_catalog()) {
        os << info.name << (info.monte_carlo ? "  [monte carlo]" : "") << "\n  " << info.description << "\n  columns:";
        for (std::size_t i = 0; i < info.columns.size(); ++i)
            os << (i ? ", " : " ") << info.columns[i];
        os << "\n";
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hardware-impairment bounds for monostatic OFDM sensing"};
    app.set_version_flag("--version", isac::version_string());
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "List scenarios and their CSV columns");
    auto* keys = app.add_subcommand("keys", "List configuration keys with their defaults");

    auto* run = app.add_subcommand("run", "Run a scenario and write its CSV table");
    std::string scenario;
    std::string config_path;
    std::vector<std::string> sets;
    std::string out_path;
    std::uint64_t seed = 0;
    run->add_option("scenario", scenario, "Scenario name (see `list`)")->required();
    run->add_option("--config", config_path, "Flat key = value config file");
    run->add_option("--set", sets, "Override key=value (repeatable, applied after --config)");
    run->add_option("--out", out_path, "Output CSV path (default: stdout)");
    auto* seed_opt = run->add_option("--seed", seed, "Master seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        if (list->parsed()) {
            print_catalog(std::cout);
            return 0;
        }
        if (keys->parsed()) {
            for (const auto& [k, v] : isac::describe(isac::Settings{}))
                std::cout << k << " = " << v << "\n";
            return 0;
        }

        isac::ScenarioSpec request;
        request.name = scenario;
        if (!config_path.empty())
            request.config_path = config_path;
        for (const auto& s : sets)
            request.overrides.push_back(isac::parse_assignment(s));
        request.output_path = out_path;
        if (seed_opt->count() > 0)
            request.seed = seed;

        const isac::CsvTable table = isac::run_scenario(request);
        if (out_path.empty())
            table.write(std::cout);
        else
            std::cerr << "wrote " << table.rows.size() << " rows to " << out_path << "\n";
        return 0;
    } catch (const isac::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
