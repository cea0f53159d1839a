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

#include "isac/settings.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <variant>

#include "isac/errors.hpp"

namespace isac {

namespace {

using Field = std::variant<double Settings::*, int Settings::*, std::int64_t Settings::*, std::vector<double> Settings::*>;

const std::map<std::string, Field>& registry()
{
    static const std::map<std::string, Field> fields = {
        {"n_subcarriers", &Settings::n_subcarriers},
        {"n_symbols", &Settings::n_symbols},
        {"subcarrier_spacing_hz", &Settings::subcarrier_spacing_hz},
        {"cp_duration_s", &Settings::cp_duration_s},
        {"carrier_freq_hz", &Settings::carrier_freq_hz},
        {"qam_order", &Settings::qam_order},
        {"symbol_energy", &Settings::symbol_energy},
        {"snr_db", &Settings::snr_db},
        {"comm_snr_db", &Settings::comm_snr_db},
        {"ibo_db", &Settings::ibo_db},
        {"smoothness", &Settings::smoothness},
        {"bussgang_samples", &Settings::bussgang_samples},
        {"linewidth_hz", &Settings::linewidth_hz},
        {"n_pilots", &Settings::n_pilots},
        {"target_delay_s", &Settings::target_delay_s},
        {"target_doppler_hz", &Settings::target_doppler_hz},
        {"seed", &Settings::seed},
        {"n_trials_pa", &Settings::n_trials_pa},
        {"n_trials_pn", &Settings::n_trials_pn},
        {"n_trials_dpd", &Settings::n_trials_dpd},
        {"grid_coarse_points", &Settings::grid_coarse_points},
        {"grid_refine_levels", &Settings::grid_refine_levels},
        {"grid_window_cells", &Settings::grid_window_cells},
        {"pn_mc_snr_db", &Settings::pn_mc_snr_db},
        {"snr_min_db", &Settings::snr_min_db},
        {"snr_max_db", &Settings::snr_max_db},
        {"snr_step_db", &Settings::snr_step_db},
        {"ibo_min_db", &Settings::ibo_min_db},
        {"ibo_max_db", &Settings::ibo_max_db},
        {"ibo_step_db", &Settings::ibo_step_db},
        {"beta_min_hz", &Settings::beta_min_hz},
        {"beta_max_hz", &Settings::beta_max_hz},
        {"beta_points", &Settings::beta_points},
        {"ibo_values_db", &Settings::ibo_values_db},
        {"beta_values_hz", &Settings::beta_values_hz},
        {"snr_values_db", &Settings::snr_values_db},
        {"nmse_values_db", &Settings::nmse_values_db},
    };
    return fields;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string unquote(std::string s)
{
    s = trim(s);
    if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front())
        return s.substr(1, s.size() - 2);
    return s;
}

double parse_double(const std::string& key, const std::string& text)
{
    const std::string s = unquote(text);
    double v = 0.0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end || s.empty())
        throw ConfigError("invalid number '" + s + "' for key " + key);
    return v;
}

std::int64_t parse_int(const std::string& key, const std::string& text)
{
    const double v = parse_double(key, text);
    if (std::floor(v) != v || std::abs(v) > 9.0e15)
        throw ConfigError("key " + key + " expects an integer, got '" + trim(text) + "'");
    return static_cast<std::int64_t>(v);
}

std::vector<double> parse_list(const std::string& key, const std::string& text)
{
    std::string s = unquote(text);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']')
            throw ConfigError("unterminated list for key " + key);
        s = s.substr(1, s.size() - 2);
    }
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!trim(item).empty())
            out.push_back(parse_double(key, item));
    if (out.empty())
        throw ConfigError("empty list for key " + key);
    return out;
}

std::string strip_comment(const std::string& line)
{
    bool in_quote = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"')
            in_quote = !in_quote;
        if (line[i] == '#' && !in_quote)
            return line.substr(0, i);
    }
    return line;
}

} // namespace

std::string format_number(double v)
{
    if (v == 0.0)
        return "0";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc())
        throw NumericalError("cannot format number");
    return std::string(buf, ptr);
}

SystemConfig Settings::system_config(double snr_override_db) const
{
    SystemConfig c;
    c.n_subcarriers = n_subcarriers;
    c.n_symbols = n_symbols;
    c.subcarrier_spacing = subcarrier_spacing_hz;
    c.cp_duration = cp_duration_s;
    c.carrier_freq = carrier_freq_hz;
    c.qam_order = qam_order;
    c.symbol_energy = symbol_energy;
    c.noise_var = symbol_energy / std::pow(10.0, snr_override_db / 10.0);
    return c;
}

RappParams Settings::rapp(double ibo) const
{
    return RappParams::from_ibo(ibo, smoothness, symbol_energy);
}

PnParams Settings::pn(double beta) const
{
    return {beta, 1.0 / subcarrier_spacing_hz + cp_duration_s};
}

CommConfig Settings::comm(double snr_override_db) const
{
    CommConfig c;
    c.comm_noise_var = symbol_energy / std::pow(10.0, snr_override_db / 10.0);
    c.n_pilots = n_pilots;
    return c;
}

TargetParams Settings::target() const
{
    return {target_delay_s, target_doppler_hz, {1.0, 0.0}};
}

McConfig Settings::mc(int n_trials) const
{
    const SystemConfig c = system_config();
    const double tau_cell = 1.0 / (c.n_subcarriers * c.subcarrier_spacing);
    const double nu_cell = 1.0 / (c.n_symbols * c.symbol_duration());
    McConfig m;
    m.n_trials = n_trials;
    m.seed = static_cast<std::uint64_t>(seed);
    m.tau_grid = {target_delay_s - grid_window_cells * tau_cell, target_delay_s + grid_window_cells * tau_cell,
                  grid_coarse_points, grid_refine_levels};
    m.nu_grid = {target_doppler_hz - grid_window_cells * nu_cell, target_doppler_hz + grid_window_cells * nu_cell,
                 grid_coarse_points, grid_refine_levels};
    return m;
}

void Settings::validate() const
{
    system_config().validate();
    target().validate(system_config());
    comm().validate();
    if (!(smoothness > 0.0))
        throw ConfigError("smoothness must be positive");
    if (bussgang_samples < 1)
        throw ConfigError("bussgang_samples must be positive");
    if (linewidth_hz < 0.0)
        throw ConfigError("linewidth_hz must be >= 0");
    if (seed < 0)
        throw ConfigError("seed must be non-negative");
    if (n_trials_pa < 1 || n_trials_pn < 1 || n_trials_dpd < 1)
        throw ConfigError("trial counts must be positive");
    if (grid_coarse_points < 2 || grid_refine_levels < 0 || !(grid_window_cells > 0.0))
        throw ConfigError("invalid Monte-Carlo grid settings");
    if (!(snr_step_db > 0.0) || snr_max_db < snr_min_db)
        throw ConfigError("invalid SNR sweep");
    if (!(ibo_step_db > 0.0) || ibo_max_db < ibo_min_db)
        throw ConfigError("invalid IBO sweep");
    if (!(beta_min_hz > 0.0) || beta_max_hz < beta_min_hz || beta_points < 1)
        throw ConfigError("invalid linewidth sweep");
    for (double b : beta_values_hz)
        if (b < 0.0)
            throw ConfigError("linewidths must be >= 0");
    for (double n : nmse_values_db)
        if (n > 0.0)
            throw ConfigError("template NMSE values must be <= 0 dB");
}

void apply_setting(Settings& s, const std::string& key, const std::string& value)
{
    const auto& reg = registry();
    const auto it = reg.find(key);
    if (it == reg.end())
        throw ConfigError("unknown configuration key '" + key + "'");
    std::visit(
        [&](auto member) {
            using T = std::remove_reference_t<decltype(s.*member)>;
            if constexpr (std::is_same_v<T, double>)
                s.*member = parse_double(key, value);
            else if constexpr (std::is_same_v<T, std::vector<double>>)
                s.*member = parse_list(key, value);
            else
                s.*member = static_cast<T>(parse_int(key, value));
        },
        it->second);
}

void apply_config_text(Settings& s, const std::string& text)
{
    std::stringstream ss(text);
    std::string line;
    int line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        const std::string body = trim(strip_comment(line));
        if (body.empty() || body.front() == '[')
            continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        apply_setting(s, trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
    }
}

void apply_config_file(Settings& s, const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    apply_config_text(s, buf.str());
}

std::pair<std::string, std::string> parse_assignment(const std::string& arg)
{
    const auto eq = arg.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ConfigError("expected key=value, got '" + arg + "'");
    return {trim(arg.substr(0, eq)), trim(arg.substr(eq + 1))};
}

std::vector<std::string> setting_keys()
{
    std::vector<std::string> keys;
    for (const auto& [k, _] : registry())
        keys.push_back(k);
    return keys;
}

std::vector<std::pair<std::string, std::string>> describe(const Settings& s)
{
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [key, field] : registry()) {
        std::string text = std::visit(
            [&](auto member) -> std::string {
                using T = std::remove_cvref_t<decltype(s.*member)>;
                if constexpr (std::is_same_v<T, std::vector<double>>) {
                    std::string t = "[";
                    for (std::size_t i = 0; i < (s.*member).size(); ++i)
                        t += (i ? "," : "") + format_number((s.*member)[i]);
                    return t + "]";
                } else if constexpr (std::is_integral_v<T>) {
                    return std::to_string(s.*member);
                } else {
                    return format_number(static_cast<double>(s.*member));
                }
            },
            field);
        out.emplace_back(key, std::move(text));
    }
    return out;
}

} // namespace isac
