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

#include "isac/csv.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "isac/errors.hpp"
#include "isac/settings.hpp"

namespace isac {

bool has_unit_suffix(const std::string& column)
{
    static constexpr std::array<std::string_view, 11> units = {
        "_db", "_hz", "_s", "_s2", "_hz2", "_m", "_mps", "_mps2", "_bpshz", "_lin", "_count"};
    for (auto u : units)
        if (column.size() > u.size() && column.compare(column.size() - u.size(), u.size(), u) == 0)
            return true;
    return false;
}

void CsvTable::validate() const
{
    if (header.empty())
        throw NumericalError("CSV table has no columns");
    for (const auto& h : header)
        if (!has_unit_suffix(h))
            throw NumericalError("column '" + h + "' has no unit suffix");
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != header.size())
            throw NumericalError("CSV row " + std::to_string(r) + " is not rectangular");
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            if (!std::isfinite(rows[r][c]))
                throw NumericalError("non-finite value in column '" + header[c] + "' row " + std::to_string(r));
    }
}

std::size_t CsvTable::column(const std::string& name) const
{
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name)
            return i;
    throw std::out_of_range("no column named '" + name + "'");
}

std::vector<double> CsvTable::column_values(const std::string& name) const
{
    const auto c = column(name);
    std::vector<double> v;
    v.reserve(rows.size());
    for (const auto& r : rows)
        v.push_back(r[c]);
    return v;
}

void CsvTable::write(std::ostream& os) const
{
    validate();
    os << "# " << provenance << '\n';
    for (std::size_t i = 0; i < header.size(); ++i)
        os << (i ? "," : "") << header[i];
    os << '\n';
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i)
            os << (i ? "," : "") << format_number(r[i]);
        os << '\n';
    }
}

std::string CsvTable::to_string() const
{
    std::ostringstream os;
    write(os);
    return os.str();
}

void CsvTable::write_file(const std::filesystem::path& path) const
{
    const std::string body = to_string();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << body;
    if (!out)
        throw std::runtime_error("failed writing " + path.string());
}

} // namespace isac
