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

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace isac {

/// Rectangular numeric table with unit-suffixed column names and a single
/// provenance comment line.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    std::string provenance;

    /// Rectangular, every cell finite, every column name carries a unit suffix.
    void validate() const;

    std::size_t column(const std::string& name) const;
    std::vector<double> column_values(const std::string& name) const;

    /// "# provenance" line, header, then rows; '\n' line endings.
    void write(std::ostream& os) const;
    std::string to_string() const;
    void write_file(const std::filesystem::path& path) const;
};

/// Recognized unit suffixes: _db _hz _s _s2 _hz2 _m _mps _mps2 _bpshz _lin _count.
bool has_unit_suffix(const std::string& column);

} // namespace isac
