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

#include <stdexcept>
#include <string>

namespace isac {

/// Invalid or inconsistent configuration (unsupported QAM order, bad key, ...).
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// A bound or estimator has no finite answer for the given input
/// (zero spectral moments, zero template energy, beta = 0 covariance).
class DegenerateError : public std::domain_error {
public:
    explicit DegenerateError(const std::string& what) : std::domain_error(what) {}
};

/// Factorization or solve failed numerically.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace isac
