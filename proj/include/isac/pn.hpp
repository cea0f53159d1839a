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

#include "isac/frame.hpp"

namespace isac {

/// Wiener phase noise reduced to a common phase error per OFDM symbol.
struct PnParams {
    double linewidth = 100.0;        // 3-dB linewidth beta, Hz
    double symbol_duration = 8.9e-6; // T, s

    /// Per-symbol increment variance 4 pi beta T (rad^2).
    double increment_var() const;

    /// The CPE reduction is trusted up to an increment variance of 0.12 rad^2.
    static constexpr double kValidityLimit = 0.12;
    bool cpe_valid() const { return increment_var() <= kValidityLimit; }
};

struct CpeCovariance {
    Eigen::MatrixXd matrix;     // [C]_{ij} = sigma_delta^2 * min(i+1, j+1)
    Eigen::VectorXd m_prime;    // centered symbol index
    double increment_var = 0.0;
};

/// Throws DegenerateError for beta = 0 (singular covariance).
CpeCovariance build_cpe_covariance(const PnParams& pn, int n_symbols);

/// theta_m = sum_{i <= m} delta_i, delta_i ~ N(0, sigma_delta^2) i.i.d.
Eigen::VectorXd sample_cpe(const CpeCovariance& cov, std::uint64_t seed);

/// m'^T C^{-1} m' via Cholesky solve.
double cpe_quadratic_form(const CpeCovariance& cov);

/// Multiplies column m by exp(j theta_m).
Grid apply_cpe(const Grid& grid, const Eigen::VectorXd& theta);

} // namespace isac
