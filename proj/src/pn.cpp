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

#include "isac/pn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "isac/errors.hpp"
#include "isac/rng.hpp"

namespace isac {

double PnParams::increment_var() const
{
    return 4.0 * std::numbers::pi * linewidth * symbol_duration;
}

CpeCovariance build_cpe_covariance(const PnParams& pn, int n_symbols)
{
    if (n_symbols < 2)
        throw ConfigError("CPE covariance needs at least two symbols");
    if (pn.linewidth < 0.0 || !(pn.symbol_duration > 0.0))
        throw ConfigError("linewidth must be >= 0 and symbol duration > 0");
    if (pn.linewidth == 0.0)
        throw DegenerateError("zero linewidth gives a singular CPE covariance");

    CpeCovariance c;
    c.increment_var = pn.increment_var();
    c.matrix.resize(n_symbols, n_symbols);
    for (int i = 0; i < n_symbols; ++i)
        for (int j = 0; j < n_symbols; ++j)
            c.matrix(i, j) = c.increment_var * (std::min(i, j) + 1);
    c.m_prime = centered_indices(n_symbols);
    return c;
}

Eigen::VectorXd sample_cpe(const CpeCovariance& cov, std::uint64_t seed)
{
    Rng rng(derive_seed(seed, Stream::cpe));
    const double sd = std::sqrt(cov.increment_var);
    Eigen::VectorXd theta(cov.matrix.rows());
    double acc = 0.0;
    for (Eigen::Index m = 0; m < theta.size(); ++m) {
        acc += sd * rng.normal();
        theta[m] = acc;
    }
    return theta;
}

double cpe_quadratic_form(const CpeCovariance& cov)
{
    Eigen::LLT<Eigen::MatrixXd> llt(cov.matrix);
    if (llt.info() != Eigen::Success)
        throw NumericalError("CPE covariance is not positive definite");
    return cov.m_prime.dot(llt.solve(cov.m_prime));
}

Grid apply_cpe(const Grid& grid, const Eigen::VectorXd& theta)
{
    if (theta.size() != grid.cols())
        throw ConfigError("theta length does not match the number of symbols");
    Grid out(grid.rows(), grid.cols());
    for (Eigen::Index m = 0; m < grid.cols(); ++m)
        out.col(m) = grid.col(m) * std::polar(1.0, theta[m]);
    return out;
}

} // namespace isac
