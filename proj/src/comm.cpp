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

#include "isac/comm.hpp"

#include <cmath>

#include "isac/errors.hpp"

namespace isac {

void CommConfig::validate() const
{
    if (!(comm_noise_var > 0.0))
        throw ConfigError("comm_noise_var must be positive");
    if (n_pilots < 1)
        throw ConfigError("n_pilots must be >= 1");
}

double comm_snr(const CommConfig& comm, double symbol_energy)
{
    comm.validate();
    return std::norm(comm.channel_gain) * symbol_energy / comm.comm_noise_var;
}

double sinr_pa(const CommConfig& comm, const BussgangCoeffs& bussgang, double symbol_energy)
{
    comm.validate();
    const double h2 = std::norm(comm.channel_gain);
    return h2 * std::norm(bussgang.alpha_b) * symbol_energy / (h2 * bussgang.distortion_var + comm.comm_noise_var);
}

double rate(double sinr)
{
    if (sinr < 0.0)
        throw ConfigError("SINR must be non-negative");
    return std::log2(1.0 + sinr);
}

double pn_residual_variance(const CommConfig& comm, double gamma_c)
{
    comm.validate();
    if (!(gamma_c > 0.0))
        throw ConfigError("communication SNR must be positive");
    return 1.0 / (2.0 * comm.n_pilots * gamma_c);
}

double pn_sinr_loss_db(const CommConfig& comm)
{
    comm.validate();
    return 10.0 * std::log10(1.0 + 1.0 / (2.0 * comm.n_pilots));
}

double sinr_with_pn(const CommConfig& comm, double gamma_c, double linewidth)
{
    if (linewidth < 0.0)
        throw ConfigError("linewidth must be non-negative");
    if (linewidth == 0.0)
        return gamma_c;
    return gamma_c / (1.0 + gamma_c * pn_residual_variance(comm, gamma_c));
}

double pa_comm_degradation_db(const CommConfig& comm, const BussgangCoeffs& bussgang, double symbol_energy)
{
    return 10.0 * std::log10(comm_snr(comm, symbol_energy) / sinr_pa(comm, bussgang, symbol_energy));
}

} // namespace isac
