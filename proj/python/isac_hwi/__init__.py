# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2026 The isac-hwi Authors

"""Hardware-impairment Cramer-Rao bounds for monostatic OFDM sensing."""

from ._core import (
    __version__,
    BussgangCoeffs,
    CommConfig,
    ConfigError,
    CrbReport,
    DegenerateError,
    McResult,
    NumericalError,
    Overestimation,
    PnFloor,
    PnParams,
    RappParams,
    SystemConfig,
    TargetParams,
    apply_pa,
    crb_ideal,
    crb_joint,
    crb_kappa,
    crb_pa,
    crb_pn,
    crb_pn_floor,
    estimate_bussgang,
    generate_frame,
    overestimation_ratio,
    pa_degradation_db,
    pn_sinr_loss_db,
    rapp_gain,
    rate,
    run_mc_mse,
    run_scenario,
    scenario_columns,
    scenario_names,
    sinr_pa,
    sinr_with_pn,
    velocity_scale,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
