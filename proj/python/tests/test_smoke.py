# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2026 The isac-hwi Authors

import math

import numpy as np
import pytest

import isac_hwi as ih


def test_frame_and_pa_shapes():
    cfg = ih.SystemConfig()
    x = ih.generate_frame(cfg, 1)
    assert x.shape == (256, 14)
    assert x.dtype == np.complex128
    assert abs(np.mean(np.abs(x) ** 2) - 1.0) < 0.05
    z = ih.apply_pa(x, ih.RappParams.from_ibo(5.0))
    assert z.shape == x.shape
    assert np.all(np.isfinite(z))


def test_rapp_saturation_point():
    pa = ih.RappParams.from_ibo(3.0, 3.0, 1.0)
    a = pa.sat_amplitude
    assert abs(ih.rapp_gain(a, pa)) == pytest.approx(a * 2 ** (-1 / 6), rel=1e-14)


def test_pa_degradation_matches_bounds():
    cfg = ih.SystemConfig()
    x = ih.generate_frame(cfg, 1)
    z = ih.apply_pa(x, ih.RappParams.from_ibo(5.0))
    d20, _ = ih.pa_degradation_db(x, z)
    ratio = ih.crb_pa(cfg, z).crb_delay / ih.crb_ideal(cfg, x).crb_delay
    assert d20 == pytest.approx(10 * math.log10(ratio), rel=1e-12)
    assert 0.3 < d20 < 0.7


def test_overestimation_and_floor():
    cfg = ih.SystemConfig()
    cfg.noise_var = 1e-3
    x = ih.generate_frame(cfg, 1)
    pa = ih.RappParams.from_ibo(3.0)
    z = ih.apply_pa(x, pa)
    b = ih.estimate_bussgang(pa, cfg, 200000, 1)
    o = ih.overestimation_ratio(ih.crb_kappa(cfg, b, x), ih.crb_pa(cfg, z))
    assert o.total_db == pytest.approx(o.moment_factor_db + o.noise_factor_db)
    assert 10.5 < o.total_db < 13.0
    floor = ih.crb_pn_floor(cfg, ih.PnParams(100.0, cfg.symbol_duration()))
    assert floor.velocity_std == pytest.approx(1.362, rel=2e-3)


def test_comm_helpers():
    c = ih.CommConfig()
    assert ih.pn_sinr_loss_db(c) == pytest.approx(10 * math.log10(33 / 32))
    assert ih.rate(100.0) == pytest.approx(math.log2(101))
    assert ih.sinr_with_pn(c, 50.0, 0.0) == 50.0


def test_errors_map_to_python_exceptions():
    cfg = ih.SystemConfig()
    with pytest.raises(ih.DegenerateError):
        ih.crb_pn_floor(cfg, ih.PnParams(0.0, cfg.symbol_duration()))
    with pytest.raises(ValueError):
        ih.run_scenario("no-such-scenario")
    with pytest.raises(ih.ConfigError):
        ih.run_scenario("pn-floor", {"bogus": "1"})


def test_scenario_roundtrip(tmp_path):
    assert "pn-floor" in ih.scenario_names()
    out = tmp_path / "floor.csv"
    t = ih.run_scenario("pn-floor", {"beta_values_hz": "[100]"}, seed=3, out=str(out))
    assert t["header"] == ih.scenario_columns("pn-floor")
    assert out.read_text() == t["csv"]
    assert max(t["columns"]["floor_mps"]) == pytest.approx(1.362, rel=2e-3)


def test_monte_carlo_small_run():
    cfg = ih.SystemConfig()
    r = ih.run_mc_mse(cfg, ih.RappParams.from_ibo(5.0), n_trials=20, seed=2)
    assert r.n_trials == 20
    assert abs(r.crb_ratio_delay_db) < 3.0
    again = ih.run_mc_mse(cfg, ih.RappParams.from_ibo(5.0), n_trials=20, seed=2)
    assert again.mse_delay == r.mse_delay
