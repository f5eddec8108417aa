import math
from pathlib import Path

import pytest

import risradar

CONFIGS = Path(__file__).resolve().parents[2] / "configs"


def test_thresholds_round_trip():
    for kind in ("single", "dual"):
        for pfa in (1e-2, 1e-6):
            gamma = risradar.threshold_from_pfa(kind, pfa)
            assert risradar.pfa_from_threshold(kind, gamma) == pytest.approx(pfa, rel=1e-12)
    assert risradar.threshold_from_pfa("single", 1e-6) == pytest.approx(-math.log(1e-6))


def test_closed_forms():
    gamma = -math.log(1e-6)
    assert risradar.pd_single("exponential", 20.0, gamma) == pytest.approx(0.5179474679, rel=1e-9)
    assert risradar.marcum_q(1.0, 1.0) == pytest.approx(0.7328798038, abs=1e-10)
    assert risradar.pd_dual_exponential(3.0, 3.0, 10.0) == pytest.approx((1 + 10 / 4) * math.exp(-10 / 4))
    assert risradar.optimal_split_closely("c", 3.0) == pytest.approx(0.25)


def test_fill_distance():
    wavelength = 299792458.0 / 3e9
    assert risradar.fill_distance(1.0, wavelength, 2.0) == pytest.approx(22.9, rel=0.02)


def test_closely_table():
    table = risradar.closely_table((CONFIGS / "closely.cfg").read_text())
    assert table["ris_side_m"][0] == "2"
    assert [c != "" for c in table["case_c_db"]] == [True] * 3 + [False] * 4
    gains = [float(v) for v in table["case_a_db"]]
    assert gains == sorted(gains)


def test_widely_curves_and_report():
    text = (CONFIGS / "widely.cfg").read_text()
    curves = risradar.widely_curves(text)
    assert len(curves["snr0_db"]) == 82
    assert "regime: widely" in risradar.scenario_report(text)


def test_validate_small_run():
    ok, table = risradar.validate("[montecarlo]\ntrials = 100000\n")
    assert ok
    assert set(table["status"]) == {"pass"}


def test_errors():
    with pytest.raises(ValueError):
        risradar.threshold_from_pfa("single", 2.0)
    with pytest.raises(ValueError):
        risradar.closely_table("[radar]\nnoise_power = -1\n")
    with pytest.raises(NotImplementedError):
        risradar.widely_curves("[target]\nposition = 600, 0, 0\nsize = 2\nfluctuation = gamma\n[ris]\ndirection = 0, 1, 0\n")
