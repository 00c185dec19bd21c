import math

import numpy as np
import pytest

import josephson_discord as jd


def test_bell_state():
    psi = np.array([1, 0, 0, 1], dtype=complex) / math.sqrt(2)
    rho = np.outer(psi, psi.conj())
    r = jd.quantum_discord(rho)
    assert r["discord"] == pytest.approx(1.0, abs=1e-12)
    assert r["eof"] == pytest.approx(1.0, abs=1e-12)
    assert jd.mutual_information(rho) == pytest.approx(2.0)


def test_thermal_state_matches_closed_form():
    eff = jd.EffectiveParams.symmetric(1.0, 2.0)
    gibbs = jd.gibbs_state(jd.hamiltonian(eff), 0.5)
    closed = jd.closed_form_thermal(eff, 0.5)
    assert np.max(np.abs(gibbs - closed)) < 1e-10
    assert np.trace(gibbs).real == pytest.approx(1.0)
    assert jd.mutual_information(gibbs) == pytest.approx(0.82044704430709788, abs=1e-11)


def test_analytic_ground_state_discord():
    assert jd.ground_state_discord_analytic(1.0, 50.0) == pytest.approx(0.9988, abs=5e-4)
    rho = jd.ground_state(jd.EffectiveParams.symmetric(1.0, 5.0))
    assert jd.quantum_discord(rho)["discord"] == pytest.approx(
        jd.ground_state_discord_analytic(1.0, 5.0), abs=5e-5)


def test_device_mapping():
    dev = jd.DeviceParams()
    eff = jd.effective_params(dev)
    assert eff.j12 == pytest.approx(-0.0015296532211053271, rel=1e-12)
    assert eff.eps1 == pytest.approx(0.021099123688341163, rel=1e-12)
    dev.phi_x1 = 0.5
    assert jd.interbit_coupling(dev) == 0.0
    rho = jd.thermal_state(dev, 0.0)
    assert jd.quantum_discord(rho)["discord"] == pytest.approx(0.0, abs=1e-9)


def test_sweep_and_figure():
    axis, values = jd.sweep(jd.EffectiveParams.symmetric(1.0, 2.0), "temperature", 0.0, 2.0,
                            steps=5, measures=["discord", "concurrence"])
    assert axis.shape == (5, 1)
    assert values.shape == (5, 2)
    assert np.all(np.diff(values[:, 0]) <= 1e-6)

    series = jd.figure("fig4", steps=21)
    assert [s[0] for s in series] == ["T=0K", "T=0.001K", "T=0.005K"]
    _, _, v = series[0]
    assert np.allclose(v[:11], v[10:], atol=1e-10)


def test_critical_points():
    with pytest.raises(jd.BracketError):
        jd.esd_temperature(jd.EffectiveParams.symmetric(0.02, 0.0), 1.0)
    cp = jd.esd_temperature(jd.EffectiveParams.symmetric(0.02, -0.02), 1.0)
    assert cp["location"] > 0
    r = jd.optimal_ratio(0.0)
    assert r["boundary"] and r["location"] == 50.0


def test_errors():
    with pytest.raises(jd.NotAState):
        jd.quantum_discord(np.eye(4, dtype=complex))
    with pytest.raises(jd.Error):
        jd.quantum_discord(np.eye(3, dtype=complex) / 3)
    with pytest.raises(jd.SpecError):
        jd.figure("fig9")
