import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from landauer.constants import BOLTZMANN_K, PLANCK_H
from landauer.demon import (
    CSV_HEADER,
    DemonParams,
    closed_form_ratio,
    demon_feasibility,
    reports_to_csv,
    sweep_photon_energy,
)
from landauer.errors import NonPositiveInput

ARGON = 6.6335e-26


def test_constants_are_exact_si():
    scipy_constants = pytest.importorskip("scipy.constants")
    assert PLANCK_H == scipy_constants.h
    assert BOLTZMANN_K == scipy_constants.k


@pytest.mark.parametrize("mass", [1e-27, ARGON, 1e-21])
@pytest.mark.parametrize("T", [1.0, 300.0, 5000.0])
def test_soft_photon_ratio(mass, T):
    rep = demon_feasibility(DemonParams.from_fraction(mass, T, 0.01))
    assert rep.ratio == pytest.approx(math.sqrt(300), abs=1e-9)
    assert rep.ratio == pytest.approx(17.3205, abs=1e-4)
    assert not rep.sorting_feasible
    assert rep.low_energy_photon


@pytest.mark.parametrize("mass", [1e-27, ARGON, 1e-21])
def test_boundary_photon(mass):
    rep = demon_feasibility(DemonParams.from_fraction(mass, 300.0, 3.0))
    assert rep.ratio == 1.0
    assert rep.sorting_feasible
    assert not rep.low_energy_photon


def test_argon_door_width():
    rep = demon_feasibility(DemonParams.from_fraction(ARGON, 300.0, 0.01))
    with mpmath.workdps(40):
        m, T = mpmath.mpf("6.6335e-26"), mpmath.mpf(300)
        h, k = mpmath.mpf("6.62607015e-34"), mpmath.mpf("1.380649e-23")
        p = mpmath.sqrt(3 * m * k * T)
        door = h / (4 * mpmath.pi * p)
        spread = h / (4 * mpmath.pi * mpmath.sqrt(m * mpmath.mpf("0.01") * k * T))
    assert rep.p_rms == pytest.approx(float(p), rel=1e-13)
    assert rep.door_width == pytest.approx(float(door), rel=1e-13)
    assert rep.sigma_x_after == pytest.approx(float(spread), rel=1e-13)
    assert rep.door_width == pytest.approx(1.83658867764e-12, rel=1e-10)


@given(st.floats(min_value=1e-28, max_value=1e-20), st.floats(min_value=1e-2, max_value=1e5),
       st.floats(min_value=1e-4, max_value=1e4))
def test_report_invariants(mass, T, f):
    params = DemonParams.from_fraction(mass, T, f)
    rep = demon_feasibility(params)
    assert rep.ratio == rep.sigma_x_after / rep.door_width
    assert rep.sorting_feasible == (rep.ratio <= 1)
    assert rep.sigma_p == rep.p_rms
    assert rep.ratio == pytest.approx(closed_form_ratio(T, params.photon_energy), rel=1e-12)


@given(st.floats(min_value=1e-2, max_value=1e4), st.floats(min_value=1e-4, max_value=100))
def test_mass_independence(T, f):
    ratios = [demon_feasibility(DemonParams.from_fraction(m, T, f)).ratio for m in np.logspace(-27, -21, 13)]
    assert max(ratios) - min(ratios) <= 1e-9 * min(ratios)


@given(st.floats(min_value=1e-6, max_value=2.999999))
def test_infeasible_below_three(f):
    assert demon_feasibility(DemonParams.from_fraction(ARGON, 300.0, f)).ratio > 1


@given(st.floats(min_value=1e-6, max_value=0.0999999))
def test_soft_photon_regime_bound(f):
    rep = demon_feasibility(DemonParams.from_fraction(ARGON, 300.0, f))
    assert rep.low_energy_photon
    assert rep.ratio > math.sqrt(30)


def test_sweep_values():
    reports = sweep_photon_energy(DemonParams.from_fraction(ARGON, 300.0, 1.0), [0.01, 0.04, 0.25, 1.0])
    expected = [math.sqrt(300), math.sqrt(75), math.sqrt(12), math.sqrt(3)]
    for rep, e in zip(reports, expected):
        assert rep.ratio == pytest.approx(e, abs=1e-9)


def test_sweep_boundary_and_consistency():
    base = DemonParams.from_fraction(ARGON, 300.0, 1.0)
    assert sweep_photon_energy(base, [3.0])[0].ratio == 1.0
    assert sweep_photon_energy(base, [0.3])[0] == demon_feasibility(DemonParams.from_fraction(ARGON, 300.0, 0.3))


@given(st.lists(st.floats(min_value=1e-4, max_value=1e3), min_size=2, max_size=20, unique=True))
def test_sweep_monotone(fractions):
    fractions = sorted(fractions)
    if any(b / a < 1 + 1e-12 for a, b in zip(fractions, fractions[1:])):
        return
    ratios = [r.ratio for r in sweep_photon_energy(DemonParams.from_fraction(ARGON, 300.0, 1.0), fractions)]
    assert all(a > b for a, b in zip(ratios, ratios[1:]))


def test_sweep_errors():
    base = DemonParams.from_fraction(ARGON, 300.0, 1.0)
    with pytest.raises(NonPositiveInput):
        sweep_photon_energy(base, [])
    with pytest.raises(NonPositiveInput):
        sweep_photon_energy(base, [0.1, 0.0])


@pytest.mark.parametrize("field", ["mass", "temperature", "photon_energy", "h", "k_b"])
@pytest.mark.parametrize("bad", [0.0, -1.0, math.inf])
def test_params_must_be_positive(field, bad):
    kwargs = dict(mass=ARGON, temperature=300.0, photon_energy=1e-21)
    kwargs[field] = bad
    with pytest.raises(NonPositiveInput):
        DemonParams(**kwargs)


def test_csv_layout():
    reports = sweep_photon_energy(DemonParams.from_fraction(ARGON, 300.0, 1.0), [0.01, 3.0])
    lines = reports_to_csv(reports).splitlines()
    assert lines[0] == ",".join(CSV_HEADER) == "p_rms,sigma_p,door_width,sigma_x_after,ratio,feasible"
    assert lines[1].endswith(",false")
    assert lines[2].endswith("1.0,true")
