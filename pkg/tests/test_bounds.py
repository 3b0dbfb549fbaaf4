import math
from fractions import Fraction as F

import numpy as np
import pytest

from univalent_bounds import bounds
from univalent_bounds.bounds import (
    OmegaProblem,
    UnsupportedCase,
    distortion_bounds,
    fekete_szego_bound,
    growth_bounds,
    omega_closed_form,
    omega_coefficients,
)
from univalent_bounds.verify import omega_value


@pytest.mark.parametrize("lam, expected", [
    (F(0), F(7, 12)),
    (F(-1, 3), F(5, 6)),
    (F(2), F(3, 2)),
    (F(1, 6), F(1, 2)),
    (F(5), F(9, 2)),
    (F(1, 8), (14 - F(3, 8)) / (6 * (4 + F(3, 8)))),
])
def test_fekete_szego_exact(lam, expected):
    assert fekete_szego_bound(lam) == expected
    assert fekete_szego_bound(float(lam)) == pytest.approx(float(expected), abs=1e-15)


@pytest.mark.parametrize("lam", [F(-1, 3), F(1, 6), F(1)])
def test_branches_agree_at_breakpoints(lam):
    values = {
        "low": F(1, 2) - lam,
        "middle": (14 - 3 * lam) / (6 * (4 + 3 * lam)),
        "flat": F(1, 2),
        "high": lam - F(1, 2),
    }
    lo, hi = {F(-1, 3): ("low", "middle"), F(1, 6): ("middle", "flat"), F(1): ("flat", "high")}[lam]
    assert values[lo] == values[hi] == fekete_szego_bound(lam)


def test_fekete_szego_is_continuous_and_at_least_half():
    lam = np.linspace(-3, 4, 7001)
    vals = np.array([fekete_szego_bound(x) for x in lam])
    assert np.all(vals >= 0.5 - 1e-15)
    assert np.max(np.abs(np.diff(vals))) < 2e-3


def test_branch_labels():
    assert bounds.fekete_szego_branch(0) == "(-1/3, 1/6]"
    assert bounds.fekete_szego_branch(-1 / 3) == "(-inf, -1/3]"
    assert bounds.fekete_szego_branch(1) == "(1/6, 1]"
    assert bounds.fekete_szego_branch(1.0001) == "(1, inf)"


@pytest.mark.parametrize("lam, expected", [
    (F(0), (F(1, 3), F(1, 6), 0, F(1, 6), F(1, 6))),
    (F(2, 3), (F(1, 3), F(1, 6), F(-1, 6), 0, 0)),
    (F(1), (F(1, 3), F(1, 6), F(-1, 4), F(-1, 12), F(-1, 12))),
])
def test_omega_coefficients(lam, expected):
    c = omega_coefficients(lam)
    assert (c.A, c.B, c.K, c.L, c.M) == expected


def test_omega_problem_derived_quantities():
    p = omega_coefficients(F(2)).problem()
    assert p.KL == pytest.approx(1 / 6)
    assert p.D == pytest.approx(-1 / 12, abs=1e-14)
    assert p.A1 is None
    q = omega_coefficients(F(1, 8)).problem()
    assert q.KL < 0
    assert q.A1 and not q.B1 and not q.B2


def test_omega_closed_form_examples():
    assert omega_closed_form(OmegaProblem(1, 1, 0, 0, 0)) == 2
    assert omega_closed_form(omega_coefficients(F(0)).problem()) == pytest.approx(7 / 12, abs=1e-15)
    assert omega_closed_form(omega_coefficients(F(2)).problem()) == pytest.approx(1.5, abs=1e-15)
    lam = 1 / 8
    r = (1 - 6 * lam) / (12 + 9 * lam)
    assert r == pytest.approx(0.25 / 13.125)
    value = omega_closed_form(omega_coefficients(F(1, 8)).problem())
    assert value == pytest.approx(0.5 + r, abs=1e-15)
    assert value == pytest.approx(0.519048, abs=1e-6)


def test_unsupported_configuration():
    # KL < 0 with A1 failing
    p = OmegaProblem(0.01, 0.5, 0.8, -0.7, 0.3)
    assert not p.A1
    with pytest.raises(UnsupportedCase):
        omega_closed_form(p)


def test_lemma_matches_theorem_on_lambda_grid():
    for lam in np.arange(-2, 3.0001, 0.125):
        value, _ = omega_value(omega_coefficients(float(lam)).problem())
        assert value == pytest.approx(float(fekete_szego_bound(float(lam))), abs=1e-9)


def test_growth_and_distortion_values():
    assert growth_bounds(0) == (0, 0)
    assert distortion_bounds(0) == (1, 1)
    lo, hi = growth_bounds(0.5)
    assert lo == pytest.approx(0.5 * math.exp(-0.5), abs=1e-15) and lo == pytest.approx(0.303265, abs=1e-6)
    assert hi == pytest.approx(0.824361, abs=1e-6)
    lo, hi = distortion_bounds(0.5)
    assert lo == pytest.approx(0.303265, abs=1e-6) and hi == pytest.approx(2.473081, abs=1e-6)
    with pytest.raises(ValueError):
        growth_bounds(1.0)
    with pytest.raises(ValueError):
        distortion_bounds(-0.1)


def test_bounds_monotone():
    r = np.linspace(0, 0.999, 500)
    g = np.array([growth_bounds(x) for x in r])
    d = np.array([distortion_bounds(x) for x in r])
    assert np.all(np.diff(g[:, 0]) > 0) and np.all(np.diff(g[:, 1]) > 0)
    assert np.all(np.diff(d[:, 1]) > 0)


def test_radius_constant():
    rho = bounds.radius_of_convexity_constant()
    assert rho == pytest.approx(0.3819660112501051, abs=1e-15)
    assert abs(1 - 3 * rho + rho**2) < 1e-15
    assert 1 / 3 < rho < 2 / 5


def test_pre_schwarzian_constant():
    assert bounds.pre_schwarzian_bound() == 2.25
    r = np.linspace(0, 1, 100001)
    assert np.max(2 + r - r**2) == pytest.approx(2.25, abs=1e-12)
    assert r[np.argmax(2 + r - r**2)] == pytest.approx(0.5)
