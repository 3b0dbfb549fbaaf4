import json
import math

import numpy as np
import pytest

from univalent_bounds import power_series as ps
from univalent_bounds.grid import GridSpec
from univalent_bounds.schwarz import (
    SchwarzFunction,
    evaluate,
    evaluate_derivative,
    sample_random,
    to_series,
)

POLAR = GridSpec(tuple(np.linspace(0.01, 0.99, 64)), 64).points()
WITNESSES = [
    SchwarzFunction.monomial(1),
    SchwarzFunction.monomial(3),
    SchwarzFunction.blaschke(0.0, ()),
    SchwarzFunction.blaschke(1.2, (0.5,)),
    SchwarzFunction.blaschke(4.0, (0.3 - 0.6j, -0.9, 0.2j)),
] + [sample_random(s, 3) for s in range(20)]


def test_monomial_series():
    assert to_series(SchwarzFunction.monomial(1), 8).allclose(ps.TruncatedSeries.identity(8))
    assert np.allclose(to_series(SchwarzFunction.monomial(2), 8).coeffs[:4], [0, 0, 1, 0])


def test_blaschke_series_against_product_oracle():
    v = 0.5
    w = to_series(SchwarzFunction.blaschke(0.0, (-v,)), 32)
    back = ps.mul(w, ps.TruncatedSeries.from_coeffs([1, v], 32))
    assert back.allclose(ps.TruncatedSeries.from_coeffs([0, v, 1], 32), atol=1e-15)
    assert np.allclose(w.coeffs[:4], [0, 0.5, 0.75, -0.375], atol=1e-15)


def test_closed_form_values():
    assert evaluate(SchwarzFunction.monomial(1), 0.3) == pytest.approx(0.3)
    assert evaluate(SchwarzFunction.blaschke(0.0, (0.5,)), 0.5) == 0


def test_outside_disk():
    with pytest.raises(ps.PointOutsideDisk):
        evaluate(SchwarzFunction.monomial(1), 1.0)


def test_rejects_boundary_zero():
    with pytest.raises(ValueError):
        SchwarzFunction.blaschke(0.0, (1.0,))
    with pytest.raises(ValueError):
        SchwarzFunction.monomial(0)


@pytest.mark.parametrize("w", WITNESSES, ids=str)
def test_schwarz_lemma_on_grid(w):
    assert evaluate(w, 0) == 0
    assert np.all(np.abs(evaluate(w, POLAR)) <= np.abs(POLAR) + 1e-12)


@pytest.mark.parametrize("w", WITNESSES, ids=str)
def test_schwarz_pick_on_grid(w):
    val = evaluate(w, POLAR)
    slope = evaluate_derivative(w, POLAR)
    assert np.all(np.abs(slope) <= (1 - np.abs(val) ** 2) / (1 - np.abs(POLAR) ** 2) + 1e-9)


@pytest.mark.parametrize("w", WITNESSES, ids=str)
def test_derivative_matches_finite_difference(w):
    z, h = 0.31 - 0.42j, 1e-6
    fd = (evaluate(w, z + h) - evaluate(w, z - h)) / (2 * h)
    assert abs(fd - evaluate_derivative(w, z)) < 1e-8


@pytest.mark.parametrize("w", WITNESSES, ids=str)
def test_series_agrees_with_closed_form(w):
    s = to_series(w, 64)
    for r in (0.1, 0.4, 0.7):
        z = r * np.exp(1j * np.linspace(0, 2 * math.pi, 17))
        err = np.max(np.abs(evaluate(w, z) - ps.eval_at(s, z)))
        assert err <= ps.tail_bound(s, r) + 1e-13


def test_sampling_is_deterministic():
    assert sample_random(42, 3) == sample_random(42, 3)
    assert sample_random(42, 3) != sample_random(43, 3) or sample_random(44, 3) != sample_random(42, 3)


def test_sampling_ranges():
    kinds = set()
    for seed in range(200):
        w = sample_random(seed, 3)
        kinds.add(w.kind)
        assert len(w.zeros) <= 3
        assert all(abs(a) <= 0.95 for a in w.zeros)
        if w.kind == "blaschke":
            assert 0 <= w.alpha < 2 * math.pi
    assert kinds == {"monomial", "blaschke"}


def test_no_zeros_is_rotation():
    for seed in range(50):
        w = sample_random(seed, 0)
        if w.kind == "blaschke":
            assert w.zeros == ()
            assert evaluate(w, 0.5) == pytest.approx(0.5 * np.exp(1j * w.alpha))
            break
    else:
        pytest.fail("no Blaschke sample drawn")


@pytest.mark.parametrize("w", WITNESSES[:5], ids=str)
def test_json_round_trip(w):
    d = json.loads(json.dumps(w.to_dict()))
    assert SchwarzFunction.from_dict(d) == w
