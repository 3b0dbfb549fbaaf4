"""Schwarz functions built from monomials and finite Blaschke products.

Two shapes are supported: ``z**k`` and
``z * e^{i alpha} * prod_j (z - a_j) / (1 - conj(a_j) z)`` with every zero
strictly inside the disk. Both fix the origin and map the disk into itself,
so membership in the Schwarz class holds by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .power_series import DEFAULT_ORDER, PointOutsideDisk, TruncatedSeries, div, mul

SAMPLE_ZERO_RADIUS = 0.95
MAX_SAMPLE_POWER = 4


@dataclass(frozen=True)
class SchwarzFunction:
    """A Schwarz function ``omega`` with ``omega(0) = 0`` and ``|omega| < 1``.

    ``kind`` is ``"monomial"`` (uses ``k``) or ``"blaschke"`` (uses ``alpha``
    and ``zeros``).
    """

    kind: str
    k: int = 1
    alpha: float = 0.0
    zeros: tuple[complex, ...] = ()

    def __post_init__(self):
        if self.kind == "monomial":
            if int(self.k) != self.k or self.k < 1:
                raise ValueError("monomial power must be an integer >= 1")
        elif self.kind == "blaschke":
            zeros = tuple(complex(a) for a in self.zeros)
            if any(abs(a) >= 1 for a in zeros):
                raise ValueError("Blaschke zeros must lie in the open unit disk")
            object.__setattr__(self, "zeros", zeros)
            object.__setattr__(self, "alpha", float(self.alpha))
        else:
            raise ValueError(f"unknown Schwarz function kind {self.kind!r}")

    @classmethod
    def monomial(cls, k: int = 1) -> "SchwarzFunction":
        return cls("monomial", k=int(k))

    @classmethod
    def blaschke(cls, alpha: float = 0.0, zeros=()) -> "SchwarzFunction":
        return cls("blaschke", alpha=alpha, zeros=tuple(zeros))

    @property
    def max_zero_modulus(self) -> float:
        return max((abs(a) for a in self.zeros), default=0.0)

    def __call__(self, z):
        return evaluate(self, z)

    def to_dict(self) -> dict:
        if self.kind == "monomial":
            return {"kind": "monomial", "k": self.k}
        return {
            "kind": "blaschke",
            "alpha": self.alpha,
            "zeros": [[a.real, a.imag] for a in self.zeros],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SchwarzFunction":
        if d["kind"] == "monomial":
            return cls.monomial(d["k"])
        return cls.blaschke(d["alpha"], [complex(re, im) for re, im in d["zeros"]])


def to_series(w: SchwarzFunction, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Taylor expansion of ``w`` about 0, truncated at ``order``."""
    if w.kind == "monomial":
        c = np.zeros(order + 1, dtype=complex)
        if w.k <= order:
            c[w.k] = 1.0
        return TruncatedSeries(c)
    out = TruncatedSeries.from_coeffs([0, np.exp(1j * w.alpha)], order)
    for a in w.zeros:
        num = TruncatedSeries.from_coeffs([-a, 1], order)
        den = TruncatedSeries.from_coeffs([1, -np.conj(a)], order)
        out = mul(out, div(num, den))
    return out


def _check(z) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) >= 1):
        raise PointOutsideDisk("Schwarz functions are evaluated inside the open unit disk")
    return z


def _unwrap(v):
    return complex(v) if np.ndim(v) == 0 else v


def evaluate(w: SchwarzFunction, z):
    """Closed-form value ``w(z)``."""
    z = _check(z)
    if w.kind == "monomial":
        return _unwrap(z**w.k)
    out = np.exp(1j * w.alpha) * z
    for a in w.zeros:
        out = out * (z - a) / (1 - np.conj(a) * z)
    return _unwrap(out)


def evaluate_derivative(w: SchwarzFunction, z):
    """Closed-form ``w'(z)`` by the product rule."""
    z = _check(z)
    if w.kind == "monomial":
        return _unwrap(w.k * z ** (w.k - 1))
    factors = [z] + [(z - a) / (1 - np.conj(a) * z) for a in w.zeros]
    slopes = [np.ones_like(z)] + [(1 - abs(a) ** 2) / (1 - np.conj(a) * z) ** 2 for a in w.zeros]
    total = np.zeros_like(z)
    for i, slope in enumerate(slopes):
        term = slope
        for j, fac in enumerate(factors):
            if j != i:
                term = term * fac
        total = total + term
    return _unwrap(np.exp(1j * w.alpha) * total)


def sample_random(rng_seed, max_zeros: int = 3) -> SchwarzFunction:
    """Draw a Schwarz function deterministically from ``rng_seed``.

    The kind is chosen with equal odds. Monomials take a power in
    ``1..MAX_SAMPLE_POWER``; Blaschke witnesses take ``m`` uniform in
    ``0..max_zeros`` zeros, area-uniform in the disk of radius 0.95, and a
    rotation uniform in ``[0, 2 pi)``.
    """
    if max_zeros < 0:
        raise ValueError("max_zeros must be non-negative")
    rng = np.random.default_rng(rng_seed)
    if rng.integers(2) == 0:
        return SchwarzFunction.monomial(int(rng.integers(1, MAX_SAMPLE_POWER + 1)))
    m = int(rng.integers(0, max_zeros + 1))
    radius = SAMPLE_ZERO_RADIUS * np.sqrt(rng.uniform(size=m))
    phase = rng.uniform(0, 2 * math.pi, size=m)
    alpha = float(rng.uniform(0, 2 * math.pi))
    return SchwarzFunction.blaschke(alpha, tuple(radius * np.exp(1j * phase)))
