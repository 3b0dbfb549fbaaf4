"""Closed-form sharp bounds and the bidisk maximization lemma.

``omega_closed_form`` evaluates

    max_{|u|, |v| <= 1}  |A|(1 - |u|^2) + |B|(1 - |v|^2) + |K u^2 + L v^2 + 2 M u v|

for the configurations where a closed form is known, and raises
:class:`UnsupportedCase` elsewhere so callers can fall back on the numerical
search in :mod:`univalent_bounds.verify`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

THIRD = Fraction(1, 3)
SIXTH = Fraction(1, 6)


class UnsupportedCase(Exception):
    """No closed form is available for this ``(A, B, K, L, M)``."""


@dataclass(frozen=True)
class OmegaProblem:
    A: complex
    B: complex
    K: float
    L: float
    M: float

    @property
    def D(self) -> float:
        return (abs(self.K) - abs(self.A)) * (abs(self.L) - abs(self.B)) - self.M**2

    @property
    def KL(self) -> float:
        return self.K * self.L

    def _root(self) -> float | None:
        # sqrt(1 - M^2/KL) only enters when KL < 0, where it is >= 1
        if self.KL >= 0:
            return None
        return math.sqrt(1 - self.M**2 / self.KL)

    @property
    def A1(self) -> bool | None:
        s = self._root()
        if s is None:
            return None
        return abs(self.A) >= max(abs(self.K) * s, abs(self.M) - abs(self.K))

    @property
    def B1(self) -> bool | None:
        s = self._root()
        if s is None:
            return None
        return abs(self.B) >= max(abs(self.L) * s, abs(self.M) - abs(self.L))

    @property
    def B2(self) -> bool | None:
        s = self._root()
        if s is None:
            return None
        return abs(self.L) + abs(self.M) <= abs(self.B) < abs(self.L) * s

    def objective(self, u: complex, v: complex) -> float:
        return (abs(self.A) * (1 - abs(u) ** 2) + abs(self.B) * (1 - abs(v) ** 2)
                + abs(self.K * u * u + self.L * v * v + 2 * self.M * u * v))

    def to_dict(self) -> dict:
        return {
            "A": [complex(self.A).real, complex(self.A).imag],
            "B": [complex(self.B).real, complex(self.B).imag],
            "K": float(self.K), "L": float(self.L), "M": float(self.M),
        }


@dataclass(frozen=True)
class FeketeCoefficients:
    """The ``(A, B, K, L, M)`` with ``a3 - lam a2^2 = A c2 + B d2 + K c1^2 + L d1^2 + 2 M c1 d1``."""

    lam: float
    A: float
    B: float
    K: float
    L: float
    M: float

    def problem(self) -> OmegaProblem:
        return OmegaProblem(complex(self.A), complex(self.B), float(self.K), float(self.L), float(self.M))


def omega_coefficients(lam) -> FeketeCoefficients:
    """Exact when ``lam`` is a :class:`~fractions.Fraction` or int."""
    m = (2 - 3 * lam) / Fraction(12) if isinstance(lam, (int, Fraction)) else (2 - 3 * lam) / 12
    k = -lam / Fraction(4) if isinstance(lam, (int, Fraction)) else -lam / 4
    return FeketeCoefficients(lam, THIRD, SIXTH, k, m, m)


def omega_closed_form(p: OmegaProblem) -> float:
    """Closed-form maximum of the bidisk objective; raises :class:`UnsupportedCase`."""
    a, b = abs(p.A), abs(p.B)
    k, l, m = abs(p.K), abs(p.L), abs(p.M)
    if p.KL >= 0:
        d = p.D
        if a + b >= k + l and d >= 0:
            return a + b
        if a > m + k and d < 0:
            return a + l + m * m / (a - k)
        if b > m + l and d < 0:
            return b + k + m * m / (b - l)
        return k + 2 * m + l
    if p.A1 and p.B1:
        return a + b
    if p.A1 and not p.B1 and not p.B2:
        r = l - b + m * m / (a + k)
        return a + b + max(0.0, r)
    raise UnsupportedCase(f"KL < 0 configuration outside the transcribed cases: {p}")


BRANCHES = ("(-inf, -1/3]", "(-1/3, 1/6]", "(1/6, 1]", "(1, inf)")


BREAKPOINT_TOL = 1e-12


def fekete_szego_branch(lam) -> str:
    """Label of the branch of :func:`fekete_szego_bound` active at ``lam``.

    Float input within 1e-12 of a breakpoint is assigned to the left branch,
    so ``-1/3`` written as a float behaves like the exact value.
    """
    tol = 0 if isinstance(lam, (int, Fraction)) else BREAKPOINT_TOL
    if lam <= -THIRD + tol:
        return BRANCHES[0]
    if lam <= SIXTH + tol:
        return BRANCHES[1]
    if lam <= 1 + tol:
        return BRANCHES[2]
    return BRANCHES[3]


def fekete_szego_bound(lam):
    """Sharp upper bound of ``|a3 - lam a2^2|`` over the class, for real ``lam``.

    Exact for ``Fraction`` input. Adjacent branches agree at the breakpoints
    ``-1/3``, ``1/6`` and ``1``.
    """
    half = Fraction(1, 2) if isinstance(lam, (int, Fraction)) else 0.5
    branch = fekete_szego_branch(lam)
    if branch == BRANCHES[0]:
        return half - lam
    if branch == BRANCHES[1]:
        return (14 - 3 * lam) / (6 * (4 + 3 * lam))
    if branch == BRANCHES[2]:
        return half
    return lam - half


def _check_radius(r: float) -> None:
    if not 0 <= r < 1:
        raise ValueError(f"radius must lie in [0, 1), got {r}")


def growth_bounds(r: float) -> tuple[float, float]:
    """``(r e^{-r}, r e^{r})``: sharp bounds for ``|f(z)|`` on ``|z| = r``."""
    _check_radius(r)
    return r * math.exp(-r), r * math.exp(r)


def distortion_bounds(r: float) -> tuple[float, float]:
    """``(e^{-r}(1 - r), e^{r}(1 + r))``: sharp bounds for ``|f'(z)|`` on ``|z| = r``."""
    _check_radius(r)
    return math.exp(-r) * (1 - r), math.exp(r) * (1 + r)


def radius_of_convexity_constant() -> float:
    """Smaller root of ``1 - 3r + r^2``."""
    return (3 - math.sqrt(5)) / 2


def pre_schwarzian_bound() -> float:
    """Sharp bound on ``sup (1 - |z|^2) |f''/f'|``; the max of ``2 + r - r^2``."""
    return 9 / 4
