"""Members of the class built from a pair of Schwarz functions.

A starlike witness ``g`` is obtained from ``omega2`` through
``z g'/g = 1 + omega2``, i.e. ``g(z) = z exp(int_0^z omega2(t)/t dt)``.
A class member ``f`` then satisfies ``f'(z) = (g(z)/z) (1 + omega1(z))``.
All coefficients come from exact termwise series operations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import power_series as ps
from .grid import GridSpec, default_grid
from .power_series import DEFAULT_ORDER, TruncatedSeries
from .schwarz import SchwarzFunction, to_series


@dataclass(frozen=True, eq=False)
class StarlikeWitness:
    omega2: SchwarzFunction
    g: TruncatedSeries
    g_over_z: TruncatedSeries

    @property
    def order(self) -> int:
        return self.g.order

    @property
    def b2(self) -> complex:
        return self.g[2]

    @property
    def b3(self) -> complex:
        return self.g[3]


@dataclass(frozen=True, eq=False)
class ClassMember:
    f: TruncatedSeries
    f_prime: TruncatedSeries
    f_second: TruncatedSeries
    witness_g: StarlikeWitness
    omega1: SchwarzFunction

    @property
    def order(self) -> int:
        return self.f.order

    @property
    def a2(self) -> complex:
        return self.f[2]

    @property
    def a3(self) -> complex:
        return self.f[3]

    @property
    def omega2(self) -> SchwarzFunction:
        return self.witness_g.omega2

    def to_dict(self) -> dict:
        return {
            "omega1": self.omega1.to_dict(),
            "omega2": self.omega2.to_dict(),
            "a2": [self.a2.real, self.a2.imag],
            "a3": [self.a3.real, self.a3.imag],
            "order": self.order,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ClassMember":
        return member_from_witnesses(
            SchwarzFunction.from_dict(d["omega1"]),
            SchwarzFunction.from_dict(d["omega2"]),
            int(d["order"]),
        )


def build_starlike(omega2: SchwarzFunction, order: int = DEFAULT_ORDER) -> StarlikeWitness:
    w = to_series(omega2, order)
    g_over_z = ps.exp_series(ps.antiderivative(ps.divide_by_z(w)))
    return StarlikeWitness(omega2, ps.multiply_by_z(g_over_z), g_over_z)


def build_member(gw: StarlikeWitness, omega1: SchwarzFunction) -> ClassMember:
    w1 = to_series(omega1, gw.order)
    f_prime = ps.mul(gw.g_over_z, 1 + w1)
    return ClassMember(
        f=ps.antiderivative(f_prime),
        f_prime=f_prime,
        f_second=ps.derivative(f_prime),
        witness_g=gw,
        omega1=omega1,
    )


def member_from_witnesses(omega1: SchwarzFunction, omega2: SchwarzFunction,
                          order: int = DEFAULT_ORDER) -> ClassMember:
    return build_member(build_starlike(omega2, order), omega1)


def a2_a3_from_witness(c1: complex, c2: complex, d1: complex, d2: complex) -> tuple[complex, complex]:
    """Second and third coefficients of ``f`` from the leading Schwarz coefficients.

    ``c1, c2`` belong to ``omega1`` and ``d1, d2`` to ``omega2``.
    """
    a2 = c1 / 2 + d1 / 2
    a3 = c2 / 3 + d2 / 6 + d1 * d1 / 6 + c1 * d1 / 3
    return a2, a3


def fekete_value(a2: complex, a3: complex, lam: float) -> float:
    return abs(a3 - lam * a2 * a2)


def fekete_functional(member: ClassMember, lam: float) -> float:
    """``|a3 - lam a2^2|``."""
    return fekete_value(member.a2, member.a3, lam)


def close_to_convex_ratio(member: ClassMember) -> TruncatedSeries:
    """Series of ``z f'(z) / g(z)``."""
    return ps.div(member.f_prime, member.witness_g.g_over_z)


def membership_margin(member: ClassMember, grid: GridSpec | None = None) -> float:
    """Max of ``|z f'/g - 1|`` over the grid; values below 1 support membership."""
    grid = grid or default_grid()
    q = close_to_convex_ratio(member) - 1
    vals = ps.eval_on_circles(q, grid.radii, grid.n_angles)
    return float(np.max(np.abs(vals)))


def starlike_margin(gw: StarlikeWitness, grid: GridSpec | None = None) -> float:
    """Max of ``|z g'/g - 1|`` over the grid."""
    grid = grid or default_grid()
    h = ps.div(ps.multiply_by_z(ps.derivative(gw.g_over_z)), gw.g_over_z)
    vals = ps.eval_on_circles(h, grid.radii, grid.n_angles)
    return float(np.max(np.abs(vals)))


def required_order(omega1: SchwarzFunction, omega2: SchwarzFunction, r_max: float,
                   base: int = DEFAULT_ORDER, tol: float = 1e-14, cap: int = 4096) -> int:
    """Truncation order at which the witnesses' series are negligible on ``|z| <= r_max``.

    Blaschke factors decay like ``(|a| r)^k`` times a polynomial in ``k`` of
    degree below the number of zeros; the exponential factor decays faster.
    """
    rho = max(omega1.max_zero_modulus, omega2.max_zero_modulus) * r_max
    if rho == 0:
        return base
    m = len(omega1.zeros) + len(omega2.zeros)
    n = base
    while n < cap and float(n) ** (m - 1) * rho**n > tol:
        n *= 2
    return min(max(n, base), cap)
