"""Truncated complex Taylor series on the unit disk.

A :class:`TruncatedSeries` holds the coefficients ``c_0 .. c_N`` of an
analytic function about the origin. Every operation returns a new series
truncated at the same order ``N``; coefficients below the truncation index
are exact up to floating point rounding, so low-order coefficients such as
``a_2`` and ``a_3`` never pick up approximation error.

Products use the Cauchy product, quotients and exponentials use the usual
coefficient recurrences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

DEFAULT_ORDER = 64
DEFAULT_R_MAX = 0.995
ZERO_TOL = 1e-12


class SeriesError(ValueError):
    """Base class for series arithmetic errors."""


class OrderMismatch(SeriesError):
    pass


class ZeroConstantTerm(SeriesError):
    pass


class NonzeroConstantTerm(SeriesError):
    pass


class PointOutsideDisk(SeriesError):
    pass


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Coefficients ``c_0 .. c_N`` of a power series, truncated at order ``N``."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex).ravel()
        if c.size < 2:
            raise SeriesError("a truncated series needs order >= 1")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[complex], order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        """Pad (with zeros) or truncate ``coeffs`` to ``order + 1`` entries."""
        c = np.zeros(order + 1, dtype=complex)
        given = np.asarray(list(coeffs), dtype=complex)[: order + 1]
        c[: given.size] = given
        return cls(c)

    @classmethod
    def constant(cls, value: complex, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls.from_coeffs([value], order)

    @classmethod
    def identity(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        """The series of ``z``."""
        return cls.from_coeffs([0, 1], order)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __getitem__(self, k: int) -> complex:
        return complex(self.coeffs[k])

    def __len__(self) -> int:
        return self.coeffs.size

    def __repr__(self) -> str:
        head = ", ".join(f"{c:.6g}" for c in self.coeffs[:6])
        return f"TruncatedSeries(order={self.order}, [{head}{', ...' if self.order > 5 else ''}])"

    def allclose(self, other: "TruncatedSeries", atol: float = 1e-12) -> bool:
        _check_orders(self, other)
        return bool(np.max(np.abs(self.coeffs - other.coeffs)) <= atol)

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, float, complex, np.number)):
            return TruncatedSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else add(other, -self)

    def __mul__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return TruncatedSeries(self.coeffs * other)
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return TruncatedSeries(self.coeffs / other)
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else div(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else div(other, self)

    def __call__(self, z, r_max: float = DEFAULT_R_MAX):
        return eval_at(self, z, r_max)


def _check_orders(s: TruncatedSeries, t: TruncatedSeries) -> None:
    if s.order != t.order:
        raise OrderMismatch(f"orders differ: {s.order} != {t.order}")


def add(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    _check_orders(s, t)
    return TruncatedSeries(s.coeffs + t.coeffs)


def mul(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    _check_orders(s, t)
    n = s.order + 1
    return TruncatedSeries(np.convolve(s.coeffs, t.coeffs)[:n])


def div(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    """Series ``u`` with ``u * t == s`` to the common order."""
    _check_orders(s, t)
    t0 = t.coeffs[0]
    if abs(t0) <= ZERO_TOL:
        raise ZeroConstantTerm(f"divisor has constant term {t0!r}")
    n = s.order + 1
    tc = t.coeffs
    # support of t beyond the constant term bounds the recurrence width
    nz = np.nonzero(tc[1:])[0]
    width = int(nz[-1]) + 1 if nz.size else 0
    u = np.zeros(n, dtype=complex)
    tail = tc[1 : width + 1]
    for k in range(n):
        m = min(k, width)
        acc = s.coeffs[k]
        if m:
            acc -= np.dot(tail[:m], u[k - 1 : k - m - 1 if k - m - 1 >= 0 else None : -1])
        u[k] = acc / t0
    return TruncatedSeries(u)


def exp_series(s: TruncatedSeries) -> TruncatedSeries:
    """Series of ``exp(s)`` from the recurrence ``n E_n = sum_k k s_k E_{n-k}``."""
    n = s.order + 1
    ks = np.arange(n) * s.coeffs
    nz = np.nonzero(ks)[0]
    width = int(nz[-1]) if nz.size else 0
    e = np.zeros(n, dtype=complex)
    e[0] = np.exp(s.coeffs[0])
    weights = ks[1 : width + 1]
    for m in range(1, n):
        w = min(m, width)
        if w:
            e[m] = np.dot(weights[:w], e[m - 1 : m - w - 1 if m - w - 1 >= 0 else None : -1]) / m
    return TruncatedSeries(e)


def derivative(s: TruncatedSeries) -> TruncatedSeries:
    """Termwise derivative; the top coefficient becomes 0."""
    c = np.zeros_like(s.coeffs)
    c[:-1] = np.arange(1, s.order + 1) * s.coeffs[1:]
    return TruncatedSeries(c)


def antiderivative(s: TruncatedSeries) -> TruncatedSeries:
    """Termwise antiderivative with zero constant term."""
    c = np.zeros_like(s.coeffs)
    c[1:] = s.coeffs[:-1] / np.arange(1, s.order + 1)
    return TruncatedSeries(c)


def divide_by_z(s: TruncatedSeries) -> TruncatedSeries:
    if abs(s.coeffs[0]) > ZERO_TOL:
        raise NonzeroConstantTerm(f"cannot divide by z: constant term {s.coeffs[0]!r}")
    c = np.zeros_like(s.coeffs)
    c[:-1] = s.coeffs[1:]
    return TruncatedSeries(c)


def multiply_by_z(s: TruncatedSeries) -> TruncatedSeries:
    c = np.zeros_like(s.coeffs)
    c[1:] = s.coeffs[:-1]
    return TruncatedSeries(c)


def rotate(s: TruncatedSeries, theta: float, normalized: bool = True) -> TruncatedSeries:
    """Rotation ``e^{-i theta} f(e^{i theta} z)``.

    With ``normalized=False`` the plain substitution ``f(e^{i theta} z)`` is
    used instead, i.e. ``c_k -> e^{i k theta} c_k``.
    """
    k = np.arange(s.order + 1)
    if normalized:
        k = k - 1
    return TruncatedSeries(s.coeffs * np.exp(1j * theta * k))


def _check_disk(z, r_max: float) -> None:
    if np.any(np.abs(z) > r_max):
        raise PointOutsideDisk(f"|z| exceeds r_max={r_max}")


def eval_at(s: TruncatedSeries, z, r_max: float = DEFAULT_R_MAX):
    """Horner evaluation of the truncated polynomial at ``z`` (scalar or array)."""
    z = np.asarray(z, dtype=complex)
    _check_disk(z, r_max)
    c = s.coeffs
    acc = np.full(z.shape, c[-1], dtype=complex)
    for ck in c[-2::-1]:
        acc = acc * z + ck
    return complex(acc) if acc.ndim == 0 else acc


def eval_on_circles(s: TruncatedSeries, radii: Sequence[float], n_angles: int,
                    r_max: float = DEFAULT_R_MAX) -> np.ndarray:
    """Values on ``radii x n_angles`` polar points ``r e^{2 pi i j / n_angles}``.

    Uses one FFT per circle; coefficients whose index agrees mod ``n_angles``
    are folded together first, which is exact on the equispaced angles.
    """
    radii = np.asarray(radii, dtype=float)
    _check_disk(radii, r_max)
    n = s.order + 1
    k = np.arange(n)
    weighted = s.coeffs[None, :] * radii[:, None] ** k[None, :]
    blocks = -(-n // n_angles)
    padded = np.zeros((radii.size, blocks * n_angles), dtype=complex)
    padded[:, :n] = weighted
    folded = padded.reshape(radii.size, blocks, n_angles).sum(axis=1)
    return np.fft.ifft(folded, axis=1) * n_angles


def _polynomial_tail(n: int, r: float) -> float:
    # sum_{k>n} (k+1) r^k
    m = n + 1
    return r**m * ((m + 1) / (1 - r) + r / (1 - r) ** 2)


def tail_bound(s: TruncatedSeries, r: float) -> float:
    """Estimate of the neglected tail ``sum_{k>N} |c_k| r^k`` on ``|z| = r``.

    The envelope of ``|c_k| r^k`` over the last half of the stored
    coefficients is fitted by a geometric sequence and summed beyond ``N``.
    If the stored coefficients show no geometric decay the crude bound
    ``|c_k| <= k + 1`` is used instead.
    """
    if r <= 0:
        return 0.0
    n = s.order
    mags = np.abs(s.coeffs) * r ** np.arange(n + 1)
    q = max(n // 4, 1)
    late = float(np.max(mags[n - q + 1 :]))
    early = float(np.max(mags[n - 2 * q + 1 : n - q + 1]))
    if late == 0.0 and early == 0.0:
        return 0.0
    if early == 0.0:
        return _polynomial_tail(n, r)
    ratio = (late / early) ** (1.0 / q)
    if ratio >= 1.0:
        return _polynomial_tail(n, r)
    # envelope carried from the start of the last window to index N
    return late * ratio ** q / (1.0 - ratio)


def factorial_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Coefficients ``1/n!``, the series of ``exp(z)``."""
    return TruncatedSeries([math.exp(-math.lgamma(k + 1)) for k in range(order + 1)])
