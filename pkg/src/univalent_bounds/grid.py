"""Polar sampling grids shared by membership checks and campaigns."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_RADII = 32
DEFAULT_ANGLES = 256
DEFAULT_GRID_R_MAX = 0.995


@dataclass(frozen=True)
class GridSpec:
    """Radii ``r_1 < ... < r_n`` times ``n_angles`` equispaced angles from 0.

    Angles are ``2 pi j / n_angles``; an even ``n_angles`` therefore hits the
    negative real axis, where several extremal functions peak.
    """

    radii: tuple[float, ...]
    n_angles: int = DEFAULT_ANGLES

    def __post_init__(self):
        radii = tuple(float(r) for r in self.radii)
        if not radii or min(radii) < 0 or max(radii) >= 1:
            raise ValueError("grid radii must lie in [0, 1)")
        if self.n_angles < 1:
            raise ValueError("n_angles must be positive")
        object.__setattr__(self, "radii", radii)

    @classmethod
    def chebyshev(cls, n_radii: int = DEFAULT_RADII, n_angles: int = DEFAULT_ANGLES,
                  r_max: float = DEFAULT_GRID_R_MAX) -> "GridSpec":
        """Radii ``r_max sin(pi i / 2n)``, i = 1..n: clustered toward ``r_max``."""
        i = np.arange(1, n_radii + 1)
        return cls(tuple(r_max * np.sin(0.5 * np.pi * i / n_radii)), n_angles)

    @property
    def r_max(self) -> float:
        return max(self.radii)

    @property
    def angles(self) -> np.ndarray:
        return 2 * np.pi * np.arange(self.n_angles) / self.n_angles

    def points(self) -> np.ndarray:
        """Complex grid points, shape ``(len(radii), n_angles)``."""
        return np.asarray(self.radii)[:, None] * np.exp(1j * self.angles)[None, :]

    def scaled_to(self, r_max: float) -> "GridSpec":
        """Same layout with the outermost radius moved to ``r_max``."""
        factor = r_max / self.r_max
        return GridSpec(tuple(r * factor for r in self.radii), self.n_angles)

    def to_dict(self) -> dict:
        return {"radii": list(self.radii), "n_angles": self.n_angles}

    @classmethod
    def from_dict(cls, d: dict) -> "GridSpec":
        return cls(tuple(d["radii"]), int(d["n_angles"]))


def default_grid() -> GridSpec:
    return GridSpec.chebyshev()
