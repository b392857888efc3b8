"""Evaluation grids for weights, stored in the log-t domain.

All weight evaluation in this package happens at log t: the interesting
sequences have knots up to 2^1023, far beyond linear-domain float range, and
geometric grids are uniform in log t, which is also the natural regression
abscissa for the trend tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True, eq=False)
class Grid:
    """Strictly increasing finite evaluation points in log t."""

    log_t: np.ndarray
    policy: str = "geometric"

    def __post_init__(self) -> None:
        arr = np.asarray(self.log_t, dtype=float)
        if arr.ndim != 1 or len(arr) < 2:
            raise ValueError("grid needs at least two points")
        if not np.all(np.isfinite(arr)):
            raise ValueError("grid points must be finite")
        if not np.all(np.diff(arr) > 0):
            raise ValueError("grid points must be strictly increasing")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "log_t", arr)

    def __len__(self) -> int:
        return len(self.log_t)

    @property
    def t(self) -> np.ndarray:
        return np.exp(self.log_t)

    @staticmethod
    def geometric(t_min: float, t_max: float, n: int) -> "Grid":
        if not (t_min > 0 and t_max > t_min):
            raise ValueError("need 0 < t_min < t_max")
        if n < 2:
            raise ValueError("need n >= 2")
        return Grid(np.linspace(np.log(t_min), np.log(t_max), n), "geometric")

    @staticmethod
    def geometric_log(x_lo: float, x_hi: float, n: int) -> "Grid":
        if not (x_hi > x_lo):
            raise ValueError("need x_lo < x_hi")
        if n < 2:
            raise ValueError("need n >= 2")
        return Grid(np.linspace(x_lo, x_hi, n), "geometric")

    def augment(self, knots_log: np.ndarray) -> "Grid":
        """Union with the given log-knots that do not exceed the grid maximum.

        Knot augmentation makes suprema over the grid exact at the points where
        a sequence-backed weight attains its Legendre extremes.
        """
        knots = np.asarray(knots_log, dtype=float)
        knots = knots[np.isfinite(knots)]
        knots = knots[knots <= self.log_t[-1]]
        merged = np.union1d(self.log_t, knots)
        return Grid(merged, "knot_augmented")

    def clip(self, x_lo: float | None = None, x_hi: float | None = None) -> "Grid | None":
        """Sub-grid inside [x_lo, x_hi]; None if fewer than two points remain."""
        pts = self.log_t
        if x_lo is not None:
            pts = pts[pts >= x_lo]
        if x_hi is not None:
            pts = pts[pts <= x_hi]
        if len(pts) < 2:
            return None
        return Grid(pts, self.policy)


def default_grid(t_min: float = 1e-3, t_max: float = 1e9, n: int = 4096) -> Grid:
    return Grid.geometric(t_min, t_max, n)
