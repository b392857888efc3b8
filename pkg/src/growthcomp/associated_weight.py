"""Associated weight of a sequence: evaluation, counting, recovery, conditions.

The associated weight of M at t > 0 is sup_j log(t^j / M_j), taken as 0 at
t = 0.  Two independent evaluation routes are kept deliberately distinct:

* sup_scan:    the literal supremum of j*x - log M_j over all stored indices;
* closed_form: locates the maximizing index through the quotient-counting
  function and takes the same term expression on a small index window.

Both routes share the bit-identical term expression j*x - P[j], so on
log-convex input they agree to the last bit; they must never be collapsed
into one implementation, since their agreement is itself a checked invariant.

For non-log-convex input the closed-form route works on the log-convex
minorant (the associated weight cannot see the difference); the scan route
keeps the raw values.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .grids import Grid, default_grid
from .sequence_core import WeightSequence, log_convex_minorant
from .verdicts import Verdict, fails, holds, inconclusive

OMEGA_MODES = ("closed_form", "sup_scan")
OM6_LADDER = (1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 128.0, 256.0, 512.0, 1024.0)
OM1_LADDER = (2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 128.0, 256.0, 512.0, 1024.0)
LADDER_GRID_N = 2048
LADDER_ATOL = 1e-9
MIN_WINDOW_SPAN = 0.05

_SCAN_CHUNK = 512
_WINDOW_HALF_WIDTH = 3


# ---------------------------------------------------------------------------
# associated weight object
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class AssociatedWeight:
    """Associated weight of a sequence, evaluated in the log domain."""

    source: WeightSequence

    @cached_property
    def hull(self) -> WeightSequence:
        return log_convex_minorant(self.source)

    @cached_property
    def knots(self) -> np.ndarray:
        """log mu_j of the log-convex minorant; non-decreasing for j >= 1."""
        return self.hull.quotient_array

    @property
    def log_mu_max(self) -> float:
        """End of the faithful range: beyond the last quotient the truncated
        supremum freezes at the top index while the true weight keeps growing."""
        return float(self.knots[-1])

    def omega_log(self, x, mode: str = "closed_form") -> np.ndarray:
        """Associated weight at t = exp(x), for scalar or array x."""
        xs = np.atleast_1d(np.asarray(x, dtype=float))
        if mode == "sup_scan":
            out = _sup_scan(self.source.log_values, xs)
        elif mode == "closed_form":
            out = _closed_form(self.hull.log_values, self.knots, xs)
        else:
            raise ValueError(f"unknown mode {mode!r}; expected one of {OMEGA_MODES}")
        return out if np.ndim(x) else out[0]

    def omega(self, t, mode: str = "closed_form") -> np.ndarray:
        ts = np.atleast_1d(np.asarray(t, dtype=float))
        if np.any(ts < 0):
            raise ValueError("t must be non-negative")
        out = np.zeros_like(ts)
        pos = ts > 0
        if np.any(pos):
            out[pos] = self.omega_log(np.log(ts[pos]), mode=mode)
        return out if np.ndim(t) else out[0]

    def counting(self, t) -> np.ndarray:
        """Number of quotients mu_j <= t (j >= 1); the local growth exponent."""
        ts = np.atleast_1d(np.asarray(t, dtype=float))
        out = np.zeros(ts.shape, dtype=int)
        pos = ts > 0
        if np.any(pos):
            out[pos] = np.searchsorted(self.knots[1:], np.log(ts[pos]), side="right")
        return out if np.ndim(t) else out[0]


def _sup_scan(P: np.ndarray, xs: np.ndarray) -> np.ndarray:
    j = np.arange(len(P), dtype=float)
    out = np.empty(len(xs))
    for lo in range(0, len(xs), _SCAN_CHUNK):
        blk = xs[lo:lo + _SCAN_CHUNK]
        terms = j[:, None] * blk[None, :] - P[:, None]
        out[lo:lo + _SCAN_CHUNK] = terms.max(axis=0)
    return out


def _closed_form(P: np.ndarray, knots: np.ndarray, xs: np.ndarray) -> np.ndarray:
    J = len(P) - 1
    k = np.searchsorted(knots[1:], xs, side="right")
    offsets = np.arange(-_WINDOW_HALF_WIDTH, _WINDOW_HALF_WIDTH + 1)
    jw = np.clip(k[:, None] + offsets[None, :], 0, J)
    terms = jw.astype(float) * xs[:, None] - P[jw]
    return terms.max(axis=1)


def omega_eval(M: WeightSequence, t, mode: str = "closed_form"):
    return AssociatedWeight(M).omega(t, mode=mode)


def counting(M: WeightSequence, t):
    return AssociatedWeight(M).counting(t)


# ---------------------------------------------------------------------------
# Legendre-type recovery
# ---------------------------------------------------------------------------

def legendre_recover(omega, J: int, grid: Grid | None = None,
                     safety: float = 0.5) -> WeightSequence:
    """Recover M_j = sup_t t^j / exp(omega(t)) on the grid, for j = 0..J.

    ``omega`` is an AssociatedWeight or any object with an ``omega_log(x)``
    method (a Weight).  For an AssociatedWeight the grid is augmented with the
    quotient knots, which makes the recovery exact on the faithful range.
    Indices beyond safety * (counting at the grid end) are grid-limited
    underestimates; a warning is emitted when J exceeds that cap.
    """
    if grid is None:
        grid = default_grid()
    x = grid.log_t
    label = ""
    if isinstance(omega, AssociatedWeight):
        kn = omega.knots[1:]
        x = np.union1d(x, kn[(kn >= x[0]) & (kn <= x[-1])])
        k_end = float(omega.counting(np.exp(x[-1])))
        label = f"recovered({omega.source.label})" if omega.source.label else "recovered"
    else:
        w_tail = omega.omega_log(x[-2:])
        k_end = float((w_tail[1] - w_tail[0]) / (x[-1] - x[-2]))
        src = getattr(omega, "label", "")
        label = f"recovered({src})" if src else "recovered"
    j_reliable = int(np.floor(max(0.0, k_end) * safety))
    if J > j_reliable:
        warnings.warn(f"recovery requested up to j={J} but the grid only "
                      f"supports j<={j_reliable}; higher indices are "
                      f"grid-limited underestimates", stacklevel=2)
    w = omega.omega_log(x)
    j = np.arange(J + 1, dtype=float)
    vals = (j[:, None] * x[None, :] - w[None, :]).max(axis=1)
    clamped = bool(vals[0] != 0.0)
    vals[0] = 0.0
    return WeightSequence(vals, label=label,
                          meta={"reliable_max_index": j_reliable,
                                "origin_clamped": clamped})


def auxiliary_seq(N: WeightSequence, c: int, grid: Grid | None = None,
                  J: int | None = None) -> WeightSequence:
    """Power-scaled recovery sup_t t^j / exp(c * omega_N(t)) for integer c >= 1.

    Meta records the indices whose supremum sits on the grid boundary; those
    entries are coarse-grid artifacts rather than converged values.
    """
    if not (isinstance(c, (int, np.integer)) and c >= 1):
        raise ValueError("need an integer c >= 1")
    if grid is None:
        grid = default_grid()
    aw = AssociatedWeight(N)
    x = grid.log_t
    kn = aw.knots[1:]
    x = np.union1d(x, kn[(kn >= x[0]) & (kn <= x[-1])])
    w = c * aw.omega_log(x)
    J_out = N.J if J is None else J
    j = np.arange(J_out + 1, dtype=float)
    terms = j[:, None] * x[None, :] - w[None, :]
    vals = terms.max(axis=1)
    arg = terms.argmax(axis=1)
    boundary = [int(i) for i in np.nonzero(arg == len(x) - 1)[0] if i > 0]
    vals[0] = 0.0
    return WeightSequence(vals, label=f"aux({N.label},{c})" if N.label else f"aux({c})",
                          meta={"boundary_limited": boundary})


# ---------------------------------------------------------------------------
# doubling-condition ladders (shared by sequence and weight front ends)
# ---------------------------------------------------------------------------

def om6_ladder(omega_log, x_hi: float, H_values=OM6_LADDER,
               n: int = LADDER_GRID_N, atol: float = LADDER_ATOL) -> Verdict:
    """Exists H >= 1 with 2*omega(t) <= omega(H t) + H on t >= 1.

    Each rung is checked on the geometric window [1, t_hi / H] so every
    evaluation stays inside the faithful range [0, x_hi] in the log domain.
    Holds at the smallest clean rung; Fails when every evaluable rung shows a
    violation, with one witness point per rung.
    """
    violations: list[tuple[float, float]] = []
    skipped: list[float] = []
    evaluated = 0
    for H in H_values:
        span = x_hi - np.log(H)
        if span <= MIN_WINDOW_SPAN:
            skipped.append(H)
            continue
        evaluated += 1
        x = np.linspace(0.0, span, n)
        excess = 2.0 * omega_log(x) - omega_log(x + np.log(H)) - H
        k = int(np.argmax(excess))
        if excess[k] <= atol:
            return holds(witnesses={"H": float(H), "max_excess": float(excess[k])},
                         evidence=((float(x[k]), float(excess[k])),),
                         note=f"clean at H={H:g}; evidence is (log t, excess) "
                              f"for log t in [0,{span:.6g}]")
        violations.append((float(H), float(x[k])))
    if evaluated == 0:
        return inconclusive("faithful range too short for any rung")
    note = "violation on every evaluable rung; evidence is (H, log t)"
    if skipped:
        note += f" (window too short for H >= {min(skipped):g})"
    return fails(evidence=tuple(violations), note=note)


def om1_ladder(omega_log, x_hi: float, L_values=OM1_LADDER,
               n: int = LADDER_GRID_N, atol: float = LADDER_ATOL) -> Verdict:
    """Exists L with omega(2t) <= L * (omega(t) + 1) on t >= 1."""
    span = x_hi - np.log(2.0)
    if span <= MIN_WINDOW_SPAN:
        return inconclusive("faithful range too short for the doubling window")
    x = np.linspace(0.0, span, n)
    violations: list[tuple[float, float]] = []
    w_x = None
    w_2x = None
    for L in L_values:
        if w_x is None:
            w_x = omega_log(x)
            w_2x = omega_log(x + np.log(2.0))
        excess = w_2x - L * (w_x + 1.0)
        k = int(np.argmax(excess))
        if excess[k] <= atol:
            return holds(witnesses={"L": float(L), "max_excess": float(excess[k])},
                         evidence=((float(x[k]), float(excess[k])),),
                         note=f"clean at L={L:g}; evidence is (log t, excess) "
                              f"for log t in [0,{span:.6g}]")
        violations.append((float(L), float(x[k])))
    return fails(evidence=tuple(violations),
                 note=f"violation at every L <= {L_values[-1]:g}; "
                      "evidence is (L, log t)")


def check_om6_omega(M: WeightSequence, n: int = LADDER_GRID_N) -> Verdict:
    """Doubling-with-shift condition read off the associated weight of M."""
    aw = AssociatedWeight(M)
    return om6_ladder(lambda x: aw.omega_log(x), aw.log_mu_max, n=n)


def check_om1_omega(M: WeightSequence, n: int = LADDER_GRID_N) -> Verdict:
    """Multiplicative doubling condition read off the associated weight of M."""
    aw = AssociatedWeight(M)
    return om1_ladder(lambda x: aw.omega_log(x), aw.log_mu_max, n=n)


# ---------------------------------------------------------------------------
# weight construction from a sequence
# ---------------------------------------------------------------------------

def v_weight(M: WeightSequence, kind: str = "dilate", c: float = 1.0):
    """Decreasing weight exp(-omega_M(c t)) (dilate) or exp(-c omega_M(t)) (power)."""
    from .weight_functions import from_sequence
    base = from_sequence(M)
    if kind == "dilate":
        return base.dilate(c)
    if kind == "power":
        return base.power(c)
    raise ValueError(f"unknown kind {kind!r}; expected 'dilate' or 'power'")
