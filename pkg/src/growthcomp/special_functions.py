"""Canonical series built from a weight sequence, with certified evaluation.

The dilation-kind series sums (c t)^j / (2^j M_j); the power-kind series sums
t^(c j) / (2^j M_j^c) for an integer c.  Both live inside the union spaces of
their source and outside the corresponding intersection spaces, which makes
them the standard membership probes.  Evaluation truncates at the stored
range, so every value ships with a tail certificate: inside the certified
radius the ratio of successive terms is below one half, the geometric tail is
bounded explicitly, and outside it evaluation refuses rather than guesses.
The tail bound reads the final quotient of the log-convex minorant, so it
assumes the sequence continues at least log-convexly past the stored range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .associated_weight import AssociatedWeight
from .grids import Grid, default_grid
from .sequence_core import WeightSequence
from .spaces import PowerSeries, log_series_eval
from .verdicts import Verdict, fails, holds, inconclusive

LOG2 = math.log(2.0)
THETA_KINDS = ("dila", "pow")


@dataclass(frozen=True, eq=False)
class ThetaFunction:
    """Series probe over a weight sequence: one dilation or power member."""

    source: WeightSequence
    kind: str = "dila"
    c: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in THETA_KINDS:
            raise ValueError(f"kind must be one of {THETA_KINDS}")
        if self.kind == "dila":
            if not (self.c > 0.0 and math.isfinite(self.c)):
                raise ValueError("dilation parameter must be a positive finite number")
        else:
            if self.c != int(self.c) or self.c < 1:
                raise ValueError("power parameter must be an integer >= 1")
            object.__setattr__(self, "c", float(int(self.c)))

    @cached_property
    def _aw(self) -> AssociatedWeight:
        return AssociatedWeight(self.source)

    @property
    def log_mu_end(self) -> float:
        """Final quotient of the minorant; anchors every tail certificate."""
        return float(self._aw.knots[-1])

    @property
    def log_t_certified(self) -> float:
        """Evaluation is certified for log t strictly below this."""
        if self.kind == "dila":
            return self.log_mu_end - math.log(self.c)
        return self.log_mu_end

    @property
    def label(self) -> str:
        src = self.source.label or "unlabeled"
        return f"theta[{src}|{self.kind}|c={self.c:g}]"


def theta_series(T: ThetaFunction) -> PowerSeries:
    """Stored coefficients of the probe as a power series (a truncation)."""
    P = T.source.log_values
    J = T.source.J
    j = np.arange(J + 1, dtype=float)
    if T.kind == "dila":
        coeffs = j * (math.log(T.c) - LOG2) - P
    else:
        c = int(T.c)
        coeffs = np.full(c * J + 1, -np.inf)
        coeffs[c * np.arange(J + 1)] = -j * LOG2 - c * P
    return PowerSeries(coeffs, label=T.label, complete=False)


def _tail_log(T: ThetaFunction, x: np.ndarray | float) -> np.ndarray | float:
    """log of the geometric tail bound beyond the stored range, at log t = x."""
    J = T.source.J
    P = T.source.log_values
    if T.kind == "dila":
        r_log = math.log(T.c) + np.asarray(x, dtype=float) - LOG2 - T.log_mu_end
        top_log = J * (math.log(T.c) - LOG2) - P[J] + J * np.asarray(x, dtype=float)
    else:
        c = T.c
        r_log = c * (np.asarray(x, dtype=float) - T.log_mu_end) - LOG2
        top_log = -J * LOG2 - c * P[J] + c * J * np.asarray(x, dtype=float)
    r = np.exp(r_log)
    return top_log + r_log - np.log1p(-r)


def theta_eval(T: ThetaFunction, t: float) -> tuple[float, float]:
    """(log of the stored partial sum, err) with the true log value inside
    [partial, partial + err].  Raises outside the certified radius."""
    if t < 0.0:
        raise ValueError("the probe is evaluated on t >= 0")
    if t == 0.0:
        return 0.0, 0.0
    x = math.log(t)
    if x >= T.log_t_certified:
        raise ValueError(f"t={t:g} is outside the certified radius "
                         f"(log t must stay below {T.log_t_certified:g})")
    f = theta_series(T)
    c = f.log_abs_coeffs
    idx = np.nonzero(np.isfinite(c))[0]
    terms = c[idx] + idx * x
    order = np.argsort(terms)[::-1]
    terms = terms[order]
    partial = float(terms[0] + np.log(np.exp(terms - terms[0]).sum()))
    err = float(np.log1p(np.exp(float(_tail_log(T, x)) - partial)))
    return partial, err


def bounds_check(T: ThetaFunction, grid: Grid | None = None,
                 rtol: float = 1e-9) -> Verdict:
    """Verify the envelope of the probe at every certified grid point.

    Lower: the partial sum already dominates exp(omega(c t / 2)) for the
    dilation kind and exp(c * omega(t / 2^(1/c))) for the power kind.  Upper
    (dilation kind only): partial sum plus tail stays below 2 exp(omega(c t)).
    """
    g = grid if grid is not None else default_grid()
    mask = g.log_t < T.log_t_certified
    if int(mask.sum()) < 2:
        return inconclusive("no certified grid points inside the faithful range")
    x = g.log_t[mask]
    f = theta_series(T)
    vals, _ = log_series_eval(f, x)
    if T.kind == "dila":
        lb = T._aw.omega_log(x + math.log(T.c) - LOG2)
        ub = LOG2 + T._aw.omega_log(x + math.log(T.c))
        upper_gap = (vals + np.log1p(np.exp(_tail_log(T, x) - vals))) - ub
    else:
        lb = T.c * T._aw.omega_log(x - LOG2 / T.c)
        upper_gap = None
    scale = np.maximum(1.0, np.abs(lb))
    lower_gap = lb - vals
    bad = lower_gap > rtol * scale
    if upper_gap is not None:
        bad |= upper_gap > rtol * np.maximum(1.0, np.abs(ub))
    n = len(x)
    if np.any(bad):
        k = int(np.argmax(np.where(bad, lower_gap, -np.inf)))
        return fails(evidence=((float(np.exp(x[k])), float(lower_gap[k])),),
                     note=f"envelope violated at {int(bad.sum())} of {n} certified points")
    w = {"points": float(n), "max_lower_slack": float(np.max(lower_gap))}
    if upper_gap is not None:
        w["max_upper_slack"] = float(np.max(upper_gap))
    return holds(witnesses=w, note=f"envelope verified at all {n} certified points")


def monomial(k: int, log_scale: float = 0.0, label: str = "") -> PowerSeries:
    """The single term |a| t^k, as a complete series."""
    if k < 0 or k != int(k):
        raise ValueError("monomial degree must be a non-negative integer")
    coeffs = np.full(int(k) + 1, -np.inf)
    coeffs[int(k)] = float(log_scale)
    return PowerSeries(coeffs, label=label or f"t^{int(k)}", complete=True)
