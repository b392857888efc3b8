"""Decreasing weight functions on (0, inf), handled in the log domain.

A weight v is stored through omega = -log v as a function of x = log t.
Dilation and power rescaling compose structurally: dilation shifts the
argument (and shrinks the faithful range), power rescaling multiplies the
value.  Every weight carries the end of its faithful range; comparison
windows are clipped there so that sequence truncation or table ends never
masquerade as asymptotics.

The comparison ladders classify each rung from two views of the same window:
the difference diagnostic d (the quantity the claim bounds or sends to
infinity) and the race between the rung's drag and the baseline gap of the
undilated family member.  A rung whose visible trend is drag-driven while
the baseline wins the race asymptotically is window-limited and skipped,
never guessed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .associated_weight import AssociatedWeight, om1_ladder, om6_ladder
from .grids import Grid, default_grid
from .sequence_core import WeightSequence
from .trend import Trend, TrendPolicy, TrendReport, classify
from .verdicts import Verdict, fails, fuse_unanimous, holds, inconclusive

DEFAULT_POLICY = TrendPolicy()
DEFAULT_RELIABLE_LOG_T = float(np.log(1e15))
EXIST_LADDER = tuple(float(2 ** k) for k in range(11))
FORALL_LADDER = tuple(float(2.0 ** -k) for k in range(11))
CONVEXITY_GRID_N = 1025
MIN_WINDOW_POINTS = 16
_RUNG_HOLDS, _RUNG_FAILS, _RUNG_SKIP = "holds", "fails", "window-limited"


# ---------------------------------------------------------------------------
# the weight type
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Weight:
    """Weight exp(-omega(log t)); omega_fn maps arrays of x to arrays of omega."""

    omega_fn: Callable[[np.ndarray], np.ndarray]
    label: str = ""
    kind: str = "closed_form"
    log_t_reliable: float = DEFAULT_RELIABLE_LOG_T
    source: WeightSequence | None = None
    arg_shift: float = 0.0
    pow_scale: float = 1.0
    normalized: bool = False
    knots_log: np.ndarray | None = None

    def omega_log(self, x):
        xs = np.atleast_1d(np.asarray(x, dtype=float))
        out = np.asarray(self.omega_fn(xs), dtype=float)
        return out if np.ndim(x) else float(out[0])

    def value(self, t):
        ts = np.atleast_1d(np.asarray(t, dtype=float))
        if np.any(ts <= 0):
            raise ValueError("t must be positive")
        out = np.exp(-self.omega_log(np.log(ts)))
        return out if np.ndim(t) else float(out[0])

    @property
    def is_plain_sequence_weight(self) -> bool:
        return (self.source is not None and self.arg_shift == 0.0
                and self.pow_scale == 1.0)

    def dilate(self, c: float) -> "Weight":
        """Weight t -> v(c t); the faithful range shrinks (or grows) by log c."""
        if not (c > 0 and np.isfinite(c)):
            raise ValueError("need finite c > 0")
        a = float(np.log(c))
        base = self.omega_fn
        knots = None if self.knots_log is None else self.knots_log - a
        return Weight(lambda xs, _b=base, _a=a: _b(xs + _a),
                      label=f"dil({self.label},{c:g})", kind=self.kind,
                      log_t_reliable=self.log_t_reliable - a,
                      source=self.source, arg_shift=self.arg_shift + a,
                      pow_scale=self.pow_scale,
                      normalized=self.normalized and c <= 1.0,
                      knots_log=knots)

    def power(self, c: float) -> "Weight":
        """Weight t -> v(t)^c; omega rescales, the faithful range is unchanged."""
        if not (c > 0 and np.isfinite(c)):
            raise ValueError("need finite c > 0")
        base = self.omega_fn
        return Weight(lambda xs, _b=base, _c=float(c): _c * _b(xs),
                      label=f"pow({self.label},{c:g})", kind=self.kind,
                      log_t_reliable=self.log_t_reliable,
                      source=self.source, arg_shift=self.arg_shift,
                      pow_scale=self.pow_scale * float(c),
                      normalized=self.normalized,
                      knots_log=self.knots_log)


def from_sequence(M: WeightSequence) -> Weight:
    """The decreasing weight exp(-omega_M) of a sequence."""
    aw = AssociatedWeight(M)
    return Weight(lambda xs, _aw=aw: _aw.omega_log(xs),
                  label=f"v({M.label})" if M.label else "v",
                  kind="sequence", log_t_reliable=aw.log_mu_max, source=M,
                  normalized=bool(np.all(M.log_values >= 0.0)),
                  knots_log=np.asarray(aw.knots[1:], dtype=float))


def from_table(t, omega, label: str = "") -> Weight:
    """Tabulated weight: linear interpolation of omega in x = log t.

    Below the table the first value extends flat; evaluation past the table
    end raises, since nothing certifies the tail.
    """
    ts = np.asarray(t, dtype=float)
    ws = np.asarray(omega, dtype=float)
    if ts.ndim != 1 or ts.shape != ws.shape or len(ts) < 2:
        raise ValueError("need matching 1-d arrays with at least two rows")
    if np.any(ts <= 0) or np.any(np.diff(ts) <= 0):
        raise ValueError("t must be positive and strictly increasing")
    if not np.all(np.isfinite(ws)):
        raise ValueError("omega must be finite")
    xs_tab = np.log(ts)

    def fn(xs: np.ndarray) -> np.ndarray:
        if np.any(xs > xs_tab[-1] + 1e-12):
            raise ValueError("evaluation beyond the tabulated range")
        return np.interp(xs, xs_tab, ws, left=ws[0])

    return Weight(fn, label=label, kind="tabulated",
                  log_t_reliable=float(xs_tab[-1]),
                  normalized=bool(ws[0] == 0.0 and ts[0] <= 1.0),
                  knots_log=xs_tab.copy())


def from_callable(fn: Callable[[np.ndarray], np.ndarray], label: str = "",
                  log_t_reliable: float = DEFAULT_RELIABLE_LOG_T,
                  normalized: bool = False) -> Weight:
    return Weight(fn, label=label, kind="closed_form",
                  log_t_reliable=log_t_reliable, normalized=normalized)


def dilate(v: Weight, c: float) -> Weight:
    return v.dilate(c)


def power(v: Weight, c: float) -> Weight:
    return v.power(c)


def normalize(v: Weight) -> Weight:
    """Pin omega to 0 at t = 1 and clamp below: max(0, omega(x) - omega(0))."""
    if v.normalized:
        return v
    w0 = float(v.omega_log(0.0))
    base = v.omega_fn
    return Weight(lambda xs, _b=base, _w0=w0: np.maximum(0.0, _b(xs) - _w0),
                  label=f"norm({v.label})" if v.label else "norm",
                  kind=v.kind, log_t_reliable=v.log_t_reliable,
                  source=v.source, arg_shift=v.arg_shift,
                  pow_scale=v.pow_scale, normalized=True,
                  knots_log=v.knots_log)


# ---------------------------------------------------------------------------
# structural checks on a single weight
# ---------------------------------------------------------------------------

def _clipped(grid: Grid | None, v: Weight, *others: Weight,
             x_lo: float | None = None) -> Grid | None:
    g = grid if grid is not None else default_grid()
    x_hi = min([v.log_t_reliable] + [o.log_t_reliable for o in others])
    return g.clip(x_lo, x_hi)


def _comparison_grid(grid: Grid | None, v: Weight, *others: Weight) -> Grid | None:
    """Sampling grid for a comparison window.

    The faithful span of sequence-backed weights routinely extends far past
    the sampling grid's top (log mu grows linearly in the index for q-type
    sequences), and the decisive crossovers of slowly separating pairs live
    out there.  Comparisons therefore sample the full certified span at the
    grid's resolution instead of truncating at the grid's last point.
    """
    g = grid if grid is not None else default_grid()
    x_hi = min([v.log_t_reliable] + [o.log_t_reliable for o in others])
    x_lo = float(g.log_t[0])
    if x_hi <= float(g.log_t[-1]):
        return g.clip(None, x_hi)
    return Grid.geometric_log(x_lo, x_hi, len(g))


def rapidly_decreasing(v: Weight, grid: Grid | None = None,
                       policy: TrendPolicy = DEFAULT_POLICY) -> Verdict:
    """t^k v(t) -> 0 for every k, i.e. omega(x)/x -> +infinity."""
    g = _clipped(grid, v, x_lo=0.5)
    if g is None or len(g) < MIN_WINDOW_POINTS:
        return inconclusive("faithful range leaves no window above t = e^0.5")
    x = g.log_t
    r = v.omega_log(x) / x
    rep = classify(x, r, policy)
    if rep.kind is Trend.RISING:
        return holds(witnesses={"ratio_slope": rep.slope},
                     evidence=((float(np.exp(x[-1])), float(r[-1])),),
                     note="omega grows super-linearly in log t")
    k = int(np.argmax(r))
    return fails(evidence=((float(np.exp(x[k])), float(r[k])),),
                 note=f"omega/log t not rising (slope {rep.slope:.3g}); decay is at most polynomial")


def is_convex_weight(u: Weight, grid: Grid | None = None) -> Verdict:
    """Convexity of omega in x = log t, by second differences on a uniform resample."""
    g = _clipped(grid, u)
    if g is None or len(g) < MIN_WINDOW_POINTS:
        return inconclusive("faithful range too short to sample convexity")
    x = np.linspace(g.log_t[0], g.log_t[-1], CONVEXITY_GRID_N)
    w = u.omega_log(x)
    d2 = np.diff(w, 2)
    tol = 1e-9 * max(1.0, float(np.max(np.abs(w))))
    k = int(np.argmin(d2))
    if d2[k] < -tol:
        return fails(evidence=((float(np.exp(x[k + 1])), float(d2[k])),),
                     note="omega has a concave kink in log t")
    return holds(witnesses={"min_second_diff": float(d2[k])},
                 note="second differences non-negative on the sampled window")


# ---------------------------------------------------------------------------
# associated sequence of a weight and the sandwich identity
# ---------------------------------------------------------------------------

def associated_sequence(u: Weight, J: int = 512, grid: Grid | None = None,
                        safety: float = 0.5) -> WeightSequence:
    """M^u_j = sup_t t^j u(t), computed as sup_x (j x - omega(x)) on the grid.

    The raw suprema are convex in j up to rounding; the quotient array is
    projected monotone and the values rebuilt from it, so the result is exactly
    log-convex and carries its quotients.  Meta records the origin shift (when
    sup u != 1), the projection magnitude, and the grid-supported index cap.
    """
    g = _clipped(grid, u)
    if g is None or len(g) < 2:
        raise ValueError("faithful range leaves no usable grid")
    x = g.log_t
    if u.knots_log is not None:
        kn = u.knots_log
        x = np.union1d(x, kn[(kn >= x[0]) & (kn <= x[-1])])
    w = u.omega_log(x)
    j = np.arange(J + 1, dtype=float)
    vals = (j[:, None] * x[None, :] - w[None, :]).max(axis=1)
    shift = float(vals[0])
    vals = vals - shift
    vals[0] = 0.0
    q = np.maximum.accumulate(np.diff(vals))
    rebuilt = np.concatenate(([0.0], np.cumsum(q)))
    proj = float(np.max(np.abs(rebuilt - vals)))
    k_end = float((w[-1] - w[-2]) / (x[-1] - x[-2]))
    return WeightSequence(rebuilt,
                          label=f"assoc({u.label})" if u.label else "assoc",
                          log_quotients=np.concatenate(([0.0], q)),
                          meta={"origin_shift": shift,
                                "projection_magnitude": proj,
                                "reliable_max_index": int(np.floor(max(0.0, k_end) * safety))})


def sandwich_check(u: Weight, grid: Grid | None = None, J: int = 512,
                   policy: TrendPolicy = DEFAULT_POLICY) -> Verdict:
    """Two-sided control of u by the weight of its associated sequence:
    v_{M^u}^2 / A <= u <= v_{M^u} for some finite A.

    The upper half is definitional and checked pointwise; the lower half holds
    iff omega_u - 2 omega_{M^u} stays bounded above, tested as a trend.
    """
    Mu = associated_sequence(u, J=J, grid=grid)
    vm = from_sequence(Mu)
    g = _clipped(grid, u, vm)
    if g is None or len(g) < MIN_WINDOW_POINTS:
        return inconclusive("faithful range too short for the sandwich window")
    x = g.log_t
    wu = u.omega_log(x)
    wm = vm.omega_log(x)
    tol = 1e-6 * max(1.0, float(np.max(np.abs(wu))))
    over = wm - wu
    k = int(np.argmax(over))
    if over[k] > tol:
        return fails(evidence=((float(np.exp(x[k])), float(over[k])),),
                     note="recovered weight exceeds the input; u is not dominated "
                          "by the weight of its own associated sequence")
    d = wu - 2.0 * wm
    rep = classify(x, d, policy)
    if rep.kind is Trend.RISING:
        k = int(np.argmax(d))
        return fails(evidence=((float(np.exp(x[k])), float(d[k])),),
                     note="no finite sandwich constant: omega_u outruns twice the "
                          f"recovered omega (slope {rep.slope:.3g})")
    return holds(witnesses={"A": float(np.exp(max(0.0, float(d.max())))),
                            "upper_slack": float(max(0.0, float(over[k])))},
                 evidence=((float(np.exp(x[int(np.argmax(d))])), float(d.max())),),
                 note="upper bound pointwise, lower constant stable on the window")


def essential_approx(v: Weight, J: int = 512,
                     grid: Grid | None = None) -> tuple[Weight, Verdict]:
    """Best sequence-backed replacement of v plus the quality verdict."""
    Mu = associated_sequence(v, J=J, grid=grid)
    return from_sequence(Mu), sandwich_check(v, grid=grid, J=J)


# ---------------------------------------------------------------------------
# doubling conditions and iterated-ratio gate on weights
# ---------------------------------------------------------------------------

def check_om6_weight(u: Weight, n: int = 2048) -> Verdict:
    """Exists H >= 1 with 2 omega(t) <= omega(H t) + H, read off u directly."""
    return om6_ladder(lambda xs: np.asarray(u.omega_log(xs), dtype=float),
                      u.log_t_reliable, n=n)


def check_om1_weight(u: Weight, n: int = 2048) -> Verdict:
    """Exists L with omega(2t) <= L (omega(t) + 1), read off u directly."""
    return om1_ladder(lambda xs: np.asarray(u.omega_log(xs), dtype=float),
                      u.log_t_reliable, n=n)


def strong_ratio_check(u: Weight, c: float, d: float, n: int = 2048,
                       policy: TrendPolicy = DEFAULT_POLICY) -> Verdict:
    """Exists C with d * omega(t) <= omega(c t) + C on t >= 1."""
    if not (c > 0 and d > 0):
        raise ValueError("need positive c and d")
    span = u.log_t_reliable - np.log(c)
    if span <= 0.05:
        return inconclusive("faithful range too short for this dilation factor")
    x = np.linspace(0.0, span, n)
    gdiag = d * u.omega_log(x) - u.omega_log(x + np.log(c))
    rep = classify(x, gdiag, policy)
    k = int(np.argmax(gdiag))
    if rep.kind is Trend.RISING:
        return fails(evidence=((float(np.exp(x[k])), float(gdiag[k])),),
                     note=f"d*omega outruns the dilated omega (slope {rep.slope:.3g})")
    return holds(witnesses={"C": float(max(0.0, gdiag[k]))},
                 evidence=((float(np.exp(x[k])), float(gdiag[k])),),
                 note="iterated-ratio slack bounded on the window")


# ---------------------------------------------------------------------------
# rung classification for comparison ladders
# ---------------------------------------------------------------------------

def _race_kind(x: np.ndarray, d: np.ndarray, ref: np.ndarray,
               policy: TrendPolicy) -> Trend:
    """Trend of d normalized by the baseline headroom.

    When a rung's visible gap is drag-dominated, d against the baseline gap
    tells whether the baseline wins the race asymptotically (quotient rising
    toward zero) or the drag does (quotient flat or falling away).  The
    quotient is only meaningful where the headroom has opened; before that
    it is scale-noise, so the fit is restricted to the live stretch.  When
    the headroom never opens (identity-like rungs) d races the floor."""
    live = ref > 1.0
    if int(live.sum()) >= MIN_WINDOW_POINTS:
        x, d, ref = x[live], d[live], ref[live]
    q = d / np.maximum(ref, 1.0)
    return classify(x, q, policy, margin=policy.ratio_margin).kind


def _escape_kind(x: np.ndarray, d: np.ndarray, policy: TrendPolicy) -> Trend:
    """Trend of the per-e-fold average gap against log window depth.

    Pairs separated only by a factorial-type factor on a shared faster
    scale drift apart like depth times log depth: both the direct fit and
    the race see that as flat on any finite window.  The average gain per
    e-fold regressed against log depth still resolves it: rising means the
    gap's growth rate is improving at the window end (escape pending),
    flat means linear drift, falling means the gap is collapsing."""
    u = x - x[0]
    keep = u > 0.0
    return classify(np.log(u[keep]), d[keep] / u[keep], policy,
                    margin=policy.ratio_margin).kind


def _rung(claim: str, v: Weight, w: Weight, grid: Grid | None,
          policy: TrendPolicy,
          w_base: Weight | None = None) -> tuple[str, tuple[float, float], float]:
    """Evaluate one comparison rung.  Returns (state, witness_point, sup_d).

    preceq claim: omega_v - omega_w bounded above (w = O(v)).
    triangle claim: omega_w - omega_v -> +infinity (w = o(v)).
    In both, w is the side whose omega must dominate.  w_base is the family
    member the rung was derived from; the baseline gap against it separates
    window-limited rungs (dilation or power drag still masking a divergent
    baseline) from genuine failures.
    """
    # clip to the faithful window of every participant, including the
    # undilated baseline: the race quotient below is meaningless where the
    # baseline has already saturated at its top slope
    if w_base is None or w_base is w:
        g = _comparison_grid(grid, v, w)
    else:
        g = _comparison_grid(grid, v, w, w_base)
    if g is None or len(g) < MIN_WINDOW_POINTS:
        return _RUNG_SKIP, (float("nan"), float("nan")), float("nan")
    x = g.log_t
    wv = np.asarray(v.omega_log(x), dtype=float)
    ww = np.asarray(w.omega_log(x), dtype=float)
    if int(np.count_nonzero(ww > 1e-9)) < MIN_WINDOW_POINTS:
        # dormant rung: the dominating side has not risen above zero yet
        return _RUNG_SKIP, (float("nan"), float("nan")), float("nan")
    # drop the dead zone where both weights still sit at their plateau; it
    # carries no comparison information and drowns the trailing-window fits
    awake = (wv > 1e-9) | (ww > 1e-9)
    if int(awake.sum()) < MIN_WINDOW_POINTS:
        return _RUNG_SKIP, (float("nan"), float("nan")), float("nan")
    x, wv, ww = x[awake], wv[awake], ww[awake]
    wb = ww if (w_base is None or w_base is w) else np.asarray(
        w_base.omega_log(x), dtype=float)
    if claim == "preceq":
        d = wv - ww
        rep = classify(x, d, policy)
        if rep.kind is not Trend.RISING or rep.peak_inside:
            state = _RUNG_HOLDS
        elif _race_kind(x, d, wb - wv, policy) is Trend.FALLING:
            state = _RUNG_SKIP
        elif _escape_kind(x, d, policy) is Trend.FALLING:
            state = _RUNG_SKIP
        else:
            state = _RUNG_FAILS
    else:
        d = ww - wv
        rep = classify(x, d, policy)
        if rep.kind is Trend.RISING and not rep.peak_inside:
            state = _RUNG_HOLDS
        elif rep.kind is Trend.RISING:
            base_kind = classify(x, wb - wv, policy).kind
            state = _RUNG_SKIP if base_kind is Trend.RISING else _RUNG_FAILS
        elif _race_kind(x, d, wb - wv, policy) is Trend.RISING:
            state = _RUNG_SKIP
        elif _escape_kind(x, d, policy) is Trend.RISING:
            state = _RUNG_SKIP
        else:
            state = _RUNG_FAILS
    # witness abscissa is log t: the extended spans overflow exp
    k = int(np.argmax(d)) if claim == "preceq" else len(d) - 1
    return state, (float(x[k]), float(d[k])), float(d.max())


def weight_preceq(v: Weight, w: Weight, grid: Grid | None = None,
                  policy: TrendPolicy = DEFAULT_POLICY) -> Verdict:
    """w = O(v): omega_v - omega_w bounded above on the shared faithful window."""
    state, point, sup_d = _rung("preceq", v, w, grid, policy)
    if state == _RUNG_HOLDS:
        return holds(witnesses={"C": float(np.exp(max(0.0, sup_d)))},
                     evidence=(point,), note="gap bounded above on the window")
    if state == _RUNG_FAILS:
        return fails(evidence=(point,), note="gap grows without bound on the window")
    return inconclusive("window-limited: the gap has not settled inside the faithful range")


def weight_triangle(v: Weight, w: Weight, grid: Grid | None = None,
                    policy: TrendPolicy = DEFAULT_POLICY) -> Verdict:
    """w = o(v): omega_w - omega_v -> +infinity on the shared faithful window."""
    state, point, _ = _rung("triangle", v, w, grid, policy)
    if state == _RUNG_HOLDS:
        return holds(witnesses={"gap_at_window_end": point[1]}, evidence=(point,),
                     note="gap diverges on the window")
    if state == _RUNG_FAILS:
        return fails(evidence=(point,), note="gap does not diverge on the window")
    return inconclusive("window-limited: the gap has not settled inside the faithful range")


# ---------------------------------------------------------------------------
# ladders over dilation and power families
# ---------------------------------------------------------------------------

def _exists_ladder(claim: str, v: Weight, make_rung, grid: Grid | None,
                   policy: TrendPolicy, param_name: str) -> Verdict:
    base = make_rung(1.0)
    undecided = False
    rung_evidence: list[tuple[float, float]] = []
    for c in EXIST_LADDER:
        state, point, sup_d = _rung(claim, v, make_rung(c), grid, policy, base)
        if state == _RUNG_HOLDS:
            return holds(witnesses={param_name: float(c),
                                    "C": float(np.exp(max(0.0, sup_d)))},
                         evidence=(point,),
                         note=f"first clean rung at {param_name}={c:g}")
        if state == _RUNG_SKIP:
            undecided = True
        else:
            rung_evidence.append((float(c), point[1]))
    if undecided:
        return inconclusive("some rungs window-limited and none held")
    return fails(evidence=tuple(rung_evidence),
                 note=f"gap unbounded at every {param_name} <= {EXIST_LADDER[-1]:g}")


def _forall_ladder(claim: str, v: Weight, make_rung, grid: Grid | None,
                   policy: TrendPolicy, param_name: str) -> Verdict:
    base = make_rung(1.0)
    held: list[float] = []
    skipped: list[float] = []
    for c in FORALL_LADDER:
        state, point, sup_d = _rung(claim, v, make_rung(c), grid, policy, base)
        if state == _RUNG_FAILS:
            return fails(evidence=((float(c), point[0]), point),
                         note=f"rung {param_name}={c:g} fails at log t={point[0]:.4g}")
        if state == _RUNG_HOLDS:
            held.append(c)
        else:
            skipped.append(c)
    if held:
        note = f"all decidable rungs hold down to {param_name}={min(held):g}"
        if skipped:
            note += f" ({len(skipped)} rung(s) window-limited)"
        return holds(witnesses={"hardest_" + param_name: float(min(held))}, note=note)
    return inconclusive("every rung window-limited")


def weight_preceq_dila(v: Weight, w: Weight, grid: Grid | None = None,
                       policy: TrendPolicy = DEFAULT_POLICY) -> Verdict:
    """Exists c >= 1 with v preceq dilate(w, c)."""
    return _exists_ladder("preceq", v, lambda c: w.dilate(c), grid, policy, "c")


def weight_preceq_pow(v: Weight, w: Weight, grid: Grid | None = None,
                      policy: TrendPolicy = DEFAULT_POLICY) -> Verdict:
    """Exists c >= 1 with v preceq w^c."""
    return _exists_ladder("preceq", v, lambda c: w.power(c), grid, policy, "c")


def weight_triangle_dila(v: Weight, w: Weight, grid: Grid | None = None,
                         policy: TrendPolicy = DEFAULT_POLICY) -> Verdict:
    """For every c > 0: omega_w(c t) - omega_v(t) -> +infinity (descending rungs)."""
    return _forall_ladder("triangle", v, lambda c: w.dilate(c), grid, policy, "c")


def weight_preceq_all_dila(v: Weight, w: Weight, grid: Grid | None = None,
                           policy: TrendPolicy = DEFAULT_POLICY) -> Verdict:
    """For every c > 0: v preceq dilate(w, c) (descending rungs)."""
    return _forall_ladder("preceq", v, lambda c: w.dilate(c), grid, policy, "c")


def weight_triangle_pow(v: Weight, w: Weight, grid: Grid | None = None,
                        policy: TrendPolicy = DEFAULT_POLICY) -> Verdict:
    """For every c > 0: c omega_w(t) - omega_v(t) -> +infinity.

    Computed along two deliberately distinct routes that must agree: divergence
    of the per-rung gap, and boundedness of v against every power of w.
    """
    diverge = _forall_ladder("triangle", v, lambda c: w.power(c), grid, policy, "c")
    bounded = _forall_ladder("preceq", v, lambda c: w.power(c), grid, policy, "c")
    return fuse_unanimous({"divergence_route": diverge, "bounded_route": bounded},
                          note_prefix="power-family comparison")
