"""Weighted spaces of entire functions and the inclusion decision engine.

A SpaceSpec names one of six flavors: a single weighted sup-norm space (O- or
little-o-growth) or a system over a dilation or power family of weights, taken
as a union (inductive) or intersection (projective).  decide_inclusion routes
a pair of specs to the characterization that actually covers it and returns
the tri-state relation verdict together with the route tag, the per-route
breakdown, and the precondition verdicts that license the route.  Pairs no
characterization covers raise RoutingError: "no route" is a different answer
from "route applied but the window could not decide", and the two are never
conflated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .associated_weight import check_om6_omega
from .grids import Grid, default_grid
from .relations import pow_routes, tildestrong_check, triangle_routes
from .sequence_core import (WeightSequence, check_mg, check_om1_index,
                            index_trend, is_LC)
from .trend import Trend, TrendPolicy, classify
from .verdicts import (State, Verdict, fails, fuse_conjunction, fuse_unanimous,
                       holds, inconclusive)
from .weight_functions import (EXIST_LADDER, FORALL_LADDER, Weight,
                               associated_sequence, check_om1_weight,
                               check_om6_weight, from_sequence,
                               is_convex_weight, sandwich_check,
                               strong_ratio_check, weight_preceq,
                               weight_triangle_dila, weight_triangle_pow)

DEFAULT_POLICY = TrendPolicy()
SINGLE_FLAVORS = ("SingleO", "SingleLittleO")
SYSTEM_FLAVORS = ("InductiveDila", "ProjectiveDila", "InductivePow", "ProjectivePow")
FLAVORS = SINGLE_FLAVORS + SYSTEM_FLAVORS
MIN_WINDOW_POINTS = 16


class RoutingError(Exception):
    """No characterization covers the requested pair of spaces."""


# ---------------------------------------------------------------------------
# space specifications
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SpaceSpec:
    """One weighted space or weight-system space.

    source is a WeightSequence (the weight is its associated decreasing
    weight) or a Weight directly.  c names a single family member where a
    flavor needs one; little_o marks the o-growth variant of a system.
    """

    flavor: str
    source: WeightSequence | Weight
    c: float | None = None
    little_o: bool = False

    def __post_init__(self) -> None:
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}; expected one of {FLAVORS}")
        if not isinstance(self.source, (WeightSequence, Weight)):
            raise ValueError("source must be a WeightSequence or a Weight")
        if self.little_o and self.flavor in SINGLE_FLAVORS:
            raise ValueError("little_o applies to systems; use SingleLittleO instead")

    @property
    def is_single(self) -> bool:
        return self.flavor in SINGLE_FLAVORS

    @property
    def axis(self) -> str | None:
        if self.flavor.endswith("Dila"):
            return "dila"
        if self.flavor.endswith("Pow"):
            return "pow"
        return None

    @property
    def mode(self) -> str | None:
        if self.flavor.startswith("Inductive"):
            return "inductive"
        if self.flavor.startswith("Projective"):
            return "projective"
        return None

    def weight(self) -> Weight:
        w = from_sequence(self.source) if isinstance(self.source, WeightSequence) else self.source
        if self.c is not None:
            w = w.dilate(self.c) if self.axis != "pow" else w.power(self.c)
        return w

    def sequence(self) -> WeightSequence | None:
        if isinstance(self.source, WeightSequence):
            return self.source
        if self.source.is_plain_sequence_weight:
            return self.source.source
        return None

    def describe(self) -> str:
        src = self.source.label or "unlabeled"
        tail = "" if self.c is None else f", c={self.c:g}"
        o = ", o-growth" if self.little_o else ""
        return f"{self.flavor}({src}{tail}{o})"


@dataclass(frozen=True, eq=False)
class InclusionVerdict:
    """Inclusion decision with its route and licensing preconditions."""

    verdict: Verdict
    theorem_tag: str
    sides: dict[str, Verdict] = field(default_factory=dict)
    preconditions: dict[str, Verdict] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.verdict.state is not State.INCONCLUSIVE and not self.theorem_tag:
            raise ValueError("a decisive inclusion must name its route")

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.to_dict(),
            "theorem_tag": self.theorem_tag,
            "sides": {k: v.to_dict() for k, v in self.sides.items()},
            "preconditions": {k: v.to_dict() for k, v in self.preconditions.items()},
        }


# ---------------------------------------------------------------------------
# routing helpers
# ---------------------------------------------------------------------------

def _plain_ratio_bounded(N: WeightSequence, M: WeightSequence,
                         policy: TrendPolicy) -> Verdict:
    """Exists A with N_j <= A * M_j (plain ratio, no j-th roots)."""
    J = min(M.J, N.J)
    d = N.log_values[1:J + 1] - M.log_values[1:J + 1]
    rep, (lo, hi) = index_trend(d, 1, policy)
    k = int(np.argmax(d)) + 1
    if rep.kind is Trend.RISING:
        return fails(evidence=((float(k), float(d.max())),),
                     note=f"plain ratio grows on j in [{lo},{hi}] (slope {rep.slope:.3g})")
    return holds(witnesses={"A": float(np.exp(max(0.0, float(d.max()))))},
                 evidence=((float(k), float(d.max())),),
                 note=f"plain ratio bounded on j in [{lo},{hi}]")


def _normalized_verdict(u: Weight) -> Verdict:
    if u.normalized:
        return holds(witnesses={"omega_at_1": 0.0}, note="constructed normalized")
    probe = np.array([-3.0, -1.0, 0.0])
    w = np.asarray(u.omega_log(probe), dtype=float)
    k = int(np.argmax(np.abs(w)))
    if float(np.max(np.abs(w))) <= 1e-9:
        return holds(witnesses={"omega_at_1": float(w[-1])},
                     note="omega vanishes up to t = 1")
    return fails(evidence=((float(np.exp(probe[k])), float(w[k])),),
                 note="omega does not vanish on t <= 1; normalize first")


def _o_collapse_gate(S: SpaceSpec, grid: Grid | None,
                     policy: TrendPolicy) -> Verdict:
    """License for reading an o-growth system as its O-growth counterpart."""
    if S.sequence() is not None:
        return holds(witnesses={"H": 1.0},
                     note="sequence-backed family: the o-growth and O-growth "
                          "systems define the same comparison problem")
    u = S.weight()
    conv = is_convex_weight(u, grid)
    if conv.fails:
        return fails(evidence=conv.evidence,
                     note="collapse gate needs omega convex in log t")
    rungs_failed = True
    for c in (2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 128.0, 256.0, 512.0, 1024.0):
        r = strong_ratio_check(u, c, 2.0, policy=policy)
        if r.holds:
            if conv.inconclusive:
                return inconclusive("iterated-ratio bound found but convexity undecided")
            return holds(witnesses={"H": float(c), **r.witnesses},
                         note=f"doubling absorbed by dilation {c:g}")
        if not r.fails:
            rungs_failed = False
    if rungs_failed and conv.holds:
        return fails(evidence=((2.0, 0.0),),
                     note="no dilation absorbs the doubling; o- and O-growth "
                          "systems may differ")
    return inconclusive("collapse gate undecided on the faithful window")


def _gate(rel: Verdict, precs: dict[str, Verdict]) -> Verdict:
    """Downgrade a decisive relation when a licensing precondition is not held."""
    bad = [name for name, v in precs.items() if not v.holds]
    if not bad or rel.state is State.INCONCLUSIVE:
        return rel
    return inconclusive(f"route precondition not established: {', '.join(sorted(bad))}",
                        witnesses=rel.witnesses, evidence=rel.evidence)


# ---------------------------------------------------------------------------
# the decision engine
# ---------------------------------------------------------------------------

def decide_inclusion(A: SpaceSpec, B: SpaceSpec, grid: Grid | None = None,
                     policy: TrendPolicy = DEFAULT_POLICY) -> InclusionVerdict:
    """Decide whether space A is contained in space B."""
    if A.is_single and B.is_single:
        return _decide_single(A, B, grid, policy)
    if A.is_single or B.is_single:
        raise RoutingError("no route between a single weighted space and a "
                           "weight-system space")
    return _decide_systems(A, B, grid, policy)


def _decide_single(A: SpaceSpec, B: SpaceSpec, grid: Grid | None,
                   policy: TrendPolicy) -> InclusionVerdict:
    u = A.weight()
    v = B.weight()
    precs: dict[str, Verdict] = {}
    if A.flavor != B.flavor:
        precs["o_vs_O_collapse"] = _o_collapse_gate(A, grid, policy)
    Ms = A.sequence()
    Ns = B.sequence()
    if Ms is not None and Ns is not None:
        precs["log_convex_left"] = is_LC(Ms, policy)
        precs["log_convex_right"] = is_LC(Ns, policy)
        rel = _plain_ratio_bounded(Ns, Ms, policy)
        return InclusionVerdict(_gate(rel, precs),
                                "plain-ratio comparison of sequence weights",
                                {"plain_ratio": rel}, precs)
    precs["essential_left"] = sandwich_check(u, grid)
    rel = weight_preceq(u, v, grid, policy)
    return InclusionVerdict(_gate(rel, precs), "weighted sup-norm comparison",
                            {"weight_order": rel}, precs)


def _same_source(A: SpaceSpec, B: SpaceSpec) -> bool:
    if A.source is B.source:
        return True
    sa, sb = A.sequence(), B.sequence()
    if sa is not None and sb is not None:
        return sa.J == sb.J and bool(np.array_equal(sa.log_values, sb.log_values))
    return False


def _decide_systems(A: SpaceSpec, B: SpaceSpec, grid: Grid | None,
                    policy: TrendPolicy) -> InclusionVerdict:
    precs: dict[str, Verdict] = {}
    if A.little_o:
        precs["o_collapse_left"] = _o_collapse_gate(A, grid, policy)
    if B.little_o:
        precs["o_collapse_right"] = _o_collapse_gate(B, grid, policy)

    if _same_source(A, B):
        if A.flavor == B.flavor:
            rel = holds(witnesses={"trivial": 1.0},
                        note="same flavor over the same source")
            return InclusionVerdict(_gate(rel, precs), "reflexive inclusion",
                                    {}, precs)
        if A.mode == B.mode and A.axis != B.axis:
            return _same_source_family_swap(A, B, grid, policy, precs)
        if A.axis == B.axis and A.mode == "projective" and B.mode == "inductive":
            rel = holds(witnesses={"c": 1.0},
                        note="the intersection over a family lies inside the "
                             "union over the same family")
            return InclusionVerdict(_gate(rel, precs), "projective-inside-inductive",
                                    {}, precs)
        # inductive into projective over one source is a genuine crossing;
        # fall through to the crossing routes below
        if not (A.mode == "inductive" and B.mode == "projective" and A.axis == B.axis):
            raise RoutingError("no route for this same-source flavor pair "
                               f"({A.flavor} vs {B.flavor})")

    if A.mode == "inductive" and B.mode == "projective" and A.axis == B.axis:
        if A.axis == "dila":
            return _crossing_dila(A, B, grid, policy, precs)
        return _crossing_pow(A, B, grid, policy, precs)

    raise RoutingError(f"no characterization covers {A.flavor} inside {B.flavor} "
                       "over different sources; only inductive-into-projective "
                       "crossings and same-source family comparisons are routed")


def _same_source_family_swap(A: SpaceSpec, B: SpaceSpec, grid: Grid | None,
                             policy: TrendPolicy,
                             precs: dict[str, Verdict]) -> InclusionVerdict:
    """Dilation family vs power family over one source, same mode.

    The inclusion holds iff the source absorbs the swap: union-of-dilations
    into union-of-powers (and intersection-of-powers into intersection-of-
    dilations) rides on the value-doubling condition; the two opposite swaps
    ride on moderate growth / the shift-doubling condition.
    """
    needs_om1 = ((A.mode == "inductive" and A.axis == "dila")
                 or (A.mode == "projective" and A.axis == "pow"))
    Ms = A.sequence()
    if Ms is not None:
        lc = is_LC(Ms, policy)
        if not lc.holds:
            raise RoutingError("same-source family comparison is characterized "
                               "only for normalized log-convex sequences with "
                               "diverging roots")
        cond = check_om1_index(Ms, policy) if needs_om1 else check_mg(Ms, policy)
        name = "index_doubling" if needs_om1 else "moderate_growth"
        return InclusionVerdict(_gate(cond, precs), "same-source family comparison",
                                {name: cond}, precs)
    u = A.weight()
    precs["normalized"] = _normalized_verdict(u)
    precs["convex"] = is_convex_weight(u, grid)
    cond = check_om1_weight(u) if needs_om1 else check_om6_weight(u)
    name = "value_doubling" if needs_om1 else "shift_doubling"
    return InclusionVerdict(_gate(cond, precs),
                            "same-source family comparison (weight)",
                            {name: cond}, precs)


def _crossing_dila(A: SpaceSpec, B: SpaceSpec, grid: Grid | None,
                   policy: TrendPolicy,
                   precs: dict[str, Verdict]) -> InclusionVerdict:
    Nseq = A.sequence()
    Mseq = B.sequence()
    if Nseq is not None and Mseq is not None:
        precs["log_convex_left"] = is_LC(Nseq, policy)
        precs["log_convex_right"] = is_LC(Mseq, policy)
        sides = triangle_routes(Mseq, Nseq, grid, policy)
        rel = fuse_unanimous(sides, note_prefix="strong comparison bridge")
        return InclusionVerdict(_gate(rel, precs), "dilation-system crossing",
                                sides, precs)
    u = A.weight()
    w = B.weight()
    precs["normalized_left"] = _normalized_verdict(u)
    precs["normalized_right"] = _normalized_verdict(w)
    precs["convex_left"] = is_convex_weight(u, grid)
    precs["shift_doubling_left"] = check_om6_weight(u)
    rel = weight_triangle_dila(u, w, grid, policy)
    return InclusionVerdict(_gate(rel, precs), "dilation-weight-system crossing",
                            {"dilation_gap": rel}, precs)


def _crossing_pow(A: SpaceSpec, B: SpaceSpec, grid: Grid | None,
                  policy: TrendPolicy,
                  precs: dict[str, Verdict]) -> InclusionVerdict:
    Nseq = A.sequence()
    Mseq = B.sequence()
    if Nseq is not None and Mseq is not None:
        precs["log_convex_left"] = is_LC(Nseq, policy)
        precs["log_convex_right"] = is_LC(Mseq, policy)
        sides = pow_routes(Mseq, Nseq, grid, policy)
        rel = fuse_unanimous(sides, note_prefix="power comparison bridge")
        return InclusionVerdict(_gate(rel, precs), "power-system crossing",
                                sides, precs)
    u = A.weight()
    w = B.weight()
    precs["convex_left"] = is_convex_weight(u, grid)
    sides = {"power_gap": weight_triangle_pow(u, w, grid, policy)}
    wc = is_convex_weight(w, grid)
    if wc.holds:
        Mu = associated_sequence(u, 512, grid)
        Mw = associated_sequence(w, 512, grid)
        sides["compressed_roots"] = tildestrong_check(Mw, Mu, policy)
        rel = fuse_unanimous(sides, note_prefix="power-weight-system crossing")
    else:
        rel = sides["power_gap"]
    return InclusionVerdict(_gate(rel, precs), "power-weight-system crossing",
                            sides, precs)


# ---------------------------------------------------------------------------
# family-equivalence front ends
# ---------------------------------------------------------------------------

def system_equiv(M: WeightSequence,
                 policy: TrendPolicy = DEFAULT_POLICY) -> Verdict:
    """Dilation family and power family over M span the same spaces.

    Characterized by the conjunction of the index doubling condition and
    moderate growth.  When moderate growth fails, the returned evidence lists
    one witness point (H, t) per dilation rung where 2*omega(t) > omega(H*t) + H.
    """
    lc = is_LC(M, policy)
    if not lc.holds:
        raise RoutingError("family equivalence is characterized only for "
                           "normalized log-convex sequences with diverging roots")
    om1 = check_om1_index(M, policy)
    mg = check_mg(M, policy)
    base = fuse_conjunction({"index_doubling": om1, "moderate_growth": mg},
                            note_prefix="dilation family vs power family")
    if base.fails and mg.fails:
        om6 = check_om6_omega(M)
        if om6.fails:
            return fails(witnesses=base.witnesses, evidence=om6.evidence,
                         note=base.note + "; evidence holds one (H, log t) per "
                              "rung with 2*omega(t) > omega(H*t) + H")
    return base


def system_equiv_weight(u: Weight, grid: Grid | None = None,
                        policy: TrendPolicy = DEFAULT_POLICY) -> Verdict:
    """Weight-system analogue of system_equiv, for normalized convex weights."""
    norm = _normalized_verdict(u)
    conv = is_convex_weight(u, grid)
    if not (norm.holds and conv.holds):
        return inconclusive("characterization needs a normalized convex weight "
                            f"(normalized={norm.state.value}, convex={conv.state.value})")
    return fuse_conjunction({"value_doubling": check_om1_weight(u),
                             "shift_doubling": check_om6_weight(u)},
                            note_prefix="dilation family vs power family (weight)")


# ---------------------------------------------------------------------------
# power series, norms, membership
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class PowerSeries:
    """Entire-function data: log |a_j| per coefficient; -inf encodes a_j = 0.

    complete marks a series whose stored coefficients are all of it (a
    polynomial); otherwise the data is read as a truncation and conclusions
    are restricted to the window where the top index does not dominate.
    """

    log_abs_coeffs: np.ndarray
    label: str = ""
    complete: bool = False

    def __post_init__(self) -> None:
        arr = np.asarray(self.log_abs_coeffs, dtype=float)
        if arr.ndim != 1 or len(arr) < 1:
            raise ValueError("need a one-dimensional coefficient array")
        if np.any(np.isnan(arr)) or np.any(arr == np.inf):
            raise ValueError("log-coefficients must be in [-inf, inf)")
        if not np.any(np.isfinite(arr)):
            raise ValueError("need at least one nonzero coefficient")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "log_abs_coeffs", arr)

    @property
    def truncation(self) -> int:
        return len(self.log_abs_coeffs) - 1

    @cached_property
    def top_index(self) -> int:
        return int(np.max(np.nonzero(np.isfinite(self.log_abs_coeffs))[0]))


def log_series_eval(f: PowerSeries, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """log sum_j |a_j| t^j at x = log t, plus the dominant index per point."""
    c = f.log_abs_coeffs
    idx = np.nonzero(np.isfinite(c))[0]
    cf = c[idx]
    js = idx.astype(float)
    vals = np.empty(len(x))
    args = np.empty(len(x), dtype=int)
    for lo in range(0, len(x), 512):
        blk = x[lo:lo + 512]
        terms = cf[:, None] + js[:, None] * blk[None, :]
        k = terms.argmax(axis=0)
        m = terms[k, np.arange(terms.shape[1])]
        vals[lo:lo + 512] = m + np.log(np.exp(terms - m[None, :]).sum(axis=0))
        args[lo:lo + 512] = idx[k]
    return vals, args


def norm_estimate(f: PowerSeries, v: Weight, grid: Grid | None = None
                  ) -> tuple[float, float]:
    """Bracket for log sup_t (sum_j |a_j| t^j) * v(t).

    The lower bound is the grid supremum.  The upper bound adds a Lipschitz
    margin between samples and is finite only when the weight's end slope
    exceeds the series' top power, so the supremum is certified interior;
    it assumes omega is non-decreasing with its steepest slope at the end
    (true for convex weights).
    """
    g = (grid if grid is not None else default_grid()).clip(None, v.log_t_reliable)
    if g is None or len(g) < 2:
        raise ValueError("faithful range leaves no usable grid")
    x = g.log_t
    logf, _ = log_series_eval(f, x)
    w = np.asarray(v.omega_log(x), dtype=float)
    h = logf - w
    i = int(np.argmax(h))
    lower = float(h[i])
    k_end = float((w[-1] - w[-2]) / (x[-1] - x[-2]))
    if k_end > f.top_index and 0 < i < len(x) - 1:
        dx = float(np.max(np.diff(x)))
        upper = lower + 0.5 * dx * (f.top_index + max(k_end, 0.0))
    else:
        upper = float("inf")
    return lower, upper


def _series_vs_weight(f: PowerSeries, v: Weight, grid: Grid,
                      policy: TrendPolicy, little_o: bool) -> Verdict:
    if f.complete and v.source is not None:
        # a polynomial against any sequence-backed weight: the sequence's
        # roots diverge, so omega outruns every fixed power of t and the
        # weighted modulus decays; the grid supremum is reported as a floor
        # for the norm, not as a certified bound
        g0 = grid.clip(None, v.log_t_reliable)
        window_sup = 0.0
        ev: tuple = ()
        if g0 is not None and len(g0) >= 2:
            vals, _ = log_series_eval(f, g0.log_t)
            d0 = vals - np.asarray(v.omega_log(g0.log_t), dtype=float)
            k0 = int(np.argmax(d0))
            window_sup = float(d0[k0])
            ev = ((float(np.exp(g0.log_t[k0])), window_sup),)
        return holds(witnesses={"top_index": float(f.top_index),
                                "window_sup": window_sup},
                     evidence=ev,
                     note="polynomial modulus decays against every weight "
                          "backed by a sequence with diverging roots")
    g = grid.clip(None, v.log_t_reliable)
    if g is None or len(g) < MIN_WINDOW_POINTS:
        return inconclusive("faithful range leaves no window")
    x = g.log_t
    logf, args = log_series_eval(f, x)
    interior = np.ones(len(x), dtype=bool) if f.complete else args < f.top_index
    if int(interior.sum()) < MIN_WINDOW_POINTS:
        return inconclusive("series truncation dominates the window")
    xs = x[interior]
    d = logf[interior] - np.asarray(v.omega_log(xs), dtype=float)
    rep = classify(xs, d, policy)
    k = int(np.argmax(d))
    if little_o:
        if rep.kind is Trend.FALLING:
            return holds(witnesses={"decay_slope": rep.slope},
                         evidence=((float(np.exp(xs[-1])), float(d[-1])),),
                         note="weighted modulus decays on the window")
        return fails(evidence=((float(np.exp(xs[k])), float(d[k])),),
                     note=f"weighted modulus does not decay (slope {rep.slope:.3g})")
    if rep.kind is Trend.RISING:
        return fails(evidence=((float(np.exp(xs[k])), float(d[k])),),
                     note=f"weighted modulus grows (slope {rep.slope:.3g})")
    return holds(witnesses={"log_norm_bound": float(d[k])},
                 evidence=((float(np.exp(xs[k])), float(d[k])),),
                 note="weighted modulus bounded on the window")


def membership(f: PowerSeries, S: SpaceSpec, grid: Grid | None = None,
               policy: TrendPolicy = DEFAULT_POLICY) -> Verdict:
    """Does the series belong to the space, judged on the faithful window."""
    g = grid if grid is not None else default_grid()
    if S.is_single:
        return _series_vs_weight(f, S.weight(), g, policy,
                                 S.flavor == "SingleLittleO")
    v = from_sequence(S.source) if isinstance(S.source, WeightSequence) else S.source
    little = S.little_o
    make = (lambda c: v.dilate(c)) if S.axis == "dila" else (lambda c: v.power(c))
    if S.mode == "inductive":
        undecided = False
        evid: list[tuple[float, float]] = []
        for c in EXIST_LADDER:
            r = _series_vs_weight(f, make(c), g, policy, little)
            if r.holds:
                return holds(witnesses={"c": float(c), **r.witnesses},
                             evidence=r.evidence,
                             note=f"admitted at family member c={c:g}")
            if r.inconclusive:
                undecided = True
            else:
                evid.extend(r.evidence[:1])
        if undecided:
            return inconclusive("some family members window-limited and none admitted")
        return fails(evidence=tuple(evid[:4]),
                     note=f"no family member up to c={EXIST_LADDER[-1]:g} admits the series")
    held: list[float] = []
    undecided = False
    for c in FORALL_LADDER:
        r = _series_vs_weight(f, make(c), g, policy, little)
        if r.fails:
            return fails(evidence=r.evidence,
                         note=f"rejected at family member c={c:g}")
        if r.holds:
            held.append(c)
        else:
            undecided = True
    if undecided or not held:
        return inconclusive("some family members window-limited; none rejected")
    return holds(witnesses={"hardest_c": float(min(held))},
                 note=f"admitted at every family member down to c={min(held):g}")
