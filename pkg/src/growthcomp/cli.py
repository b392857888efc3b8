"""Batch command-line front end.

Subcommands expose every analysis layer: single-sequence growth checks,
pairwise comparisons with their bridge fusions, weight-level analysis,
space-inclusion decisions, family-system equivalence, series-probe
evaluation, and the end-to-end verification suites.

Reports are deterministic: identical configuration and inputs produce
byte-identical output.  Floats are printed with 17 significant digits, the
effective configuration is echoed into every report, and nothing
time-dependent is emitted.  Exit codes: 0 for a report produced as expected
(for "verify": every suite passed), 1 when a verification suite fails, 2 for
usage, input, or routing errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

import numpy as np

from .acceptance import SUITES, run_suite
from .associated_weight import (OM1_LADDER, OM6_LADDER, om1_ladder, om6_ladder)
from .battery import standard_battery
from .config import BATTERIES, FORMATS, RunConfig, from_json
from .relations import bridge_pow_seq, bridge_triangle_seq
from .sequence_core import (WeightSequence, check_56_alternative, check_mg,
                            check_mg_diag, check_om1_index, check_strong_2j,
                            from_file, gevrey, is_LC, is_log_convex, q_gevrey,
                            seq_approx, seq_preceq, seq_triangle)
from .spaces import (FLAVORS, RoutingError, SpaceSpec, decide_inclusion,
                     system_equiv)
from .special_functions import THETA_KINDS, ThetaFunction, theta_eval
from .verdicts import Verdict, fails, holds
from .weight_functions import (Weight, associated_sequence, from_sequence,
                               from_table, is_convex_weight,
                               rapidly_decreasing, sandwich_check)

SEQUENCE_SOURCES = "gevrey:S | qgevrey:Q | file:PATH"


class UsageError(Exception):
    """Bad command-line input; reported on stderr with exit code 2."""


def _resolve_config(path: str | None, overrides: dict) -> RunConfig:
    """Defaults, then the optional config file, then explicit flags."""
    try:
        base = RunConfig() if path is None else from_json(path)
        return base.with_overrides(**overrides)
    except (OSError, json.JSONDecodeError, TypeError, ValueError) as exc:
        raise UsageError(f"bad configuration: {exc}") from exc


# ---------------------------------------------------------------------------
# input parsing
# ---------------------------------------------------------------------------

def parse_sequence(text: str, J: int) -> WeightSequence:
    kind, _, rest = text.partition(":")
    try:
        if kind == "gevrey" and rest:
            return gevrey(float(rest), J)
        if kind == "qgevrey" and rest:
            return q_gevrey(float(rest), J)
        if kind == "file" and rest:
            return from_file(rest)
    except (ValueError, OSError) as exc:
        raise UsageError(f"cannot build sequence from {text!r}: {exc}") from exc
    raise UsageError(f"unknown sequence source {text!r}; use {SEQUENCE_SOURCES}")


def parse_weight(text: str, J: int) -> Weight:
    """Weight source: a sequence source (its decreasing weight) or a
    tabulated file of 't,omega' rows."""
    kind, _, rest = text.partition(":")
    if kind == "file" and rest:
        try:
            rows = _read_pairs(Path(rest))
            return from_table([t for t, _ in rows], [w for _, w in rows],
                              label=Path(rest).stem)
        except (ValueError, OSError) as exc:
            raise UsageError(f"cannot build weight from {text!r}: {exc}") from exc
    return from_sequence(parse_sequence(text, J))


def _read_pairs(path: Path) -> list[tuple[float, float]]:
    rows: list[tuple[float, float]] = []
    for lineno, line in enumerate(path.read_text().splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise ValueError(f"{path}:{lineno}: expected 't,omega'")
        rows.append((float(parts[0]), float(parts[1])))
    if len(rows) < 2:
        raise ValueError(f"{path}: need at least two data rows")
    return rows


def parse_space(text: str, J: int) -> SpaceSpec:
    """FLAVOR:SOURCE with an optional trailing ':c=VALUE' member selector."""
    parts = text.split(":")
    if len(parts) < 2:
        raise UsageError(f"space spec {text!r} needs FLAVOR:SOURCE")
    flavor = parts[0]
    if flavor not in FLAVORS:
        raise UsageError(f"unknown flavor {flavor!r}; expected one of {FLAVORS}")
    c = None
    if parts[-1].startswith("c="):
        try:
            c = float(parts[-1][2:])
        except ValueError as exc:
            raise UsageError(f"bad member selector {parts[-1]!r}") from exc
        parts = parts[:-1]
    source = parse_sequence(":".join(parts[1:]), J)
    if flavor.startswith("Single") and c is None:
        c = 1.0
    try:
        return SpaceSpec(flavor, source, c=c)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# ---------------------------------------------------------------------------
# deterministic output
# ---------------------------------------------------------------------------

def _fmt(x: float) -> str:
    return f"{float(x):.17g}"


def _json_text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        rows = [f"{inner}{json.dumps(str(k))}: {_json_text(v, indent + 1)}"
                for k, v in obj.items()]
        return "{\n" + ",\n".join(rows) + f"\n{pad}}}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        rows = [f"{inner}{_json_text(v, indent + 1)}" for v in obj]
        return "[\n" + ",\n".join(rows) + f"\n{pad}]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt(obj)
    if obj is None:
        return "null"
    return json.dumps(str(obj))


def _verdict_entry(name: str, vd: Verdict) -> dict:
    return {"check": name,
            "state": vd.state.value,
            "witnesses": {k: float(v) for k, v in sorted(vd.witnesses.items())},
            "evidence": [[float(a), float(b)] for a, b in vd.evidence],
            "note": vd.note}


def _json_line(obj) -> str:
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_json_line(v)}"
                               for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_json_line(v) for v in obj) + "]"
    return _json_text(obj)


def _csv_cell(value) -> str:
    if isinstance(value, dict):
        return "|".join(f"{k}={_fmt(v)}" for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return "|".join(f"{_fmt(a)}:{_fmt(b)}" for a, b in value)
    if isinstance(value, (float, np.floating)):
        return _fmt(value)
    return str(value)


def emit(doc: dict, cfg: RunConfig) -> None:
    """One structured document, or config-echo comments plus CSV rows."""
    if cfg.fmt == "json":
        sys.stdout.write(_json_text(doc) + "\n")
        return
    out = io.StringIO()
    for key, value in doc.items():
        if key == "results":
            continue
        out.write(f"# {key}: {_json_line(value)}\n")
    rows = doc.get("results", [])
    if rows:
        fields = list(rows[0])
        writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _csv_cell(v) for k, v in row.items()})
    sys.stdout.write(out.getvalue())


def _base_doc(cfg: RunConfig, command: str, inputs: dict) -> dict:
    return {"command": command, "config": cfg.to_dict(), "inputs": inputs}


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_seq_analyze(cfg: RunConfig, source: str) -> int:
    M = parse_sequence(source, cfg.J)
    pol = cfg.policy()
    checks = [("log_convex", is_log_convex(M)),
              ("LC", is_LC(M, pol)),
              ("mg", check_mg(M, pol)),
              ("mg_diag", check_mg_diag(M, pol)),
              ("om1_index", check_om1_index(M, pol, L_max=cfg.L_max)),
              ("strong_2j", check_strong_2j(M, pol)),
              ("alternative_56", check_56_alternative(M, pol, C_max=cfg.C_max))]
    doc = _base_doc(cfg, "seq analyze", {"source": source, "label": M.label,
                                         "J": M.J})
    doc["results"] = [_verdict_entry(name, vd) for name, vd in checks]
    emit(doc, cfg)
    return 0


def cmd_seq_compare(cfg: RunConfig, source_a: str, source_b: str) -> int:
    A = parse_sequence(source_a, cfg.J)
    B = parse_sequence(source_b, cfg.J)
    pol = cfg.policy()
    checks = [("preceq_ab", seq_preceq(A, B, pol)),
              ("preceq_ba", seq_preceq(B, A, pol)),
              ("approx", seq_approx(A, B, pol)),
              ("triangle_ab", seq_triangle(A, B, pol)),
              ("triangle_ba", seq_triangle(B, A, pol)),
              ("bridge_triangle_ab", bridge_triangle_seq(A, B, policy=pol)),
              ("bridge_triangle_ba", bridge_triangle_seq(B, A, policy=pol)),
              ("bridge_pow_ab", bridge_pow_seq(A, B, policy=pol)),
              ("bridge_pow_ba", bridge_pow_seq(B, A, policy=pol))]
    doc = _base_doc(cfg, "seq compare", {"a": source_a, "b": source_b,
                                         "label_a": A.label, "label_b": B.label})
    doc["results"] = [_verdict_entry(name, vd) for name, vd in checks]
    emit(doc, cfg)
    return 0


def _normalized_check(u: Weight, cfg: RunConfig) -> Verdict:
    x = np.linspace(np.log(cfg.t_min), 0.0, 64)
    dev = np.abs(np.asarray(u.omega_log(x), dtype=float))
    k = int(np.argmax(dev))
    if dev[k] == 0.0:
        return holds(witnesses={"max_abs_low": 0.0},
                     note="identically one up to t = 1")
    return fails(evidence=((float(np.exp(x[k])), float(dev[k])),),
                 note="not pinned to one below t = 1; normalize() repairs this")


def cmd_weight_analyze(cfg: RunConfig, source: str) -> int:
    u = parse_weight(source, cfg.J)
    pol = cfg.policy()
    g = cfg.grid(u)
    h_values = tuple(H for H in OM6_LADDER if H <= cfg.H_max)

    def w(xs):
        return np.asarray(u.omega_log(xs), dtype=float)

    checks = [("normalized", _normalized_check(u, cfg)),
              ("rapidly_decreasing", rapidly_decreasing(u, g, pol)),
              ("convex_in_log", is_convex_weight(u, g)),
              ("om1_weight", om1_ladder(w, u.log_t_reliable,
                                        L_values=OM1_LADDER, n=cfg.cond_n)),
              ("om6_weight", om6_ladder(w, u.log_t_reliable,
                                        H_values=h_values, n=cfg.cond_n)),
              ("sandwich", sandwich_check(u, grid=g, J=cfg.J, policy=pol))]
    Mu = associated_sequence(u, J=cfg.J, grid=g, safety=cfg.safety)
    doc = _base_doc(cfg, "weight analyze",
                    {"source": source, "label": u.label,
                     "faithful_log_t": float(u.log_t_reliable)})
    doc["results"] = [_verdict_entry(name, vd) for name, vd in checks]
    doc["associated_sequence"] = {
        "J": Mu.J,
        "label": Mu.label,
        "reliable_max_index": int(Mu.meta.get("reliable_max_index", Mu.J)),
        "origin_shift": float(Mu.meta.get("origin_shift", 0.0)),
        "projection_magnitude": float(Mu.meta.get("projection_magnitude", 0.0)),
    }
    emit(doc, cfg)
    return 0


def cmd_spaces_decide(cfg: RunConfig, left: str, right: str) -> int:
    A = parse_space(left, cfg.J)
    B = parse_space(right, cfg.J)
    try:
        iv = decide_inclusion(A, B, policy=cfg.policy())
    except RoutingError as exc:
        raise UsageError(f"no decision route: {exc}") from exc
    doc = _base_doc(cfg, "spaces decide", {"left": left, "right": right})
    doc["results"] = [_verdict_entry("inclusion", iv.verdict)]
    doc["route"] = iv.theorem_tag
    doc["sides"] = {k: _verdict_entry(k, v) for k, v in sorted(iv.sides.items())}
    doc["preconditions"] = {k: _verdict_entry(k, v)
                            for k, v in sorted(iv.preconditions.items())}
    emit(doc, cfg)
    return 0


def cmd_system_equiv(cfg: RunConfig, source: str) -> int:
    M = parse_sequence(source, cfg.J)
    try:
        vd = system_equiv(M, cfg.policy())
    except RoutingError as exc:
        raise UsageError(str(exc)) from exc
    doc = _base_doc(cfg, "spaces system-equiv", {"source": source,
                                                 "label": M.label})
    doc["results"] = [_verdict_entry("system_equiv", vd)]
    emit(doc, cfg)
    return 0


def cmd_theta_eval(cfg: RunConfig, source: str, kind: str, c: float,
                   points: str) -> int:
    M = parse_sequence(source, cfg.J)
    try:
        ts = [float(p) for p in points.split(",") if p.strip()]
    except ValueError as exc:
        raise UsageError(f"bad evaluation points {points!r}") from exc
    if not ts:
        raise UsageError("need at least one evaluation point")
    try:
        T = ThetaFunction(M, kind, c)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rows = []
    for t in ts:
        try:
            val, err = theta_eval(T, t)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        rows.append({"t": float(t), "log_value": val, "tail_error": err})
    doc = _base_doc(cfg, "theta eval",
                    {"source": source, "kind": kind, "c": float(c),
                     "certified_log_t": float(T.log_t_certified)})
    doc["results"] = rows
    emit(doc, cfg)
    return 0


def cmd_verify(cfg: RunConfig, suite: str) -> int:
    battery = standard_battery(cfg.J)
    names = list(SUITES) if suite == "all" else [suite]
    results = [run_suite(name, battery) for name in names]
    doc = _base_doc(cfg, "verify", {"suite": suite})
    doc["results"] = [{"suite": r.name, "passed": r.passed, "detail": r.detail}
                      for r in results]
    doc["passed"] = all(r.passed for r in results)
    emit(doc, cfg)
    return 0 if doc["passed"] else 1


# ---------------------------------------------------------------------------
# argument wiring
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    run = shared.add_argument_group("run configuration")
    run.add_argument("--config", metavar="PATH",
                     help="JSON file with RunConfig fields; flags override it")
    run.add_argument("--grid-min", dest="t_min", type=float, metavar="T")
    run.add_argument("--grid-max", dest="t_max", type=float, metavar="T")
    run.add_argument("--grid-n", dest="grid_n", type=int, metavar="N")
    run.add_argument("--no-knots", dest="knot_augmented", action="store_false",
                     default=None, help="plain geometric grid, no knot points")
    run.add_argument("--J", dest="J", type=int, metavar="J",
                     help="index range for constructed sequences")
    run.add_argument("--margin", dest="margin", type=float, metavar="M",
                     help="trend slope threshold")
    run.add_argument("--L-max", dest="L_max", type=int, metavar="L")
    run.add_argument("--H-max", dest="H_max", type=float, metavar="H")
    run.add_argument("--C-max", dest="C_max", type=int, metavar="C")
    run.add_argument("--safety", dest="safety", type=float, metavar="S",
                     help="reliable-range fraction for recovered sequences")
    run.add_argument("--cond-n", dest="cond_n", type=int, metavar="N",
                     help="grid points per ladder-condition window")
    run.add_argument("--format", dest="fmt", choices=FORMATS)
    run.add_argument("--battery", dest="battery", choices=BATTERIES)

    parser = argparse.ArgumentParser(
        prog="growthcomp",
        description="Growth analysis and comparison of weight sequences, "
                    "weights, and the function spaces they define.")
    sub = parser.add_subparsers(dest="command", required=True)

    seq = sub.add_parser("seq", help="weight-sequence analyses")
    seq_sub = seq.add_subparsers(dest="subcommand", required=True)
    p = seq_sub.add_parser("analyze", parents=[shared],
                           help="growth conditions of one sequence")
    p.add_argument("source", help=SEQUENCE_SOURCES)
    p = seq_sub.add_parser("compare", parents=[shared],
                           help="comparison relations and bridges for a pair")
    p.add_argument("source_a", help=SEQUENCE_SOURCES)
    p.add_argument("source_b", help=SEQUENCE_SOURCES)

    weight = sub.add_parser("weight", help="weight-function analyses")
    weight_sub = weight.add_subparsers(dest="subcommand", required=True)
    p = weight_sub.add_parser("analyze", parents=[shared],
                              help="structure and growth of one weight")
    p.add_argument("source",
                   help=f"{SEQUENCE_SOURCES} (file: tabulated 't,omega' rows)")

    spaces = sub.add_parser("spaces", help="space-level decisions")
    spaces_sub = spaces.add_subparsers(dest="subcommand", required=True)
    p = spaces_sub.add_parser("decide", parents=[shared],
                              help="decide one inclusion between spaces")
    p.add_argument("--left", required=True, help="FLAVOR:SOURCE[:c=VALUE]")
    p.add_argument("--right", required=True, help="FLAVOR:SOURCE[:c=VALUE]")
    p = spaces_sub.add_parser("system-equiv", parents=[shared],
                              help="dilation family vs power family")
    p.add_argument("--seq", required=True, dest="source", help=SEQUENCE_SOURCES)

    theta = sub.add_parser("theta", help="canonical series probes")
    theta_sub = theta.add_subparsers(dest="subcommand", required=True)
    p = theta_sub.add_parser("eval", parents=[shared],
                             help="certified evaluation of a probe")
    p.add_argument("source", help=SEQUENCE_SOURCES)
    p.add_argument("--kind", choices=THETA_KINDS, default="dila")
    p.add_argument("--c", type=float, default=1.0, metavar="C")
    p.add_argument("--t", required=True, metavar="T1,T2,...",
                   help="comma-separated evaluation points")

    p = sub.add_parser("verify", parents=[shared],
                       help="run an end-to-end verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    return parser


_CONFIG_FIELDS = ("t_min", "t_max", "grid_n", "knot_augmented", "J", "margin",
                  "L_max", "C_max", "H_max", "safety", "cond_n", "fmt",
                  "battery")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _resolve_config(args.config,
                              {k: getattr(args, k, None)
                               for k in _CONFIG_FIELDS})
        if args.command == "seq" and args.subcommand == "analyze":
            return cmd_seq_analyze(cfg, args.source)
        if args.command == "seq" and args.subcommand == "compare":
            return cmd_seq_compare(cfg, args.source_a, args.source_b)
        if args.command == "weight":
            return cmd_weight_analyze(cfg, args.source)
        if args.command == "spaces" and args.subcommand == "decide":
            return cmd_spaces_decide(cfg, args.left, args.right)
        if args.command == "spaces" and args.subcommand == "system-equiv":
            return cmd_system_equiv(cfg, args.source)
        if args.command == "theta":
            return cmd_theta_eval(cfg, args.source, args.kind, args.c, args.t)
        if args.command == "verify":
            return cmd_verify(cfg, args.suite)
        parser.error(f"unhandled command {args.command!r}")
    except UsageError as exc:
        print(f"growthcomp: error: {exc}", file=sys.stderr)
        return 2
    except KeyboardInterrupt:
        return 130
    return 2


if __name__ == "__main__":
    sys.exit(main())
