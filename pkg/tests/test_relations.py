"""Pair relations: dual-route bridges, transfer results, verdict fusion."""

from __future__ import annotations

import numpy as np
import pytest

from growthcomp import (Verdict, bridge_pow_seq, bridge_triangle_seq,
                        check_mg, fails, fuse_conjunction, fuse_unanimous,
                        holds, inconclusive, mg_transfer_check, mixture,
                        omega_little_o, pow_routes, product, scale_pow,
                        seq_approx, seq_preceq, tildestrong_check,
                        triangle_routes)

# ---------------------------------------------------------------------------
# frozen bridge outcomes
# ---------------------------------------------------------------------------

def test_bridge_truth_table(g1, g2, ghalf, q15, q2):
    crawler = product(ghalf, q15)
    table = [
        (g1, g2, "Holds", "Holds"),
        (g2, g1, "Fails", "Fails"),
        (g1, g1, "Fails", "Fails"),
        (q15, q2, "Holds", "Fails"),
        (g1, q15, "Holds", "Holds"),
        (q15, g1, "Fails", "Fails"),
        (q15, crawler, "Holds", "Fails"),
    ]
    for A, B, tri, pw in table:
        assert bridge_triangle_seq(A, B).state.value == tri, (A.label, B.label)
        assert bridge_pow_seq(A, B).state.value == pw, (A.label, B.label)


def test_routes_are_unanimous_for_factorial_pair(g1, fact_sq):
    tri = triangle_routes(g1, fact_sq)
    assert sorted(tri) == ["dilation_bounds", "dilation_gap", "roots"]
    assert all(v.holds for v in tri.values())
    pw = pow_routes(g1, fact_sq)
    assert sorted(pw) == ["compressed_roots", "omega_ratio", "power_gap"]
    assert all(v.holds for v in pw.values())


def test_bridge_agrees_with_its_routes(g1, q15):
    for A, B in ((g1, q15), (q15, g1)):
        states = {v.state for v in triangle_routes(A, B).values()}
        fused = bridge_triangle_seq(A, B)
        if len(states) == 1:
            assert fused.state in states


# ---------------------------------------------------------------------------
# transfer and ordering results
# ---------------------------------------------------------------------------

def test_mg_transfers_along_equivalence(g1, g2):
    assert mg_transfer_check(g1, scale_pow(g1, 2.0)).holds
    assert mg_transfer_check(g1, g2).state.value == "Inconclusive"


def test_little_o_orientation(g1, g2):
    assert omega_little_o(g2, g1).holds
    assert omega_little_o(g1, g2).fails
    assert omega_little_o(g1, g1).fails


def test_tildestrong_orientation(g1, fact_sq):
    assert tildestrong_check(g1, fact_sq).holds
    assert tildestrong_check(fact_sq, g1).fails


def test_approx_is_transitive_on_decided_triples(g1, g2, g3):
    chain = [g1, scale_pow(g1, 2.0), scale_pow(g1, 0.5)]
    for A in chain:
        for B in chain:
            assert seq_approx(A, B).holds
    assert seq_approx(g1, g2).fails and seq_approx(g2, g3).fails


def test_strong_comparison_implies_power_comparison(g1, g2, q15, q2,
                                                    fact_sq, ghalf):
    # whenever one side has moderate growth, the strong route forces the
    # power route on the same ordered pair
    members = (g1, g2, q15, q2, fact_sq, product(ghalf, q15))
    premises = 0
    for A in members:
        for B in members:
            if A is B:
                continue
            if not (check_mg(A).holds or check_mg(B).holds):
                continue
            if bridge_triangle_seq(A, B).holds:
                assert bridge_pow_seq(A, B).holds, (A.label, B.label)
                premises += 1
    assert premises >= 3


def test_preceq_respects_mixture_bounds(g1, q15):
    mix = mixture(g1, q15)
    assert seq_preceq(g1, mix).holds
    assert seq_preceq(q15, mix).holds


# ---------------------------------------------------------------------------
# verdict fusion
# ---------------------------------------------------------------------------

def _h() -> Verdict:
    return holds(witnesses={"C": 1.0})


def _f() -> Verdict:
    return fails(evidence=((1.0, 2.0),))


def test_decisive_verdicts_need_support():
    with pytest.raises(ValueError, match="witness"):
        holds()
    with pytest.raises(ValueError, match="witness"):
        fails()


def test_unanimous_fusion():
    assert fuse_unanimous({"a": _h(), "b": _h()}).holds
    assert fuse_unanimous({"a": _f(), "b": _f()}).fails
    mixed = fuse_unanimous({"a": _h(), "b": _f()}, note_prefix="probe")
    assert mixed.state.value == "Inconclusive"
    assert mixed.note.startswith("probe:")
    thin = fuse_unanimous({"a": _h(), "b": inconclusive("thin")})
    assert thin.state.value == "Inconclusive"


def test_conjunctive_fusion():
    assert fuse_conjunction({"a": _h(), "b": _h()}).holds
    v = fuse_conjunction({"a": _h(), "b": _f()})
    assert v.fails and "failing: b" in v.note


def test_verdict_serialization():
    d = holds(witnesses={"C": 2.0}, note="n").to_dict()
    assert d == {"state": "Holds", "witnesses": {"C": 2.0}, "evidence": [],
                 "note": "n"}
