"""Space layer: inclusion routing, family equivalence, membership."""

from __future__ import annotations

import numpy as np
import pytest

from growthcomp import (FLAVORS, PowerSeries, RoutingError, SpaceSpec,
                        ThetaFunction, decide_inclusion, from_sequence,
                        from_values, gevrey, log_series_eval, membership,
                        monomial, norm_estimate, seq_preceq, system_equiv,
                        system_equiv_weight, theta_series)
from growthcomp.associated_weight import OM6_LADDER

# ---------------------------------------------------------------------------
# space specifications
# ---------------------------------------------------------------------------

def test_spec_axis_and_mode(g1):
    S = SpaceSpec("InductiveDila", g1)
    assert S.axis == "dila" and S.mode == "inductive" and not S.is_single
    T = SpaceSpec("SingleO", g1, c=1.0)
    assert T.axis is None and T.mode is None and T.is_single


def test_spec_validation(g1):
    with pytest.raises(ValueError, match="flavor"):
        SpaceSpec("Bogus", g1)
    with pytest.raises(ValueError, match="source"):
        SpaceSpec("SingleO", "notasequence")
    with pytest.raises(ValueError, match="little_o"):
        SpaceSpec("SingleLittleO", g1, little_o=True)


def test_spec_describe(g1):
    assert SpaceSpec("SingleO", g1, c=2.0).describe() == "SingleO(gevrey(1), c=2)"


# ---------------------------------------------------------------------------
# inclusion routing
# ---------------------------------------------------------------------------

def test_crossing_orientation(g1, g2):
    for axis in ("Dila", "Pow"):
        up = decide_inclusion(SpaceSpec("Inductive" + axis, g2),
                              SpaceSpec("Projective" + axis, g1))
        down = decide_inclusion(SpaceSpec("Inductive" + axis, g1),
                                SpaceSpec("Projective" + axis, g2))
        assert up.verdict.holds and up.theorem_tag
        assert down.verdict.fails


def test_little_o_systems_match_big_o(g1, g2):
    for axis in ("Dila", "Pow"):
        for X, Y in ((g1, g2), (g2, g1)):
            big = decide_inclusion(SpaceSpec("Inductive" + axis, X),
                                   SpaceSpec("Projective" + axis, Y))
            small = decide_inclusion(
                SpaceSpec("Inductive" + axis, X, little_o=True),
                SpaceSpec("Projective" + axis, Y, little_o=True))
            assert big.verdict.state is small.verdict.state


def test_same_source_family_swap(g1, q15):
    for M in (g1, q15):
        iv = decide_inclusion(SpaceSpec("InductiveDila", M),
                              SpaceSpec("InductivePow", M))
        assert iv.verdict.holds
        assert iv.theorem_tag == "same-source family comparison"
    # the projective swap is where the q-family separates
    assert decide_inclusion(SpaceSpec("ProjectiveDila", g1),
                            SpaceSpec("ProjectivePow", g1)).verdict.holds
    assert decide_inclusion(SpaceSpec("ProjectiveDila", q15),
                            SpaceSpec("ProjectivePow", q15)).verdict.fails


def test_single_space_inclusions_track_plain_ratio(g1, g2, battery):
    A = SpaceSpec("SingleO", g1, c=1.0)
    B = SpaceSpec("SingleO", g2, c=1.0)
    assert decide_inclusion(A, A).verdict.holds
    assert decide_inclusion(B, A).verdict.holds
    assert decide_inclusion(A, B).verdict.fails
    assert decide_inclusion(A, B).theorem_tag == \
        "plain-ratio comparison of sequence weights"
    # soundness against the sequence order on a decisive battery slice
    agreements = 0
    for M in battery[:6]:
        for N in battery[:6]:
            iv = decide_inclusion(SpaceSpec("SingleO", M, c=1.0),
                                  SpaceSpec("SingleO", N, c=1.0))
            rel = seq_preceq(N, M)
            if iv.verdict.state.value != "Inconclusive" and \
                    rel.state.value != "Inconclusive":
                assert iv.verdict.holds == rel.holds, (M.label, N.label)
                agreements += 1
    assert agreements >= 20


def test_unrouted_pairs_raise(g1, q15):
    with pytest.raises(RoutingError, match="single weighted space"):
        decide_inclusion(SpaceSpec("SingleO", g1, c=1.0),
                         SpaceSpec("InductiveDila", q15))
    with pytest.raises(RoutingError, match="ProjectiveDila inside Inductive"):
        decide_inclusion(SpaceSpec("ProjectiveDila", g1),
                         SpaceSpec("InductiveDila", q15))


# ---------------------------------------------------------------------------
# family-system equivalence
# ---------------------------------------------------------------------------

def test_system_equivalence_discriminates(g1, q15):
    assert system_equiv(g1).holds
    vd = system_equiv(q15)
    assert vd.fails
    assert sorted({H for H, _ in vd.evidence}) == sorted(OM6_LADDER)


def test_system_equivalence_from_weight(g1):
    assert system_equiv_weight(from_sequence(g1)).holds


def test_system_equivalence_needs_log_convexity():
    with pytest.raises(RoutingError):
        system_equiv(from_values([0.0, 2.0, 2.5, 6.0]))


# ---------------------------------------------------------------------------
# series membership
# ---------------------------------------------------------------------------

def test_monomials_belong_everywhere(g1):
    f = monomial(2)
    for flavor in FLAVORS:
        c = 1.0 if flavor.startswith("Single") else None
        assert membership(f, SpaceSpec(flavor, g1, c=c)).holds, flavor


def test_theta_separates_the_dilation_modes(g1):
    f = theta_series(ThetaFunction(g1, "dila", 1.0))
    assert membership(f, SpaceSpec("InductiveDila", g1)).holds
    assert membership(f, SpaceSpec("ProjectiveDila", g1)).fails


def test_norm_estimate_brackets(g1):
    lo, hi = norm_estimate(monomial(2), from_sequence(g1))
    assert lo <= hi and np.isfinite(hi)


def test_series_evaluation_of_monomials():
    f = monomial(3, log_scale=np.log(2.0))
    x = np.array([0.0, 1.0, 2.5])
    val, arg = log_series_eval(f, x)
    np.testing.assert_allclose(val, np.log(2.0) + 3.0 * x, rtol=0, atol=1e-12)
    np.testing.assert_array_equal(arg, [3, 3, 3])
    assert f.complete and f.top_index == 3


def test_power_series_guards():
    with pytest.raises(ValueError):
        PowerSeries(np.array([np.inf]))
    with pytest.raises(ValueError):
        PowerSeries(np.array([-np.inf, -np.inf]))
    with pytest.raises(ValueError):
        PowerSeries(np.zeros((2, 2)))
    s = PowerSeries(np.array([0.0, -np.inf, 1.0]))
    assert s.truncation == 2 and s.top_index == 2
