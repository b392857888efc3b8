"""End-to-end acceptance battery: one test and one printed line per suite.

Every suite runs against the standard battery (Gevrey, q-Gevrey, products,
pairwise mixtures at J = 512) and must finish within the shared runtime
budget.
"""

from __future__ import annotations

import time

from growthcomp.acceptance import run_suite

RUNTIME_BUDGET_S = 60.0

_durations: dict[str, float] = {}


def _check(name: str, battery) -> None:
    t0 = time.perf_counter()
    result = run_suite(name, battery)
    _durations[name] = time.perf_counter() - t0
    print("\n" + result.line())
    assert result.passed, result.detail


def test_acceptance_roundtrip(battery):
    _check("roundtrip", battery)


def test_acceptance_envelope(battery):
    _check("envelope", battery)


def test_acceptance_dual_routes(battery):
    _check("dual-routes", battery)


def test_acceptance_growth_chains(battery):
    _check("growth-chains", battery)


def test_acceptance_theta_envelope(battery):
    _check("theta-envelope", battery)


def test_acceptance_fixed_point(battery):
    _check("fixed-point", battery)


def test_acceptance_bridges(battery):
    _check("bridges", battery)


def test_acceptance_falsification(battery):
    _check("falsification", battery)


def test_acceptance_system_equivalence(battery):
    _check("system-equivalence", battery)


def test_acceptance_membership_matrix(battery):
    _check("membership-matrix", battery)


def test_acceptance_runtime_budget():
    assert len(_durations) == 10
    total = sum(_durations.values())
    print(f"\nPASS  runtime: {total:.1f}s for 10 suites "
          f"(budget {RUNTIME_BUDGET_S:.0f}s)")
    assert total < RUNTIME_BUDGET_S, _durations
