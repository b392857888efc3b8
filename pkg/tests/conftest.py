"""Shared fixtures: expensive sequence constructions built once per session."""

from __future__ import annotations

import pytest

from growthcomp import gevrey, product, q_gevrey, standard_battery


@pytest.fixture(scope="session")
def g1():
    return gevrey(1.0)


@pytest.fixture(scope="session")
def g2():
    return gevrey(2.0)


@pytest.fixture(scope="session")
def g3():
    return gevrey(3.0)


@pytest.fixture(scope="session")
def ghalf():
    return gevrey(0.5)


@pytest.fixture(scope="session")
def q15():
    return q_gevrey(1.5)


@pytest.fixture(scope="session")
def q2():
    return q_gevrey(2.0)


@pytest.fixture(scope="session")
def fact_sq(g1):
    return product(g1, g1)


@pytest.fixture(scope="session")
def battery():
    return standard_battery()


@pytest.fixture(scope="session")
def small_battery():
    return standard_battery(64)
