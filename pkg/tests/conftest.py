"""Shared fixtures: root systems and the F4 census, computed once per session."""

import pytest

from sphsys import build_root_system, make_system
from sphsys.enumeration import census


@pytest.fixture(scope="session")
def f4():
    return build_root_system("F4")


@pytest.fixture(scope="session")
def f4_census():
    return census("F4")


@pytest.fixture(scope="session")
def a3_census():
    return census("A3")


@pytest.fixture(scope="session")
def rank1_omega4(f4):
    # the unique rank-1 system whose spherical root is the highest short root
    return make_system(f4, [(1, 2, 3, 2)], [0, 1, 2], [])
