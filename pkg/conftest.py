import pytest

import cartan_type as ct
import chevalley as chev

"""
conftest.py holds the algebras shared by the test modules. They are built once per session; tests must not mutate
them.
"""


@pytest.fixture(scope='session')
def sl2_p3():
    return chev.classical_algebra('sl', 2, 3)


@pytest.fixture(scope='session')
def g2_p3():
    return chev.chevalley_algebra('G2', 3)


@pytest.fixture(scope='session')
def g2_p5():
    return chev.chevalley_algebra('G2', 5)


@pytest.fixture(scope='session')
def f4_p3():
    return chev.chevalley_algebra('F4', 3)


@pytest.fixture(scope='session')
def witt_p5():
    return ct.cartan_algebra('W', 1, 1, 5)
