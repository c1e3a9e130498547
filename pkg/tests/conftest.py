from fractions import Fraction

import pytest

from bruhatcap import build, generate


@pytest.fixture(scope="session")
def a2():
    return build("A", 2)


@pytest.fixture(scope="session")
def a3():
    return build("A", 3)


@pytest.fixture(scope="session")
def b2():
    return build("B", 2)


@pytest.fixture(scope="session")
def b3():
    return build("B", 3)


@pytest.fixture(scope="session")
def g2():
    return build("G", 2)


@pytest.fixture(scope="session")
def w_a2(a2):
    return generate(a2)


@pytest.fixture(scope="session")
def w_a3(a3):
    return generate(a3)


@pytest.fixture(scope="session")
def w_b2(b2):
    return generate(b2)


@pytest.fixture(scope="session")
def w_b3(b3):
    return generate(b3)


@pytest.fixture(scope="session")
def w_g2(g2):
    return generate(g2)


def F(*args):
    return Fraction(*args)
