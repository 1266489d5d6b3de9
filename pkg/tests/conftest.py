import pytest

from helpers import (
    quiver_a2,
    quiver_a3,
    quiver_d4,
    quiver_d4_tilde,
    quiver_e8_tilde,
    quiver_jordan,
    quiver_kronecker,
    quiver_two_loop,
)


@pytest.fixture
def a2():
    return quiver_a2()


@pytest.fixture
def a3():
    return quiver_a3()


@pytest.fixture
def d4():
    return quiver_d4()


@pytest.fixture
def d4_tilde():
    return quiver_d4_tilde()


@pytest.fixture
def e8_tilde():
    return quiver_e8_tilde()


@pytest.fixture
def kronecker():
    return quiver_kronecker()


@pytest.fixture
def jordan():
    return quiver_jordan()


@pytest.fixture
def two_loop():
    return quiver_two_loop()
