import pytest

from invol.algebras import parse_algebra
from invol.fields import PrimeField, Rationals


@pytest.fixture(scope="session")
def Q():
    return Rationals()


@pytest.fixture(scope="session")
def GF5():
    return PrimeField(5)


@pytest.fixture(scope="session")
def alg(Q):
    """Factory for algebra instances: alg('mat:3:transpose'), alg('quat', GF5)."""

    def build(spec, field=None):
        return parse_algebra(spec, field if field is not None else Q)

    return build


# the instance set exercised throughout the suite
NONCOMMUTATIVE_S = [
    "mat:2:transpose",
    "mat:3:transpose",
    "mat:4:transpose",
    "mat:5:transpose",
    "mat:4:symplectic",
    "mat:6:symplectic",
]
COMMUTATIVE_S = ["mat:2:symplectic", "quat"]
ALL_INSTANCES = NONCOMMUTATIVE_S + COMMUTATIVE_S
