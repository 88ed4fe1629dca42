import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from invol.fields import Rationals
from invol.algebras import (
    AlgebraMismatchError,
    UnsupportedOperationError,
    devectorize,
    matrix_algebra,
    quaternion_algebra,
)


def test_make_algebra_examples(Q):
    assert matrix_algebra(Q, 3, "transpose").dim == 9
    assert quaternion_algebra(Q).dim == 4
    with pytest.raises(ValueError):
        matrix_algebra(Q, 3, "symplectic")
    with pytest.raises(ValueError):
        matrix_algebra(Q, 2, "conjugation")
    with pytest.raises(ValueError):
        matrix_algebra(Q, 0, "transpose")


def test_matrix_unit_products(alg):
    A = alg("mat:2:transpose")
    e = A.matrix_unit
    assert e(1, 2) * e(2, 1) == e(1, 1)
    assert (e(1, 2) * e(1, 2)).is_zero()


def test_quaternion_products(alg):
    H = alg("quat")
    i, j, k = (H.quaternion_unit(n) for n in "ijk")
    assert j * k == i
    assert k * i == j
    assert i * j == k
    assert i * i == -H.unit()
    assert i.star() == -i


def test_algebra_mismatch(alg):
    with pytest.raises(AlgebraMismatchError):
        alg("mat:2:transpose").unit() + alg("mat:2:symplectic").unit()


def test_transpose_star(alg):
    A = alg("mat:3:transpose")
    assert A.matrix_unit(1, 2).star() == A.matrix_unit(2, 1)


def test_symplectic_star_matches_conjugation_by_j(alg):
    # X* = J X^T J^{-1} with J = [[0, I], [-I, 0]]
    A = alg("mat:4:symplectic")
    T = alg("mat:4:transpose")
    J = A.from_rows([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
    rng = random.Random(11)
    for _ in range(25):
        x = A.random_element(rng)
        xt = A.element(T.star_coords(x.coords))
        assert x.star() == J * xt * (-J)


def test_symplectic_star_examples(alg):
    A = alg("mat:4:symplectic")
    e = A.matrix_unit
    assert e(1, 4).star() == -e(2, 3)
    assert (e(1, 4) - e(2, 3)).is_symmetric()
    assert e(2, 4).is_skew()


RATIONALS = Rationals()


def _coords(dim):
    return st.lists(st.integers(-5, 5), min_size=dim, max_size=dim)


@given(a=_coords(9), b=_coords(9))
def test_involution_laws_transpose(a, b):
    A = matrix_algebra(RATIONALS, 3, "transpose")
    x, y = A.element(a), A.element(b)
    assert (x * y).star() == y.star() * x.star()
    assert (x + y).star() == x.star() + y.star()
    assert x.star().star() == x
    assert A.unit().star() == A.unit()


@given(a=_coords(4), b=_coords(4))
def test_involution_laws_quaternions(a, b):
    H = quaternion_algebra(RATIONALS)
    x, y = H.element(a), H.element(b)
    assert (x * y).star() == y.star() * x.star()
    assert x.star().star() == x


@given(a=_coords(16), b=_coords(16))
def test_involution_laws_symplectic(a, b):
    A = matrix_algebra(RATIONALS, 4, "symplectic")
    x, y = A.element(a), A.element(b)
    assert (x * y).star() == y.star() * x.star()
    assert x.star().star() == x


def test_sk_split_examples(alg):
    A = alg("mat:2:transpose")
    e = A.matrix_unit
    s, k = e(1, 2).sk_split()
    assert s == (e(1, 2) + e(2, 1)).scale(Fraction(1, 2))
    assert k == (e(1, 2) - e(2, 1)).scale(Fraction(1, 2))
    sym = e(1, 1) + e(2, 2).scale(3)
    assert sym.sk_split() == (sym, A.zero())


def test_sk_split_general_2x2(alg):
    A = alg("mat:2:transpose")
    a, b, c, d = Fraction(2), Fraction(5), Fraction(-1), Fraction(4)
    r = A.from_rows([[a, b], [c, d]])
    s, k = r.sk_split()
    half = Fraction(1, 2)
    assert s == A.from_rows([[a, half * (b + c)], [half * (b + c), d]])
    assert k == A.from_rows([[0, half * (b - c)], [half * (c - b), 0]])
    assert s + k == r and s.is_symmetric() and k.is_skew()


@given(a=_coords(16))
def test_sk_split_roundtrip(a):
    A = matrix_algebra(RATIONALS, 4, "symplectic")
    r = A.element(a)
    s, k = r.sk_split()
    assert s + k == r and s.is_symmetric() and k.is_skew()


def test_right_inverse_examples(alg):
    A = alg("mat:2:transpose")
    e = A.matrix_unit
    value = (e(1, 2) - e(2, 1)).scale(2)
    assert value.right_inverse() == (e(2, 1) - e(1, 2)).scale(Fraction(1, 2))
    assert A.unit().right_inverse() == A.unit()


def test_skew_3x3_never_invertible(alg):
    A = alg("mat:3:transpose")
    rng = random.Random(5)
    for _ in range(15):
        r = A.random_element(rng)
        k = r.sk_split()[1]
        assert k.right_inverse() is None


def test_right_inverse_is_two_sided(alg):
    A = alg("mat:3:transpose")
    rng = random.Random(9)
    hits = 0
    for _ in range(10):
        r = A.random_element(rng)
        inv = r.right_inverse()
        if inv is not None:
            hits += 1
            assert r * inv == A.unit() and inv * r == A.unit()
    assert hits > 0


def test_lie_jordan_examples(alg):
    A = alg("mat:2:transpose")
    e = A.matrix_unit
    x, y = e(1, 1) - e(2, 2), e(1, 2) + e(2, 1)
    assert x.lie(y) == (e(1, 2) - e(2, 1)).scale(2)
    assert e(1, 1).jordan(y) == y
    assert x.lie(x).is_zero()


def test_vectorize_devectorize(alg):
    A = alg("mat:2:transpose")
    assert A.matrix_unit(1, 2).vectorize() == (0, 1, 0, 0)
    H = alg("quat")
    assert H.unit().vectorize() == (1, 0, 0, 0)
    rng = random.Random(2)
    x = A.random_element(rng)
    assert devectorize(A, x.vectorize()) == x
    with pytest.raises(ValueError):
        devectorize(A, (1, 2, 3))


def test_trace(alg):
    A = alg("mat:4:transpose")
    assert str(A.matrix_unit(1, 1).trace()) == "1"
    assert A.zero().trace().is_zero()
    rng = random.Random(3)
    for _ in range(10):
        s = A.random_element(rng).sk_split()[0]
        k = A.random_element(rng).sk_split()[1]
        assert (s * k).trace().is_zero()
    with pytest.raises(UnsupportedOperationError):
        alg("quat").unit().trace()


def test_elements_are_immutable_and_hashable(alg):
    A = alg("mat:2:transpose")
    x = A.matrix_unit(1, 2)
    with pytest.raises(AttributeError):
        x.coords = ()
    assert len({x, A.matrix_unit(1, 2)}) == 1


def test_json_round_trip(alg, GF5):
    from invol.algebras import parse_algebra

    A = alg("mat:2:transpose")
    x = A.from_rows([["1/2", "-3"], [0, 5]])
    assert A.element_from_json(x.to_json()) == x
    B = parse_algebra("quat", GF5)
    q = B.element([1, 2, 3, 4])
    assert B.element_from_json(q.to_json()) == q

