import random

import pytest
from hypothesis import given, strategies as st

from invol.algebras import devectorize
from invol.fields import PrimeField, Rationals
from invol.structure import evaluate, parse_set_expr, sym_skew_bases
from invol.subspaces import Subspace, centralizer, product_span, span_of_elements

RATIONALS = Rationals()


def test_span_reduce_examples(Q):
    s = Subspace.from_vectors(Q, 2, [(1, 1), (2, 2)])
    assert s.dim == 1 and s.basis == ((1, 1),)
    assert Subspace.from_vectors(Q, 3, []).dim == 0
    t = Subspace.from_vectors(Q, 3, [(1, 0, 0), (0, 1, 0), (1, 1, 0)])
    assert t.dim == 2


def test_span_rejects_ragged_input(Q):
    with pytest.raises(ValueError):
        Subspace.from_vectors(Q, 2, [(1, 1, 1)])


@given(
    vectors=st.lists(
        st.tuples(*[st.integers(-4, 4) for _ in range(4)]), min_size=1, max_size=6
    ),
    seed=st.integers(0, 2**16),
)
def test_span_is_order_insensitive_and_idempotent(vectors, seed):
    shuffled = list(vectors)
    random.Random(seed).shuffle(shuffled)
    a = Subspace.from_vectors(RATIONALS, 4, vectors)
    b = Subspace.from_vectors(RATIONALS, 4, shuffled)
    assert a == b
    assert Subspace.from_vectors(RATIONALS, 4, a.basis) == a


def test_product_span_dims(alg):
    M2t = alg("mat:2:transpose")
    M2s = alg("mat:2:symplectic")
    s_t = sym_skew_bases(M2t)[0]
    s_s, k_s = sym_skew_bases(M2s)
    assert product_span(s_t, s_t, M2t).dim == 4
    assert product_span(s_s, s_s, M2s).dim == 1
    # the jordan span of the skew part agrees with the symmetric part here
    assert product_span(k_s, k_s, M2s, "jordan") == s_s


def test_product_span_validates(alg, Q):
    M2 = alg("mat:2:transpose")
    s = sym_skew_bases(M2)[0]
    with pytest.raises(ValueError):
        product_span(s, Subspace.from_vectors(Q, 3, [(1, 0, 0)]), M2)
    with pytest.raises(ValueError):
        product_span(s, s, M2, "frobenius")


def test_sum_examples(alg):
    M2s = alg("mat:2:symplectic")
    k = sym_skew_bases(M2s)[1]
    k2 = product_span(k, k, M2s)
    assert (k + k2).dim == 4
    assert k + k == k
    assert k + Subspace.zero(M2s.field, 4) == k


def test_compare_examples(alg):
    M3 = alg("mat:3:transpose")
    s = sym_skew_bases(M3)[0]
    s2 = evaluate(parse_set_expr("S^2"), M3)
    s3 = evaluate(parse_set_expr("S^3"), M3)
    assert s.is_subspace_of(s2) and s2.is_subspace_of(s3)
    assert s3.dim == 9
    # KS+SK sits inside the trace-zero hyperplane
    kssk = evaluate(parse_set_expr("KS+SK"), M3)
    assert all(devectorize(M3, row).trace().is_zero() for row in kssk.basis)
    assert kssk.dim <= 8


def test_membership_and_reduce(alg):
    M2 = alg("mat:2:transpose")
    s = sym_skew_bases(M2)[0]
    assert s.contains_vector(M2.unit().coords)
    assert not s.contains_vector(M2.matrix_unit(1, 2).coords)
    residue = s.reduce_vector(M2.matrix_unit(1, 2).coords)
    assert any(not M2.field.is_zero(c) for c in residue)


def test_centralizer_examples(alg):
    from invol.structure import symmetric_elements

    M3 = alg("mat:3:transpose")
    assert centralizer(symmetric_elements(M3), M3).dim == 1
    M2s = alg("mat:2:symplectic")
    assert centralizer(symmetric_elements(M2s), M2s).dim == 4
    assert centralizer(list(M3.basis()), M3).dim == 1
    assert centralizer([], M3).dim == 9


def test_lie_span_inside_product_sums(alg):
    M3 = alg("mat:3:transpose")
    s, k = sym_skew_bases(M3)
    lie = product_span(s, k, M3, "lie")
    both = product_span(s, k, M3) + product_span(k, s, M3)
    assert lie.is_subspace_of(both)


def test_product_span_monotone(alg):
    M3 = alg("mat:3:transpose")
    s, k = sym_skew_bases(M3)
    small = Subspace.from_vectors(M3.field, 9, s.basis[:3])
    assert small.is_subspace_of(s)
    assert product_span(small, k, M3).is_subspace_of(product_span(s, k, M3))


@pytest.mark.parametrize("p", [3, 5])
def test_modular_dims_never_exceed_rational_dims(p):
    rng = random.Random(p)
    gf = PrimeField(p)
    for _ in range(10):
        vectors = [[rng.randint(-9, 9) for _ in range(6)] for _ in range(5)]
        dim_q = Subspace.from_vectors(RATIONALS, 6, [tuple(map(RATIONALS.from_int, v)) for v in vectors]).dim
        dim_p = Subspace.from_vectors(gf, 6, [tuple(map(gf.from_int, v)) for v in vectors]).dim
        assert dim_p <= dim_q


@pytest.mark.parametrize("n", [2, 3, 4])
def test_square_of_symmetric_part_is_a_lie_ideal(n, alg):
    # w u - u w stays inside S^2 for every basis w of S^2 and basis u of R
    A = alg(f"mat:{n}:transpose")
    s2 = evaluate(parse_set_expr("S^2"), A)
    for row in s2.basis:
        w = devectorize(A, row)
        for u in A.basis():
            assert s2.contains_vector(w.lie(u).coords)


def test_span_of_elements(alg):
    M2 = alg("mat:2:transpose")
    span = span_of_elements([M2.matrix_unit(1, 1), M2.matrix_unit(1, 1).scale(4)])
    assert span.dim == 1
    with pytest.raises(ValueError):
        span_of_elements([])


def test_report_shape(alg):
    M2 = alg("mat:2:symplectic")
    report = sym_skew_bases(M2)[0].to_report()
    assert report == {"ambient": 4, "dim": 1, "basis": [["1", "0", "0", "1"]]}
