"""Exact subspaces of an algebra's coordinate space.

A :class:`Subspace` is a canonical reduced echelon basis, so equality of
subspaces is structural equality of bases and membership is a single
reduction pass.  Spans of pairwise products realize products of subsets:
over a field, the additive group generated by all products ``ab`` with
``a in A`` and ``b in B`` is spanned by products of basis pairs, by
bilinearity of the multiplication.
"""

from __future__ import annotations

from invol.linalg import EchelonBasis, nullspace, rref


class Subspace:
    """Immutable span in ``field^ambient``, held as a canonical RREF basis."""

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, field, ambient: int, basis: tuple, pivots: tuple):
        self.field = field
        self.ambient = ambient
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def from_vectors(cls, field, ambient: int, vectors) -> "Subspace":
        coerced = []
        for v in vectors:
            if len(v) != ambient:
                raise ValueError(f"vector of length {len(v)} in ambient {ambient}")
            coerced.append(tuple(field.coerce(c) for c in v))
        basis, pivots = rref(field, coerced, ambient)
        return cls(field, ambient, basis, pivots)

    @classmethod
    def zero(cls, field, ambient: int) -> "Subspace":
        return cls(field, ambient, (), ())

    @classmethod
    def full(cls, field, ambient: int) -> "Subspace":
        rows = []
        for t in range(ambient):
            row = [field.zero] * ambient
            row[t] = field.one
            rows.append(tuple(row))
        return cls(field, ambient, tuple(rows), tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check(self, other: "Subspace") -> None:
        if self.field != other.field or self.ambient != other.ambient:
            raise ValueError("subspaces live in different ambient spaces")

    def _accumulator(self) -> EchelonBasis:
        acc = EchelonBasis(self.field, self.ambient)
        acc.rows = [list(r) for r in self.basis]
        acc.pivots = list(self.pivots)
        return acc

    def reduce_vector(self, vector):
        if len(vector) != self.ambient:
            raise ValueError(f"vector of length {len(vector)} in ambient {self.ambient}")
        return self._accumulator().reduce(vector)

    def contains_vector(self, vector) -> bool:
        f = self.field
        return all(f.is_zero(c) for c in self.reduce_vector(vector))

    def is_subspace_of(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains_vector(row) for row in self.basis)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.field, self.ambient, self.basis))

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        acc = self._accumulator()
        acc.extend(other.basis)
        return Subspace(self.field, self.ambient, acc.snapshot(), tuple(acc.pivots))

    def to_report(self) -> dict:
        fmt = self.field.format
        return {
            "ambient": self.ambient,
            "dim": self.dim,
            "basis": [[fmt(c) for c in row] for row in self.basis],
        }

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def span_of_elements(elements) -> Subspace:
    """Span of a non-empty list of algebra elements."""
    elements = list(elements)
    if not elements:
        raise ValueError("need at least one element to infer the algebra")
    alg = elements[0].algebra
    return Subspace.from_vectors(alg.field, alg.dim, [e.coords for e in elements])


_PRODUCT_MODES = ("product", "jordan", "lie")


def product_span(a: Subspace, b: Subspace, algebra, mode: str = "product") -> Subspace:
    """Span of the pairwise products of two subspaces inside ``algebra``.

    ``mode`` picks the bilinear map: plain product ``xy``, Jordan product
    ``xy + yx``, or Lie bracket ``xy - yx``.
    """
    if mode not in _PRODUCT_MODES:
        raise ValueError(f"unknown product mode {mode!r}")
    if a.ambient != algebra.dim or b.ambient != algebra.dim:
        raise ValueError("subspace ambient does not match the algebra dimension")
    f = algebra.field
    if a.field != f or b.field != f:
        raise ValueError("subspace field does not match the algebra field")
    acc = EchelonBasis(f, algebra.dim)
    mul = algebra.mul_coords
    for u in a.basis:
        if acc.is_full():
            break
        for v in b.basis:
            if acc.is_full():
                break
            uv = mul(u, v)
            if mode == "product":
                w = uv
            else:
                vu = mul(v, u)
                if mode == "jordan":
                    w = tuple(f.add(p, q) for p, q in zip(uv, vu))
                else:
                    w = tuple(f.sub(p, q) for p, q in zip(uv, vu))
            acc.insert(w)
    return Subspace(f, algebra.dim, acc.snapshot(), tuple(acc.pivots))


def centralizer(generators, algebra) -> Subspace:
    """Solution space of ``xa = ax`` for every generator ``a``."""
    f = algebra.field
    d = algebra.dim
    if not generators:
        return Subspace.full(f, d)
    basis = algebra.basis()
    equations: list[list] = []
    for gen in generators:
        if gen.algebra != algebra:
            raise ValueError("generator from a different algebra")
        ga = gen.coords
        # column j of the map x -> xa - ax
        columns = []
        for e in basis:
            left = algebra.mul_coords(e.coords, ga)
            right = algebra.mul_coords(ga, e.coords)
            columns.append(tuple(f.sub(p, q) for p, q in zip(left, right)))
        for i in range(d):
            equations.append([columns[j][i] for j in range(d)])
    solutions = nullspace(f, equations, d)
    return Subspace.from_vectors(f, d, solutions)
