"""Exact Gauss-Jordan elimination over a field backend.

The central structure is an incrementally maintained reduced row echelon
basis: pivot entries are 1, pivot columns are zero elsewhere, and rows are
ordered by strictly increasing pivot column.  Inserting a vector reduces it
against the current rows first, so the basis stays canonical at all times
and rank saturation can short-circuit large span computations.
"""

from __future__ import annotations


class EchelonBasis:
    """Mutable RREF accumulator; insert vectors, read off a canonical basis."""

    def __init__(self, field, ambient: int):
        self.field = field
        self.ambient = ambient
        self.rows: list[list] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_full(self) -> bool:
        return len(self.rows) == self.ambient

    def reduce(self, vector) -> list:
        """Return the residue of ``vector`` modulo the current row space."""
        f = self.field
        v = list(vector)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if not f.is_zero(c):
                v = [f.sub(a, f.mul(c, b)) for a, b in zip(v, row)]
        return v

    def contains(self, vector) -> bool:
        f = self.field
        return all(f.is_zero(c) for c in self.reduce(vector))

    def insert(self, vector) -> bool:
        """Add ``vector`` to the span; True iff the dimension grew."""
        if self.is_full():
            # residue is necessarily zero
            return False
        f = self.field
        v = self.reduce(vector)
        pivot = next((j for j, c in enumerate(v) if not f.is_zero(c)), None)
        if pivot is None:
            return False
        scale = f.inv(v[pivot])
        v = [f.mul(scale, c) for c in v]
        # clear the new pivot column in the existing rows
        for row in self.rows:
            c = row[pivot]
            if not f.is_zero(c):
                for j in range(self.ambient):
                    row[j] = f.sub(row[j], f.mul(c, v[j]))
        at = next((i for i, p in enumerate(self.pivots) if p > pivot), len(self.pivots))
        self.rows.insert(at, v)
        self.pivots.insert(at, pivot)
        return True

    def extend(self, vectors) -> None:
        for v in vectors:
            if self.is_full():
                return
            self.insert(v)

    def snapshot(self) -> tuple[tuple, ...]:
        return tuple(tuple(row) for row in self.rows)


def rref(field, vectors, ambient: int) -> tuple[tuple[tuple, ...], tuple[int, ...]]:
    """Canonical RREF basis of the span of ``vectors`` in ``field^ambient``."""
    acc = EchelonBasis(field, ambient)
    acc.extend(vectors)
    return acc.snapshot(), tuple(acc.pivots)


def solve(field, matrix_rows, rhs) -> list | None:
    """One solution of the linear system ``matrix_rows @ x = rhs``, or None.

    ``matrix_rows`` is a list of equation rows; free variables are set to 0.
    """
    if not matrix_rows:
        return None
    cols = len(matrix_rows[0])
    augmented = [list(row) + [b] for row, b in zip(matrix_rows, rhs)]
    basis, pivots = rref(field, augmented, cols + 1)
    solution = [field.zero] * cols
    for row, p in zip(basis, pivots):
        if p == cols:
            return None  # row reads 0 = 1
        solution[p] = row[cols]
    return solution


def nullspace(field, matrix_rows, cols: int) -> tuple[tuple, ...]:
    """Canonical RREF basis of ``{x : matrix_rows @ x = 0}``."""
    basis, pivots = rref(field, matrix_rows, cols)
    pivot_set = set(pivots)
    generators = []
    for free in range(cols):
        if free in pivot_set:
            continue
        vec = [field.zero] * cols
        vec[free] = field.one
        for row, p in zip(basis, pivots):
            vec[p] = field.neg(row[free])
        generators.append(vec)
    canonical, _ = rref(field, generators, cols)
    return canonical
