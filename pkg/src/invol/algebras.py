"""Concrete finite-dimensional algebras bundled with an involution.

Supported instances:

* ``M_n(F)`` with the transpose involution (any ``n >= 1``),
* ``M_n(F)`` with the symplectic involution ``X -> J X^T J^{-1}``,
  ``J = [[0, I_m], [-I_m, 0]]``, which requires ``n = 2m``,
* the quaternions over ``F`` with conjugation (coordinates on ``1, i, j, k``).

Elements are immutable coordinate vectors over the exact scalar field
(row-major entries for matrices).  All three involutions act as signed
permutations of coordinates; the table is precomputed per algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from invol import linalg
from invol.fields import Field, Rationals, Scalar

MATRIX = "matrix"
QUATERNION = "quaternion"

TRANSPOSE = "transpose"
SYMPLECTIC = "symplectic"
CONJUGATION = "conjugation"

_QUATERNION_NAMES = ("1", "i", "j", "k")

# (target index, sign) for products of the quaternion basis units
_QUATERNION_TABLE = (
    ((0, 1), (1, 1), (2, 1), (3, 1)),
    ((1, 1), (0, -1), (3, 1), (2, -1)),
    ((2, 1), (3, -1), (0, -1), (1, 1)),
    ((3, 1), (2, 1), (1, -1), (0, -1)),
)


class AlgebraMismatchError(ValueError):
    """Raised when elements of different algebras are combined."""


class UnsupportedOperationError(RuntimeError):
    """Raised for operations an algebra kind does not provide."""


@dataclass(frozen=True)
class Algebra:
    field: Field
    kind: str
    n: int | None
    involution: str

    def __post_init__(self) -> None:
        if self.kind == MATRIX:
            if self.n is None or self.n < 1:
                raise ValueError("matrix algebra needs n >= 1")
            if self.involution == SYMPLECTIC:
                if self.n % 2 != 0:
                    raise ValueError(
                        f"symplectic involution needs even n, got n={self.n}"
                    )
            elif self.involution != TRANSPOSE:
                raise ValueError(
                    f"matrix algebras carry 'transpose' or 'symplectic', got {self.involution!r}"
                )
        elif self.kind == QUATERNION:
            if self.n is not None:
                raise ValueError("quaternion algebra takes no size parameter")
            if self.involution != CONJUGATION:
                raise ValueError("quaternions carry the conjugation involution")
        else:
            raise ValueError(f"unknown algebra kind {self.kind!r}")

    # -- structure ---------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.n * self.n if self.kind == MATRIX else 4

    @cached_property
    def _star_table(self) -> tuple[tuple[int, int], ...]:
        """Per coordinate: (image index, sign) under the involution."""
        if self.kind == QUATERNION:
            return ((0, 1), (1, -1), (2, -1), (3, -1))
        n = self.n
        table = []
        if self.involution == TRANSPOSE:
            for i in range(n):
                for j in range(n):
                    table.append((j * n + i, 1))
        else:
            m = n // 2
            # (e_ab)* = -sigma(partner(b)) * sigma(a) * e_{partner(b), partner(a)}
            # with partner(i) = i +- m and sigma(i) = +1 for the first block
            def partner(i: int) -> int:
                return i + m if i < m else i - m

            def sigma(i: int) -> int:
                return 1 if i < m else -1

            for a in range(n):
                for b in range(n):
                    pb, pa = partner(b), partner(a)
                    sign = -sigma(pb) * sigma(a)
                    table.append((pb * n + pa, sign))
        result = tuple(table)
        for src, (tgt, sign) in enumerate(result):
            tgt2, sign2 = result[tgt]
            if tgt2 != src or sign * sign2 != 1:
                raise AssertionError("involution table is not an involution")
        return result

    @cached_property
    def _basis(self) -> tuple["Element", ...]:
        f = self.field
        out = []
        for t in range(self.dim):
            coords = [f.zero] * self.dim
            coords[t] = f.one
            out.append(Element(self, tuple(coords)))
        return tuple(out)

    def basis(self) -> tuple["Element", ...]:
        return self._basis

    # -- raw coordinate kernels --------------------------------------------

    def mul_coords(self, a, b):
        f = self.field
        if self.kind == MATRIX:
            n = self.n
            out = [f.zero] * (n * n)
            for i in range(n):
                row = i * n
                for k in range(n):
                    aik = a[row + k]
                    if f.is_zero(aik):
                        continue
                    brow = k * n
                    for j in range(n):
                        bkj = b[brow + j]
                        if not f.is_zero(bkj):
                            out[row + j] = f.add(out[row + j], f.mul(aik, bkj))
            return tuple(out)
        out = [f.zero] * 4
        for p in range(4):
            cp = a[p]
            if f.is_zero(cp):
                continue
            row = _QUATERNION_TABLE[p]
            for q in range(4):
                cq = b[q]
                if f.is_zero(cq):
                    continue
                tgt, sign = row[q]
                term = f.mul(cp, cq)
                if sign < 0:
                    term = f.neg(term)
                out[tgt] = f.add(out[tgt], term)
        return tuple(out)

    def star_coords(self, coords):
        f = self.field
        out = [f.zero] * self.dim
        for src, (tgt, sign) in enumerate(self._star_table):
            c = coords[src]
            out[tgt] = c if sign > 0 else f.neg(c)
        return tuple(out)

    # -- constructors --------------------------------------------------------

    def element(self, coords) -> "Element":
        coords = tuple(self.field.coerce(c) for c in coords)
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        return Element(self, coords)

    def zero(self) -> "Element":
        return Element(self, tuple([self.field.zero] * self.dim))

    def unit(self) -> "Element":
        f = self.field
        coords = [f.zero] * self.dim
        if self.kind == MATRIX:
            for i in range(self.n):
                coords[i * self.n + i] = f.one
        else:
            coords[0] = f.one
        return Element(self, tuple(coords))

    def matrix_unit(self, i: int, j: int) -> "Element":
        """The matrix with a single 1 in row i, column j (1-based)."""
        if self.kind != MATRIX:
            raise UnsupportedOperationError("matrix units exist only in matrix algebras")
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"matrix unit ({i},{j}) out of range for n={self.n}")
        coords = [self.field.zero] * self.dim
        coords[(i - 1) * self.n + (j - 1)] = self.field.one
        return Element(self, tuple(coords))

    def quaternion_unit(self, name: str) -> "Element":
        if self.kind != QUATERNION:
            raise UnsupportedOperationError("quaternion units exist only in the quaternions")
        if name not in _QUATERNION_NAMES:
            raise ValueError(f"unknown quaternion unit {name!r}")
        coords = [self.field.zero] * 4
        coords[_QUATERNION_NAMES.index(name)] = self.field.one
        return Element(self, tuple(coords))

    def from_rows(self, rows) -> "Element":
        if self.kind != MATRIX:
            raise UnsupportedOperationError("from_rows applies to matrix algebras")
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise ValueError(f"expected {self.n}x{self.n} entries")
        flat = [entry for row in rows for entry in row]
        return self.element(flat)

    def random_element(self, rng) -> "Element":
        f = self.field
        if isinstance(f, Rationals):
            coords = [Fraction(rng.randint(-9, 9)) for _ in range(self.dim)]
        else:
            coords = [rng.randrange(f.p) for _ in range(self.dim)]
        return Element(self, tuple(coords))

    # -- descriptors ---------------------------------------------------------

    def describe(self) -> dict:
        out = {"kind": self.kind, "involution": self.involution, "field": self.field.token()}
        if self.n is not None:
            out["n"] = self.n
        return out

    def spec_string(self) -> str:
        if self.kind == MATRIX:
            return f"mat:{self.n}:{self.involution}"
        return "quat"

    def element_from_json(self, data: dict) -> "Element":
        if self.kind == MATRIX:
            if data.get("n") != self.n:
                raise ValueError(f"matrix size {data.get('n')} does not match n={self.n}")
            return self.from_rows(data["entries"])
        return self.element(data["coeffs"])

    def __repr__(self) -> str:
        return f"Algebra({self.spec_string()}, field={self.field.token()})"


def matrix_algebra(field: Field, n: int, involution: str) -> Algebra:
    return Algebra(field, MATRIX, n, involution)


def quaternion_algebra(field: Field) -> Algebra:
    return Algebra(field, QUATERNION, None, CONJUGATION)


def parse_algebra(spec: str, field: Field) -> Algebra:
    """Build an algebra from its flat spec, ``mat:<n>:<involution>`` or ``quat``."""
    spec = spec.strip().lower()
    if spec in ("quat", "quaternions", "h"):
        return quaternion_algebra(field)
    parts = spec.split(":")
    if len(parts) == 3 and parts[0] == "mat":
        try:
            n = int(parts[1])
        except ValueError as exc:
            raise ValueError(f"bad matrix size in {spec!r}") from exc
        return matrix_algebra(field, n, parts[2])
    raise ValueError(f"unknown algebra spec {spec!r} (expected 'mat:<n>:<involution>' or 'quat')")


class Element:
    """Immutable element of an :class:`Algebra`, stored as raw coordinates."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: Algebra, coords: tuple):
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    def _check(self, other: "Element") -> None:
        if self.algebra != other.algebra:
            raise AlgebraMismatchError(f"{self.algebra!r} vs {other.algebra!r}")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        f = self.algebra.field
        return Element(self.algebra, tuple(f.add(a, b) for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        f = self.algebra.field
        return Element(self.algebra, tuple(f.sub(a, b) for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Element":
        f = self.algebra.field
        return Element(self.algebra, tuple(f.neg(a) for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            return Element(self.algebra, self.algebra.mul_coords(self.coords, other.coords))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Element":
        f = self.algebra.field
        if isinstance(c, Scalar):
            if c.field != f:
                raise AlgebraMismatchError(f"scalar field {c.field!r} vs {f!r}")
            raw = c.raw
        else:
            raw = f.coerce(c)
        return Element(self.algebra, tuple(f.mul(raw, a) for a in self.coords))

    # -- involution ----------------------------------------------------------

    def star(self) -> "Element":
        return Element(self.algebra, self.algebra.star_coords(self.coords))

    def is_symmetric(self) -> bool:
        return self.star() == self

    def is_skew(self) -> bool:
        return self.star() == -self

    def sk_split(self) -> tuple["Element", "Element"]:
        """Unique splitting r = s + k with s symmetric and k skew."""
        f = self.algebra.field
        half = f.inv(f.from_int(2))
        adj = self.star()
        s = (self + adj).scale(half)
        k = (self - adj).scale(half)
        return s, k

    def lie(self, other: "Element") -> "Element":
        return self * other - other * self

    def jordan(self, other: "Element") -> "Element":
        return self * other + other * self

    # -- queries ---------------------------------------------------------------

    def is_zero(self) -> bool:
        f = self.algebra.field
        return all(f.is_zero(c) for c in self.coords)

    def trace(self) -> Scalar:
        if self.algebra.kind != MATRIX:
            raise UnsupportedOperationError("trace is defined for matrix algebras only")
        f = self.algebra.field
        n = self.algebra.n
        total = f.zero
        for i in range(n):
            total = f.add(total, self.coords[i * n + i])
        return Scalar(f, total)

    def right_inverse(self) -> "Element | None":
        """Solve ``self * x = 1`` exactly; None when no inverse exists."""
        alg = self.algebra
        d = alg.dim
        cols = [alg.mul_coords(self.coords, e.coords) for e in alg.basis()]
        rows = [[cols[j][i] for j in range(d)] for i in range(d)]
        rhs = alg.unit().coords
        solution = linalg.solve(alg.field, rows, rhs)
        if solution is None:
            return None
        candidate = Element(alg, tuple(solution))
        if (self * candidate) != alg.unit():
            return None
        return candidate

    def vectorize(self) -> tuple:
        return self.coords

    # -- identity ----------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and self.algebra == other.algebra
            and self.coords == other.coords
        )

    def __hash__(self) -> int:
        return hash((self.algebra, self.coords))

    def scalars(self) -> tuple[Scalar, ...]:
        f = self.algebra.field
        return tuple(Scalar(f, c) for c in self.coords)

    def to_json(self) -> dict:
        f = self.algebra.field
        if self.algebra.kind == MATRIX:
            n = self.algebra.n
            entries = [
                [f.format(self.coords[i * n + j]) for j in range(n)] for i in range(n)
            ]
            return {"n": n, "entries": entries}
        return {"coeffs": [f.format(c) for c in self.coords]}

    def __repr__(self) -> str:
        f = self.algebra.field
        if self.algebra.kind == MATRIX:
            n = self.algebra.n
            rows = [
                " ".join(f.format(self.coords[i * n + j]) for j in range(n))
                for i in range(n)
            ]
            return "[" + "; ".join(rows) + "]"
        return "(" + ", ".join(
            f.format(c) + (("*" + name) if name != "1" else "")
            for c, name in zip(self.coords, _QUATERNION_NAMES)
        ) + ")"


def devectorize(algebra: Algebra, vector) -> Element:
    """Inverse of :meth:`Element.vectorize`."""
    if len(vector) != algebra.dim:
        raise ValueError(f"expected {algebra.dim} coordinates, got {len(vector)}")
    return Element(algebra, tuple(vector))
