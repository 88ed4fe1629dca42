"""Exact scalar arithmetic over the rationals and over GF(p), p an odd prime.

Every computation in the package runs over one of these two field backends,
so ranks, spans and inverses are exact.  Fields of characteristic 2 are
rejected at construction time: none of the structural results implemented
here hold there, and the symmetric/skew splitting needs 2 to be invertible.

Raw values are ``fractions.Fraction`` for the rationals (always in lowest
terms with positive denominator) and plain residues in ``[0, p)`` for GF(p),
so equal scalars always have identical representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Raw = Fraction | int


class FieldMismatchError(ValueError):
    """Raised when two scalars from different fields are combined."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Rationals:
    """The field of rational numbers with arbitrary-precision arithmetic."""

    characteristic = 0

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def coerce(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot coerce {value!r} into a rational")

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        return a - b

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def inv(self, a: Fraction) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return Fraction(1) / a

    def is_zero(self, a: Fraction) -> bool:
        return a == 0

    def parse(self, text: str) -> Fraction:
        return Fraction(text.strip())

    def format(self, a: Fraction) -> str:
        return str(a)

    def scalar(self, value) -> "Scalar":
        return Scalar(self, self.coerce(value))

    def token(self) -> str:
        return "q"

    def __repr__(self) -> str:
        return "Rationals()"


@dataclass(frozen=True)
class PrimeField:
    """GF(p) for an odd prime p, with canonical residues in [0, p)."""

    p: int

    def __post_init__(self) -> None:
        if self.p == 2:
            raise ValueError("characteristic 2 is not supported")
        if not _is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def from_int(self, n: int) -> int:
        return n % self.p

    def coerce(self, value) -> int:
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {value} vanishes mod {self.p}")
            return (value.numerator * self.inv(value.denominator % self.p)) % self.p
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot coerce {value!r} into GF({self.p})")

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a: int) -> bool:
        return a % self.p == 0

    def parse(self, text: str) -> int:
        return int(text.strip()) % self.p

    def format(self, a: int) -> str:
        return str(a % self.p)

    def scalar(self, value) -> "Scalar":
        return Scalar(self, self.coerce(value))

    def token(self) -> str:
        return f"gf:{self.p}"

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


Field = Rationals | PrimeField


def parse_field(token: str) -> Field:
    """Build a field from its flat token, ``"q"`` or ``"gf:<p>"``."""
    token = token.strip().lower()
    if token in ("q", "qq", "rational", "rationals"):
        return Rationals()
    if token.startswith("gf:"):
        return PrimeField(int(token[3:]))
    raise ValueError(f"unknown field token {token!r} (expected 'q' or 'gf:<p>')")


@dataclass(frozen=True)
class Scalar:
    """A field element tagged with its field, for the public API surface.

    Arithmetic between scalars of different fields raises
    :class:`FieldMismatchError`.  Internals of the package work on raw
    values; this wrapper is the boundary type used in serialized data.
    """

    field: Field
    raw: Raw

    def _check(self, other: "Scalar") -> None:
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.field, self.field.add(self.raw, other.raw))

    def __sub__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.field, self.field.sub(self.raw, other.raw))

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.field, self.field.mul(self.raw, other.raw))

    def __neg__(self) -> "Scalar":
        return Scalar(self.field, self.field.neg(self.raw))

    def inv(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.raw))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.raw)

    def __str__(self) -> str:
        return self.field.format(self.raw)

    def __repr__(self) -> str:
        return f"Scalar({self.field!r}, {self})"
