"""AST and normal forms for the free *-algebra over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

GENERAL = "gen"
SYMMETRIC = "sym"
SKEW = "skew"

STAR_TYPES = (GENERAL, SYMMETRIC, SKEW)


@dataclass(frozen=True)
class Const:
    value: Fraction


@dataclass(frozen=True)
class Letter:
    name: str


@dataclass(frozen=True)
class Star:
    inner: object


@dataclass(frozen=True)
class Neg:
    inner: object


@dataclass(frozen=True)
class Mul:
    parts: tuple


@dataclass(frozen=True)
class Add:
    parts: tuple


StarExpr = Const | Letter | Star | Neg | Mul | Add

# An atom is (letter, starred); typed letters are never starred after
# normalization: symmetric letters drop the star, skew letters trade it
# for a sign.
Atom = tuple[str, bool]
Word = tuple[Atom, ...]


class NormalForm:
    """Canonical linear combination of words; zero coefficients are dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Word, Fraction]):
        self.terms = {w: c for w, c in terms.items() if c != 0}

    @classmethod
    def zero(cls) -> "NormalForm":
        return cls({})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "NormalForm") -> "NormalForm":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) + c
        return NormalForm(out)

    def __sub__(self, other: "NormalForm") -> "NormalForm":
        return self + other.negate()

    def negate(self) -> "NormalForm":
        return NormalForm({w: -c for w, c in self.terms.items()})

    def scale(self, factor: Fraction) -> "NormalForm":
        return NormalForm({w: factor * c for w, c in self.terms.items()})

    def __mul__(self, other: "NormalForm") -> "NormalForm":
        out: dict[Word, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, Fraction(0)) + c1 * c2
        return NormalForm(out)

    def star(self, declarations: dict[str, str]) -> "NormalForm":
        out: dict[Word, Fraction] = {}
        for word, coeff in self.terms.items():
            new_word, sign = _star_word(word, declarations)
            out[new_word] = out.get(new_word, Fraction(0)) + sign * coeff
        return NormalForm(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, NormalForm) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for word in sorted(self.terms, key=lambda w: (len(w), w)):
            coeff = self.terms[word]
            text = "".join(name + ("*" if starred else "") for name, starred in word)
            if not word:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(text)
            elif coeff == -1:
                parts.append("-" + text)
            else:
                parts.append(f"{coeff} {text}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"NormalForm({self.pretty()})"


def _star_atom(atom: Atom, declarations: dict[str, str]) -> tuple[Atom, int]:
    name, starred = atom
    kind = declarations[name]
    if kind == GENERAL:
        return (name, not starred), 1
    if kind == SYMMETRIC:
        return (name, False), 1
    return (name, False), -1


def _star_word(word: Word, declarations: dict[str, str]) -> tuple[Word, int]:
    sign = 1
    atoms = []
    for atom in reversed(word):
        new_atom, s = _star_atom(atom, declarations)
        atoms.append(new_atom)
        sign *= s
    return tuple(atoms), sign


def normalize(expr: StarExpr, declarations: dict[str, str]) -> NormalForm:
    """Expand an expression into its canonical normal form."""
    if isinstance(expr, Const):
        return NormalForm({(): expr.value})
    if isinstance(expr, Letter):
        if expr.name not in declarations:
            raise KeyError(f"letter {expr.name!r} is not declared")
        return NormalForm({((expr.name, False),): Fraction(1)})
    if isinstance(expr, Neg):
        return normalize(expr.inner, declarations).negate()
    if isinstance(expr, Star):
        return normalize(expr.inner, declarations).star(declarations)
    if isinstance(expr, Mul):
        out = normalize(expr.parts[0], declarations)
        for part in expr.parts[1:]:
            out = out * normalize(part, declarations)
        return out
    if isinstance(expr, Add):
        out = normalize(expr.parts[0], declarations)
        for part in expr.parts[1:]:
            out = out + normalize(part, declarations)
        return out
    raise TypeError(f"not a star expression: {expr!r}")


def check_identity(
    lhs: StarExpr, rhs: StarExpr, declarations: dict[str, str]
) -> tuple[bool, NormalForm]:
    """True plus zero, or False plus the nonzero difference as evidence."""
    difference = normalize(lhs, declarations) - normalize(rhs, declarations)
    return difference.is_zero(), difference


def classify_symmetry(expr: StarExpr, declarations: dict[str, str]) -> str:
    """Classify an expression as symmetric, skew or neither under the star."""
    nf = normalize(expr, declarations)
    starred = nf.star(declarations)
    if starred == nf:
        return "symmetric"
    if starred == nf.negate():
        return "skew"
    return "neither"
