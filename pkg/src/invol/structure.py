"""Set expressions over the symmetric/skew parts and their exact evaluation.

The atoms are ``S`` (symmetric elements), ``K`` (skew elements), ``R`` (the
whole algebra) and ``Z`` (the center).  Operators are the set product, the
Jordan product, sums, and powers (left-folded products), each evaluated as
an exact span.  The module also hosts the commutativity probes used as
theorem hypotheses.
"""

from __future__ import annotations

from dataclasses import dataclass

from invol.algebras import Algebra, Element, devectorize
from invol.subspaces import Subspace, centralizer, product_span

# -- expression AST ----------------------------------------------------------


@dataclass(frozen=True)
class SetAtom:
    name: str  # S | K | R | Z

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class SetProduct:
    parts: tuple

    def __str__(self) -> str:
        return " ".join(_wrap(p) for p in self.parts)


@dataclass(frozen=True)
class SetJordan:
    left: object
    right: object

    def __str__(self) -> str:
        return f"{_wrap(self.left)} o {_wrap(self.right)}"


@dataclass(frozen=True)
class SetSum:
    parts: tuple

    def __str__(self) -> str:
        return " + ".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class SetPower:
    base: object
    exponent: int

    def __str__(self) -> str:
        return f"{_wrap(self.base)}^{self.exponent}"


SetExpr = SetAtom | SetProduct | SetJordan | SetSum | SetPower


def _wrap(expr) -> str:
    text = str(expr)
    if isinstance(expr, (SetSum, SetJordan)):
        return f"({text})"
    return text


S = SetAtom("S")
K = SetAtom("K")
R = SetAtom("R")
Z = SetAtom("Z")


def prod(*parts) -> SetExpr:
    flat = []
    for p in parts:
        if isinstance(p, SetProduct):
            flat.extend(p.parts)
        else:
            flat.append(p)
    return flat[0] if len(flat) == 1 else SetProduct(tuple(flat))


def jordan(left, right) -> SetExpr:
    return SetJordan(left, right)


def sum_of(*parts) -> SetExpr:
    return parts[0] if len(parts) == 1 else SetSum(tuple(parts))


def power(base, exponent: int) -> SetExpr:
    if exponent < 1:
        raise ValueError("power exponent must be >= 1")
    return base if exponent == 1 else SetPower(base, exponent)


class SetExprSyntaxError(ValueError):
    pass


def parse_set_expr(text: str) -> SetExpr:
    """Parse expressions like ``S^3``, ``K+KSK``, ``(KoK)^2`` or ``KS+K^2``.

    Juxtaposition and ``*`` are the set product, ``o`` the Jordan product,
    ``+`` the sum, ``^`` an integer power; atoms are S, K, R, Z.
    """
    tokens = _tokenize_set_expr(text)
    expr, pos = _parse_sum(tokens, 0)
    if pos != len(tokens):
        raise SetExprSyntaxError(f"unexpected token {tokens[pos][0]!r} in {text!r}")
    return expr


def _tokenize_set_expr(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "SKRZ":
            tokens.append(("atom", ch))
        elif ch in "+*^()":
            tokens.append((ch, ch))
        elif ch in ("o", "∘"):
            tokens.append(("o", ch))
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j]))
            i = j
            continue
        else:
            raise SetExprSyntaxError(f"unexpected character {ch!r} in set expression")
        i += 1
    return tokens


def _parse_sum(tokens, pos):
    part, pos = _parse_jordan(tokens, pos)
    parts = [part]
    while pos < len(tokens) and tokens[pos][0] == "+":
        part, pos = _parse_jordan(tokens, pos + 1)
        parts.append(part)
    return sum_of(*parts), pos


def _parse_jordan(tokens, pos):
    left, pos = _parse_product(tokens, pos)
    while pos < len(tokens) and tokens[pos][0] == "o":
        right, pos = _parse_product(tokens, pos + 1)
        left = SetJordan(left, right)
    return left, pos


def _parse_product(tokens, pos):
    factor, pos = _parse_power(tokens, pos)
    factors = [factor]
    while pos < len(tokens) and tokens[pos][0] in ("atom", "(", "*"):
        if tokens[pos][0] == "*":
            pos += 1
        factor, pos = _parse_power(tokens, pos)
        factors.append(factor)
    return prod(*factors), pos


def _parse_power(tokens, pos):
    base, pos = _parse_primary(tokens, pos)
    if pos < len(tokens) and tokens[pos][0] == "^":
        if pos + 1 >= len(tokens) or tokens[pos + 1][0] != "int":
            raise SetExprSyntaxError("expected an integer exponent after '^'")
        base = power(base, int(tokens[pos + 1][1]))
        pos += 2
    return base, pos


def _parse_primary(tokens, pos):
    if pos >= len(tokens):
        raise SetExprSyntaxError("unexpected end of set expression")
    kind, value = tokens[pos]
    if kind == "atom":
        return SetAtom(value), pos + 1
    if kind == "(":
        expr, pos = _parse_sum(tokens, pos + 1)
        if pos >= len(tokens) or tokens[pos][0] != ")":
            raise SetExprSyntaxError("missing closing parenthesis")
        return expr, pos + 1
    raise SetExprSyntaxError(f"unexpected token {value!r}")


# -- structural subspaces ----------------------------------------------------

_bases_cache: dict[Algebra, tuple[Subspace, Subspace]] = {}
_center_cache: dict[Algebra, Subspace] = {}
_eval_cache: dict[tuple[Algebra, SetExpr], Subspace] = {}


def sym_skew_bases(algebra: Algebra) -> tuple[Subspace, Subspace]:
    """Canonical bases of the +1 and -1 eigenspaces of the involution."""
    cached = _bases_cache.get(algebra)
    if cached is not None:
        return cached
    f = algebra.field
    sym_vectors = []
    skew_vectors = []
    for e in algebra.basis():
        adj = e.star()
        sym_vectors.append((e + adj).coords)
        skew_vectors.append((e - adj).coords)
    s = Subspace.from_vectors(f, algebra.dim, sym_vectors)
    k = Subspace.from_vectors(f, algebra.dim, skew_vectors)
    _bases_cache[algebra] = (s, k)
    return s, k


def symmetric_elements(algebra: Algebra) -> list[Element]:
    return [devectorize(algebra, v) for v in sym_skew_bases(algebra)[0].basis]


def skew_elements(algebra: Algebra) -> list[Element]:
    return [devectorize(algebra, v) for v in sym_skew_bases(algebra)[1].basis]


def center(algebra: Algebra) -> Subspace:
    cached = _center_cache.get(algebra)
    if cached is None:
        cached = centralizer(list(algebra.basis()), algebra)
        _center_cache[algebra] = cached
    return cached


def full_space(algebra: Algebra) -> Subspace:
    return Subspace.full(algebra.field, algebra.dim)


def dim_over_center(algebra: Algebra) -> int:
    return algebra.dim // center(algebra).dim


def is_first_kind(algebra: Algebra) -> bool:
    """Whether the involution fixes the center pointwise."""
    s = sym_skew_bases(algebra)[0]
    return center(algebra).is_subspace_of(s)


def evaluate(expr: SetExpr, algebra: Algebra) -> Subspace:
    """Evaluate a set expression to its exact span inside ``algebra``."""
    key = (algebra, expr)
    cached = _eval_cache.get(key)
    if cached is not None:
        return cached
    if isinstance(expr, SetAtom):
        if expr.name == "S":
            result = sym_skew_bases(algebra)[0]
        elif expr.name == "K":
            result = sym_skew_bases(algebra)[1]
        elif expr.name == "R":
            result = full_space(algebra)
        elif expr.name == "Z":
            result = center(algebra)
        else:
            raise ValueError(f"unknown atom {expr.name!r}")
    elif isinstance(expr, SetProduct):
        result = evaluate(expr.parts[0], algebra)
        for part in expr.parts[1:]:
            result = product_span(result, evaluate(part, algebra), algebra, "product")
    elif isinstance(expr, SetJordan):
        result = product_span(
            evaluate(expr.left, algebra), evaluate(expr.right, algebra), algebra, "jordan"
        )
    elif isinstance(expr, SetSum):
        result = evaluate(expr.parts[0], algebra)
        for part in expr.parts[1:]:
            result = result + evaluate(part, algebra)
    elif isinstance(expr, SetPower):
        base = evaluate(expr.base, algebra)
        result = base
        for _ in range(expr.exponent - 1):
            result = product_span(result, base, algebra, "product")
    else:
        raise TypeError(f"not a set expression: {expr!r}")
    _eval_cache[key] = result
    return result


# -- commutativity probes ----------------------------------------------------


@dataclass(frozen=True)
class ProbeResult:
    mode: str
    holds: bool
    witness: tuple[Element, Element] | None

    def to_json(self) -> dict:
        out = {"mode": self.mode, "holds": self.holds}
        if self.witness is not None:
            out["witness"] = [self.witness[0].to_json(), self.witness[1].to_json()]
        return out


_PROBE_MODES = ("commutative", "skew_commutative", "mixed_sk")


def commutativity_probe(algebra: Algebra, mode: str, space: Subspace | None = None) -> ProbeResult:
    """Check a commutation law on basis pairs, or exhibit a violating pair.

    ``commutative`` and ``skew_commutative`` quantify over one subspace
    (default: S for commutative, K for skew-commutative); ``mixed_sk`` looks
    for a symmetric/skew pair with nonzero commutator.  Checking basis pairs
    suffices because the defect maps are bilinear.
    """
    if mode not in _PROBE_MODES:
        raise ValueError(f"unknown probe mode {mode!r}")
    s_space, k_space = sym_skew_bases(algebra)
    if mode == "mixed_sk":
        lefts = [devectorize(algebra, v) for v in s_space.basis]
        rights = [devectorize(algebra, v) for v in k_space.basis]
        for a in lefts:
            for b in rights:
                if not a.lie(b).is_zero():
                    return ProbeResult(mode, False, (a, b))
        return ProbeResult(mode, True, None)
    if space is None:
        space = s_space if mode == "commutative" else k_space
    elements = [devectorize(algebra, v) for v in space.basis]
    for i, a in enumerate(elements):
        for b in elements[i:]:
            defect = a.lie(b) if mode == "commutative" else a.jordan(b)
            if not defect.is_zero():
                return ProbeResult(mode, False, (a, b))
    return ProbeResult(mode, True, None)
