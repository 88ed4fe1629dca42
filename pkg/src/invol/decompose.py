"""Constructive decompositions with machine-checkable certificates.

Each scheme rewrites a target element as an explicit sum of tagged
monomials whose factors are symmetric (tag ``S``) or skew (tag ``K``):

* ``s3``: one symmetric term, two 2-factor and two 3-factor symmetric
  monomials (5 monomials total), available once some symmetric pair has an
  invertible commutator,
* ``s2``: one symmetric term plus at most ``M + 4`` two-factor symmetric
  monomials, where ``M`` bounds the pair decomposition of ``x s y``,
* ``k_plus_k2``: one skew term plus two-factor skew monomials, from an
  invertible Jordan value of a skew pair with ``xSy`` inside ``K^2``,
* ``k_plus_k2_k3``: one skew term, two 2-factor and one 3-factor skew
  monomials, from an invertible commutator of a skew pair.

:func:`verify_certificate` is the trust anchor: it re-multiplies every
monomial, re-checks every tag through the involution, and compares the sum
against the target exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from invol.algebras import Algebra, Element, matrix_algebra, quaternion_algebra
from invol.criteria import SymmetryTypeError, named_witness
from invol.fields import parse_field
from invol.linalg import solve
from invol.structure import skew_elements, symmetric_elements

TAG_SYMMETRIC = "S"
TAG_SKEW = "K"
TAG_SCALAR = "scalar"

SCHEMES = ("s3", "s2", "k_plus_k2", "k_plus_k2_k3")


class NotInvertibleError(ArithmeticError):
    """The scheme's pairing element has no inverse on this witness."""


class DecompositionObstructedError(RuntimeError):
    """A membership hypothesis fails, so the scheme cannot proceed."""


@dataclass(frozen=True)
class Factor:
    value: Element
    tag: str

    def to_json(self) -> dict:
        return {"tag": self.tag, "value": self.value.to_json()}


@dataclass(frozen=True)
class Term:
    factors: tuple[Factor, ...]

    def product(self) -> Element:
        out = self.factors[0].value
        for f in self.factors[1:]:
            out = out * f.value
        return out

    def to_json(self) -> dict:
        return {"factors": [f.to_json() for f in self.factors]}


@dataclass
class Certificate:
    scheme: str
    algebra: Algebra
    target: Element
    witness: dict[str, Element]
    terms: list[Term]
    params: dict = field(default_factory=dict)

    def recompose(self) -> Element:
        total = self.algebra.zero()
        for term in self.terms:
            total = total + term.product()
        return total

    def to_json(self) -> dict:
        return {
            "scheme": self.scheme,
            "algebra": self.algebra.describe(),
            "target": self.target.to_json(),
            "witness": {k: v.to_json() for k, v in sorted(self.witness.items())},
            "params": dict(self.params),
            "terms": [t.to_json() for t in self.terms],
        }


def algebra_from_descriptor(descriptor: dict) -> Algebra:
    fld = parse_field(descriptor["field"])
    if descriptor["kind"] == "matrix":
        return matrix_algebra(fld, descriptor["n"], descriptor["involution"])
    return quaternion_algebra(fld)


def certificate_from_json(data: dict) -> Certificate:
    algebra = algebra_from_descriptor(data["algebra"])
    witness = {k: algebra.element_from_json(v) for k, v in data["witness"].items()}
    terms = [
        Term(
            tuple(
                Factor(algebra.element_from_json(f["value"]), f["tag"])
                for f in t["factors"]
            )
        )
        for t in data["terms"]
    ]
    return Certificate(
        data["scheme"],
        algebra,
        algebra.element_from_json(data["target"]),
        witness,
        terms,
        dict(data.get("params", {})),
    )


def _sym(e: Element) -> Factor:
    return Factor(e, TAG_SYMMETRIC)


def _skw(e: Element) -> Factor:
    return Factor(e, TAG_SKEW)


def _require(element: Element, symmetric: bool, role: str) -> None:
    if symmetric and not element.is_symmetric():
        raise SymmetryTypeError(f"{role} must be symmetric")
    if not symmetric and not element.is_skew():
        raise SymmetryTypeError(f"{role} must be skew")


def _invert(value: Element, what: str) -> Element:
    inverse = value.right_inverse()
    if inverse is None:
        raise NotInvertibleError(f"{what} is not invertible")
    return inverse


# -- pair decomposers -----------------------------------------------------------

_dictionary_cache: dict[tuple[Algebra, str], tuple[list, list]] = {}


def _pair_dictionary(algebra: Algebra, middle: str):
    cached = _dictionary_cache.get((algebra, middle))
    if cached is not None:
        return cached
    basis = symmetric_elements(algebra) if middle == "S" else skew_elements(algebra)
    pairs = [(a, b) for a in basis for b in basis]
    columns = [(a * b).coords for a, b in pairs]
    _dictionary_cache[(algebra, middle)] = (pairs, columns)
    return pairs, columns


def _solve_pairs(algebra: Algebra, target: Element, middle: str):
    """Write ``target`` as a sum of products of two ``middle``-typed factors."""
    pairs, columns = _pair_dictionary(algebra, middle)
    f = algebra.field
    d = algebra.dim
    rows = [[columns[j][i] for j in range(len(columns))] for i in range(d)]
    coefficients = solve(f, rows, target.coords)
    if coefficients is None:
        return None
    out = []
    for coeff, (a, b) in zip(coefficients, pairs):
        if not f.is_zero(coeff):
            out.append((a.scale(coeff), b))
    return out


def generic_xsy_s2(algebra: Algebra, x: Element, y: Element, s: Element):
    """Exact pair decomposition of ``x s y`` against symmetric products.

    Returns a list of symmetric pairs summing to ``x s y``, or None when the
    product lies outside the span of symmetric products (the counterexample
    signal).
    """
    for role, e in (("x", x), ("y", y), ("s", s)):
        _require(e, True, role)
    return _solve_pairs(algebra, x * s * y, "S")


def generic_xsy_k2(algebra: Algebra, x: Element, y: Element, s: Element):
    """Pair decomposition of ``x s y`` against skew products (or None)."""
    _require(x, False, "x")
    _require(y, False, "y")
    _require(s, True, "s")
    return _solve_pairs(algebra, x * s * y, "K")


def m2_transpose_xsy(algebra: Algebra, x: Element, y: Element, s: Element):
    """Closed-form two-pair split of ``x s y`` for the 2x2 transpose witness.

    For ``s = [[a, b], [b, d]]`` the product is ``b e11 + a e12 - d e21 - b e22``,
    which splits as ``(b e11 - b e22) * 1 + (a e11 - d e22)(e12 + e21)``.
    """
    if algebra.kind != "matrix" or algebra.n != 2 or algebra.involution != "transpose":
        raise ValueError("closed form applies to the 2x2 transpose algebra")
    wx, wy = named_witness(algebra, "s2_transpose")
    if (x, y) != (wx, wy):
        raise ValueError("closed form applies to the catalog witness pair only")
    _require(s, True, "s")
    f = algebra.field
    a, b, d = s.coords[0], s.coords[1], s.coords[3]
    e = algebra.matrix_unit
    out = []
    if not f.is_zero(b):
        out.append((e(1, 1).scale(b) - e(2, 2).scale(b), algebra.unit()))
    if not (f.is_zero(a) and f.is_zero(d)):
        out.append((e(1, 1).scale(a) - e(2, 2).scale(d), e(1, 2) + e(2, 1)))
    return out


def _default_s2_decomposer(algebra: Algebra, x: Element, y: Element):
    if algebra.kind == "matrix" and algebra.n == 2 and algebra.involution == "transpose":
        wx, wy = named_witness(algebra, "s2_transpose")
        if (x, y) == (wx, wy):
            return m2_transpose_xsy, 2
    s_dim = len(symmetric_elements(algebra))
    return generic_xsy_s2, s_dim * s_dim


# -- schemes ----------------------------------------------------------------------


def decompose_s3(algebra: Algebra, x: Element, y: Element, target: Element) -> Certificate:
    """Five-monomial rewriting of ``target`` in symmetric factors."""
    _require(x, True, "x")
    _require(y, True, "y")
    z = _invert(x * y - y * x, "xy - yx")
    w = (z * target).star()
    s, k = w.sk_split()
    lam = -(w * x * y + y * x * w.star())
    terms = [
        Term((_sym(lam),)),
        Term((_sym(k * x - x * k), _sym(y))),
        Term((_sym(-x), _sym(y * k - k * y))),
        Term((_sym(s), _sym(x), _sym(y))),
        Term((_sym(x), _sym(y), _sym(s))),
    ]
    return Certificate("s3", algebra, target, {"x": x, "y": y, "z": z}, terms)


def decompose_s2(
    algebra: Algebra,
    x: Element,
    y: Element,
    target: Element,
    xsy_decomposer=None,
    m_bound: int | None = None,
) -> Certificate:
    """Two-factor rewriting of ``target`` in symmetric factors.

    ``xsy_decomposer(algebra, x, y, s)`` must return pairs of symmetric
    elements whose products sum to ``x s y`` (or None).  When omitted, the
    closed two-pair form is used for the 2x2 transpose catalog witness and
    the generic exact solver everywhere else.
    """
    _require(x, True, "x")
    _require(y, True, "y")
    if xsy_decomposer is None:
        xsy_decomposer, m_bound = _default_s2_decomposer(algebra, x, y)
    elif m_bound is None:
        s_dim = len(symmetric_elements(algebra))
        m_bound = s_dim * s_dim
    z = _invert(x * y - y * x, "xy - yx")
    w = (z * target).star()
    s, k = w.sk_split()
    lam = -(w * x * y + y * x * w.star())
    pairs = xsy_decomposer(algebra, x, y, s)
    if pairs is None:
        raise DecompositionObstructedError("x s y lies outside the span of S*S")
    if len(pairs) > m_bound:
        raise DecompositionObstructedError(
            f"decomposer produced {len(pairs)} pairs, above the bound {m_bound}"
        )
    terms = [
        Term((_sym(lam),)),
        Term((_sym(k * x - x * k), _sym(y))),
        Term((_sym(-x), _sym(y * k - k * y))),
        Term((_sym(s * x + x * s), _sym(y))),
        Term((_sym(x), _sym(y * s + s * y))),
    ]
    for a, b in pairs:
        terms.append(Term((_sym(a.scale(-2)), _sym(b))))
    return Certificate(
        "s2",
        algebra,
        target,
        {"x": x, "y": y, "z": z},
        terms,
        {"m": len(pairs), "m_bound": m_bound},
    )


def decompose_k_chain(
    algebra: Algebra,
    x: Element,
    y: Element,
    target: Element,
    scheme: str,
    xsy_to_k2=None,
) -> Certificate:
    """Skew-factor rewritings of ``target`` (schemes k_plus_k2, k_plus_k2_k3)."""
    if scheme not in ("k_plus_k2", "k_plus_k2_k3"):
        raise ValueError(f"unknown skew scheme {scheme!r}")
    _require(x, False, "x")
    _require(y, False, "y")
    if scheme == "k_plus_k2":
        z = _invert(x * y + y * x, "xy + yx")
        w = (z * target).star()
        w_star = w.star()
        terms = [
            Term((_skw(y * x * w_star - w * x * y),)),
            Term((_skw(w * x + x * w_star), _skw(y))),
            Term((_skw(x), _skw(y * w_star + w * y))),
        ]
        middle = w_star + w
        decomposer = xsy_to_k2 if xsy_to_k2 is not None else generic_xsy_k2
        pairs = decomposer(algebra, x, y, middle)
        if pairs is None:
            raise DecompositionObstructedError("x S y lies outside the span of K*K")
        for a, b in pairs:
            terms.append(Term((_skw(-a), _skw(b))))
        params = {"m": len(pairs), "m_bound": len(skew_elements(algebra)) ** 2}
    else:
        z = _invert(x * y - y * x, "xy - yx")
        w = (z * target).star()
        w_star = w.star()
        terms = [
            Term((_skw(w * x * y - y * x * w_star),)),
            Term((_skw(-(w * x + x * w_star)), _skw(y))),
            Term((_skw(x), _skw(y * w_star + w * y))),
            Term((_skw(x), _skw(w_star - w), _skw(y))),
        ]
        params = {}
    return Certificate(scheme, algebra, target, {"x": x, "y": y, "z": z}, terms, params)


def decompose(
    algebra: Algebra, scheme: str, x: Element, y: Element, target: Element
) -> Certificate:
    """Dispatch on the scheme name."""
    if scheme == "s3":
        return decompose_s3(algebra, x, y, target)
    if scheme == "s2":
        return decompose_s2(algebra, x, y, target)
    if scheme in ("k_plus_k2", "k_plus_k2_k3"):
        return decompose_k_chain(algebra, x, y, target, scheme)
    raise ValueError(f"unknown scheme {scheme!r}; known: {SCHEMES}")


# -- verification -----------------------------------------------------------------


@dataclass
class VerificationResult:
    valid: bool
    violations: list[str]

    def to_json(self) -> dict:
        return {"valid": self.valid, "violations": list(self.violations)}


def _is_scalar_multiple_of_unit(e: Element) -> bool:
    unit = e.algebra.unit()
    f = e.algebra.field
    # pick the coefficient off the first unit coordinate
    idx = next(i for i, c in enumerate(unit.coords) if not f.is_zero(c))
    return e == unit.scale(e.coords[idx])


_SCHEME_TAGS = {
    "s3": TAG_SYMMETRIC,
    "s2": TAG_SYMMETRIC,
    "k_plus_k2": TAG_SKEW,
    "k_plus_k2_k3": TAG_SKEW,
}


def _check_bounds(cert: Certificate, violations: list[str]) -> None:
    lengths = sorted(len(t.factors) for t in cert.terms)
    counts = {n: lengths.count(n) for n in set(lengths)}
    if cert.scheme == "s3":
        if len(cert.terms) > 5:
            violations.append(f"s3 certificate has {len(cert.terms)} terms, bound is 5")
        if counts.get(1, 0) > 1 or counts.get(3, 0) > 2 or (lengths and lengths[-1] > 3):
            violations.append(f"s3 term lengths {lengths} exceed the (1,2,2,3,3) pattern")
    elif cert.scheme == "s2":
        bound = 1 + cert.params.get("m_bound", 0) + 4
        if len(cert.terms) > bound:
            violations.append(f"s2 certificate has {len(cert.terms)} terms, bound is {bound}")
        if counts.get(1, 0) > 1 or (lengths and lengths[-1] > 2):
            violations.append(f"s2 term lengths {lengths} exceed the (1,2,...,2) pattern")
    elif cert.scheme == "k_plus_k2":
        bound = 1 + 2 + cert.params.get("m_bound", 0)
        if len(cert.terms) > bound:
            violations.append(f"certificate has {len(cert.terms)} terms, bound is {bound}")
        if counts.get(1, 0) > 1 or (lengths and lengths[-1] > 2):
            violations.append(f"term lengths {lengths} exceed the (1,2,...,2) pattern")
    elif cert.scheme == "k_plus_k2_k3":
        if len(cert.terms) > 4:
            violations.append(f"certificate has {len(cert.terms)} terms, bound is 4")
        if counts.get(1, 0) > 1 or counts.get(3, 0) > 1 or (lengths and lengths[-1] > 3):
            violations.append(f"term lengths {lengths} exceed the (1,2,2,3) pattern")


def verify_certificate(cert: Certificate) -> VerificationResult:
    """Re-check a certificate from scratch: tags, bounds and recomposition."""
    violations: list[str] = []
    if cert.scheme not in SCHEMES:
        violations.append(f"unknown scheme {cert.scheme!r}")
        return VerificationResult(False, violations)
    expected_tag = _SCHEME_TAGS[cert.scheme]
    for t_index, term in enumerate(cert.terms):
        if not term.factors:
            violations.append(f"term {t_index} is empty")
            continue
        for f_index, factor in enumerate(term.factors):
            where = f"term {t_index}, factor {f_index}"
            if factor.tag == TAG_SYMMETRIC:
                if not factor.value.is_symmetric():
                    violations.append(f"{where}: factor not symmetric")
            elif factor.tag == TAG_SKEW:
                if not factor.value.is_skew():
                    violations.append(f"{where}: factor not skew")
            elif factor.tag == TAG_SCALAR:
                if not _is_scalar_multiple_of_unit(factor.value):
                    violations.append(f"{where}: factor not a scalar multiple of 1")
            else:
                violations.append(f"{where}: unknown tag {factor.tag!r}")
            if factor.tag != TAG_SCALAR and factor.tag != expected_tag:
                violations.append(
                    f"{where}: tag {factor.tag!r} not allowed in scheme {cert.scheme!r}"
                )
    if cert.recompose() != cert.target:
        violations.append("sum mismatch: terms do not recompose to the target")
    _check_bounds(cert, violations)
    return VerificationResult(not violations, violations)
