"""Witness-style criteria: nondegeneracy plus basis-quantified membership.

Each criterion takes a pair ``(x, y)`` of the demanded symmetry types,
checks a nondegeneracy condition on ``xy - yx`` or ``xy + yx`` (nonzero or
invertible), and then checks that conjugation ``x . middle . y`` lands in a
target span for every basis element of the middle set.  Quantifying over a
basis suffices because the map ``m -> x m y`` is linear.

The module also provides the catalog of explicit witness constructions for
the matrix involutions and a deterministic bounded witness search.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from invol.algebras import Algebra, Element
from invol.structure import (
    evaluate,
    parse_set_expr,
    skew_elements,
    symmetric_elements,
)


class SymmetryTypeError(ValueError):
    """An element does not have the symmetry type a criterion demands."""


class UnknownCriterionError(ValueError):
    pass


class WitnessConstructionError(ValueError):
    """A catalog witness is incompatible with the requested algebra."""


@dataclass(frozen=True)
class VariantSpec:
    key: str
    x_type: str                # "S" or "K"
    y_type: str
    pairing: str               # "lie" or "jordan"
    nondegeneracy: str         # "nonzero" or "invertible"
    middle: str | None         # basis the conjugated element ranges over
    target: str | None         # membership target, as a set expression
    conclusion: str            # the set that fills the algebra when the criterion passes


VARIANTS: dict[str, VariantSpec] = {
    v.key: v
    for v in (
        VariantSpec("first", "S", "S", "lie", "nonzero", "S", "S^2", "S^2"),
        VariantSpec("second", "S", "S", "jordan", "nonzero", "K", "S^2", "S^2"),
        VariantSpec("a", "K", "K", "jordan", "nonzero", "S", "KS+K^2", "KS+K^2"),
        VariantSpec("b", "K", "S", "lie", "nonzero", "S", "KS+K^2", "KS+K^2"),
        VariantSpec("b_mirror", "S", "K", "lie", "nonzero", "S", "SK+K^2", "SK+K^2"),
        VariantSpec("c", "K", "S", "lie", "nonzero", "S", "KS", "KS"),
        VariantSpec("d", "K", "K", "jordan", "invertible", "S", "K^2", "K+K^2"),
        VariantSpec("e", "K", "K", "lie", "invertible", None, None, "K+K^2+K^3"),
        VariantSpec("f", "S", "K", "lie", "nonzero", "S", "SK", "SK"),
        VariantSpec("g", "S", "S", "lie", "nonzero", "K", "KS+SK", "KS+SK"),
        VariantSpec("h_s3", "S", "S", "lie", "invertible", None, None, "S^3"),
        VariantSpec("h_s2", "S", "S", "lie", "invertible", "S", "S^2", "S^2"),
    )
}


@dataclass
class CriterionOutcome:
    criterion: str
    x: Element
    y: Element
    pairing: str
    pairing_value: Element
    nondegenerate: bool
    invertible: bool | None
    memberships: list[tuple[int, bool]] = field(default_factory=list)
    passed: bool = False
    quantification: str = "basis-quantified"

    def to_json(self) -> dict:
        out = {
            "criterion": self.criterion,
            "algebra": self.x.algebra.describe(),
            "witness": {"x": self.x.to_json(), "y": self.y.to_json()},
            "nondegeneracy": {
                "pairing": self.pairing,
                "value": self.pairing_value.to_json(),
                "is_zero": self.pairing_value.is_zero(),
                "invertible": self.invertible,
                "holds": self.nondegenerate,
            },
            "memberships": [
                {"basis_index": i, "contained": ok} for i, ok in self.memberships
            ],
            "quantification": self.quantification,
            "passed": self.passed,
        }
        return out


def _require_type(element: Element, symmetry: str, role: str, criterion: str) -> None:
    if symmetry == "S":
        if not element.is_symmetric():
            raise SymmetryTypeError(f"{role} must be symmetric for criterion {criterion!r}")
    else:
        if not element.is_skew():
            raise SymmetryTypeError(f"{role} must be skew for criterion {criterion!r}")


def _middle_basis(algebra: Algebra, which: str) -> list[Element]:
    return symmetric_elements(algebra) if which == "S" else skew_elements(algebra)


def check_criterion(algebra: Algebra, criterion: str, x: Element, y: Element) -> CriterionOutcome:
    """Evaluate one criterion variant on a concrete witness pair."""
    spec = VARIANTS.get(criterion)
    if spec is None:
        raise UnknownCriterionError(
            f"unknown criterion {criterion!r}; known: {sorted(VARIANTS)}"
        )
    if x.algebra != algebra or y.algebra != algebra:
        raise ValueError("witness elements must belong to the given algebra")
    _require_type(x, spec.x_type, "x", criterion)
    _require_type(y, spec.y_type, "y", criterion)

    value = x.lie(y) if spec.pairing == "lie" else x.jordan(y)
    invertible: bool | None = None
    if spec.nondegeneracy == "invertible":
        invertible = value.right_inverse() is not None
        nondegenerate = invertible
    else:
        nondegenerate = not value.is_zero()

    outcome = CriterionOutcome(criterion, x, y, spec.pairing, value, nondegenerate, invertible)
    if not nondegenerate:
        return outcome

    all_contained = True
    if spec.middle is not None:
        target = evaluate(parse_set_expr(spec.target), algebra)
        for index, m in enumerate(_middle_basis(algebra, spec.middle)):
            contained = target.contains_vector((x * m * y).coords)
            outcome.memberships.append((index, contained))
            if not contained:
                all_contained = False
                break
    outcome.passed = all_contained
    return outcome


def check_first_criterion(algebra: Algebra, x: Element, y: Element) -> CriterionOutcome:
    return check_criterion(algebra, "first", x, y)


def check_second_criterion(algebra: Algebra, x: Element, y: Element) -> CriterionOutcome:
    return check_criterion(algebra, "second", x, y)


def check_auxiliary_criterion(
    algebra: Algebra, variant: str, x: Element, y: Element
) -> CriterionOutcome:
    if variant in ("first", "second"):
        raise UnknownCriterionError("use the dedicated first/second criterion checkers")
    return check_criterion(algebra, variant, x, y)


# -- catalog of explicit witnesses -------------------------------------------


def _require_involution(algebra: Algebra, involution: str, name: str) -> None:
    if algebra.kind != "matrix" or algebra.involution != involution:
        raise WitnessConstructionError(
            f"witness {name!r} needs a matrix algebra with the {involution} involution"
        )


def _alternating_diagonal(algebra: Algebra, offset: int, count: int) -> Element:
    e = algebra.matrix_unit
    out = algebra.zero()
    for l in range(count // 2):
        i = offset + 2 * l + 1
        out = out + e(i, i) - e(i + 1, i + 1)
    return out


def _pairing_offdiagonal(algebra: Algebra, offset: int, count: int) -> Element:
    e = algebra.matrix_unit
    out = algebra.zero()
    for l in range(count // 2):
        i = offset + 2 * l + 1
        out = out + e(i, i + 1) + e(i + 1, i)
    return out


def _w_s3_transpose_even(algebra: Algebra):
    _require_involution(algebra, "transpose", "s3_transpose_even")
    n = algebra.n
    if n < 2 or n % 2 != 0:
        raise WitnessConstructionError(
            f"s3_transpose_even needs even n >= 2, got n={n}"
        )
    return _alternating_diagonal(algebra, 0, n), _pairing_offdiagonal(algebra, 0, n)


def _w_s3_symplectic(algebra: Algebra):
    _require_involution(algebra, "symplectic", "s3_symplectic")
    m = algebra.n // 2
    if m < 2 or m % 2 != 0:
        raise WitnessConstructionError(
            f"s3_symplectic needs n = 2m with even m >= 2, got n={algebra.n}"
        )
    x = _alternating_diagonal(algebra, 0, m) + _alternating_diagonal(algebra, m, m)
    y = _pairing_offdiagonal(algebra, 0, m) + _pairing_offdiagonal(algebra, m, m)
    return x, y


def _w_s2_transpose(algebra: Algebra):
    _require_involution(algebra, "transpose", "s2_transpose")
    if algebra.n < 2:
        raise WitnessConstructionError("s2_transpose needs n >= 2")
    e = algebra.matrix_unit
    return e(1, 1) - e(2, 2), e(1, 2) + e(2, 1)


def _symplectic_size(algebra: Algebra, name: str) -> int:
    _require_involution(algebra, "symplectic", name)
    if algebra.n < 4:
        raise WitnessConstructionError(f"{name} needs n = 2m >= 4, got n={algebra.n}")
    return algebra.n // 2


def _w_s2_symplectic(algebra: Algebra):
    m = _symplectic_size(algebra, "s2_symplectic")
    e = algebra.matrix_unit
    return e(1, m + 2) - e(2, m + 1), e(1, 2) + e(m + 2, m + 1)


def _w_crit2_transpose(algebra: Algebra):
    _require_involution(algebra, "transpose", "crit2_transpose")
    if algebra.n < 2:
        raise WitnessConstructionError("crit2_transpose needs n >= 2")
    e = algebra.matrix_unit
    return e(1, 1), e(1, 2) + e(2, 1)


def _w_crit2_symplectic(algebra: Algebra):
    m = _symplectic_size(algebra, "crit2_symplectic")
    e = algebra.matrix_unit
    return e(1, m + 2) - e(2, m + 1), e(1, 1) + e(m + 1, m + 1)


def _w_ks_k2_transpose(algebra: Algebra):
    _require_involution(algebra, "transpose", "ks_k2_transpose")
    if algebra.n < 3:
        raise WitnessConstructionError("ks_k2_transpose needs n >= 3")
    e = algebra.matrix_unit
    return e(1, 2) - e(2, 1), e(1, 3) - e(3, 1)


def _w_ks_k2_symplectic(algebra: Algebra):
    m = _symplectic_size(algebra, "ks_k2_symplectic")
    e = algebra.matrix_unit
    return e(1, m + 1), e(m + 1, 1)


def _w_ks_k2_v2_transpose(algebra: Algebra):
    _require_involution(algebra, "transpose", "ks_k2_v2_transpose")
    n = algebra.n
    if n < 3:
        raise WitnessConstructionError("ks_k2_v2_transpose needs n >= 3")
    e = algebra.matrix_unit
    return e(1, 2) + e(2, 1), e(1, n) - e(n, 1)


def _w_ks_k2_v2_symplectic(algebra: Algebra):
    m = _symplectic_size(algebra, "ks_k2_v2_symplectic")
    e = algebra.matrix_unit
    return e(1, m) + e(2 * m, m + 1), e(m, 2 * m)


def _w_k_k2_symplectic_m2(algebra: Algebra):
    _require_involution(algebra, "symplectic", "k_k2_symplectic_m2")
    if algebra.n != 2:
        raise WitnessConstructionError("k_k2_symplectic_m2 is the n=2 construction")
    e = algebra.matrix_unit
    return e(1, 2), e(2, 1)


# name -> (builder, criterion the witness is meant for)
WITNESS_CATALOG = {
    "s3_transpose_even": (_w_s3_transpose_even, "h_s3"),
    "s3_symplectic": (_w_s3_symplectic, "h_s3"),
    "s2_transpose": (_w_s2_transpose, "first"),
    "s2_symplectic": (_w_s2_symplectic, "first"),
    "crit2_transpose": (_w_crit2_transpose, "second"),
    "crit2_symplectic": (_w_crit2_symplectic, "second"),
    "ks_k2_transpose": (_w_ks_k2_transpose, "a"),
    "ks_k2_symplectic": (_w_ks_k2_symplectic, "a"),
    "ks_k2_v2_transpose": (_w_ks_k2_v2_transpose, "b_mirror"),
    "ks_k2_v2_symplectic": (_w_ks_k2_v2_symplectic, "b_mirror"),
    "k_k2_symplectic_m2": (_w_k_k2_symplectic_m2, "d"),
}


def named_witness(algebra: Algebra, name: str) -> tuple[Element, Element]:
    """Build a catalog witness pair, re-validating its claimed symmetry types."""
    entry = WITNESS_CATALOG.get(name)
    if entry is None:
        raise WitnessConstructionError(
            f"unknown witness {name!r}; known: {sorted(WITNESS_CATALOG)}"
        )
    builder, criterion = entry
    x, y = builder(algebra)
    spec = VARIANTS[criterion]
    _require_type(x, spec.x_type, "x", criterion)
    _require_type(y, spec.y_type, "y", criterion)
    return x, y


def witness_criterion(name: str) -> str:
    return WITNESS_CATALOG[name][1]


# -- deterministic search ------------------------------------------------------


@dataclass
class SearchOutcome:
    criterion: str
    found: CriterionOutcome | None
    tried: int
    exhausted: bool
    pool_size: int
    pool: str

    def to_json(self) -> dict:
        return {
            "criterion": self.criterion,
            "pool": self.pool,
            "pool_size": self.pool_size,
            "tried": self.tried,
            "exhausted": self.exhausted,
            "found": None if self.found is None else self.found.to_json(),
        }


def candidate_pool(basis: list[Element], level: str) -> list[Element]:
    """Deterministic candidate list: basis vectors, then pairwise sums/differences."""
    if level not in ("basis", "extended"):
        raise ValueError(f"unknown pool level {level!r}")
    pool = list(basis)
    if level == "extended":
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                pool.append(basis[i] + basis[j])
                pool.append(basis[i] - basis[j])
    return pool


def witness_search(
    algebra: Algebra,
    criterion: str,
    pool: str = "extended",
    max_pairs: int | None = None,
) -> SearchOutcome:
    """Scan candidate pairs in enumeration order; stop at the first pass.

    The result is deterministic: candidates are basis elements followed by
    pairwise sums and differences, and pairs are visited row-major.
    """
    spec = VARIANTS.get(criterion)
    if spec is None:
        raise UnknownCriterionError(
            f"unknown criterion {criterion!r}; known: {sorted(VARIANTS)}"
        )
    xs = candidate_pool(_middle_basis(algebra, spec.x_type), pool)
    ys = (
        xs
        if spec.y_type == spec.x_type
        else candidate_pool(_middle_basis(algebra, spec.y_type), pool)
    )
    tried = 0
    for x in xs:
        for y in ys:
            if max_pairs is not None and tried >= max_pairs:
                return SearchOutcome(criterion, None, tried, False, len(xs) * len(ys), pool)
            tried += 1
            outcome = check_criterion(algebra, criterion, x, y)
            if outcome.passed:
                return SearchOutcome(criterion, outcome, tried, False, len(xs) * len(ys), pool)
    return SearchOutcome(criterion, None, tried, True, len(xs) * len(ys), pool)
