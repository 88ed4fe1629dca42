"""Named structural verifications on a concrete algebra instance.

Each entry checks its hypotheses computationally (commutativity probes,
bounded witness searches, dimension conditions) and only then evaluates the
conclusion as an exact span comparison.  A report is ``Verified`` when all
hypothesis checks and the conclusion pass, ``HypothesisFailed`` when some
hypothesis does not hold on the instance (the conclusion is then not
claimed), and ``ConclusionFailed`` otherwise.  A ``ConclusionFailed`` on
these instances indicates an implementation bug and is treated as fatal by
the test suite.

Hypotheses that are true by construction for the supported instances
(simplicity of full matrix algebras and of the quaternions) are recorded as
``by-construction`` checks so that vacuous and substantive passes remain
distinguishable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from invol import criteria
from invol.algebras import Algebra, devectorize
from invol.structure import (
    center,
    commutativity_probe,
    dim_over_center,
    evaluate,
    is_first_kind,
    parse_set_expr,
    sym_skew_bases,
    symmetric_elements,
)
from invol.subspaces import centralizer

VERIFIED = "Verified"
HYPOTHESIS_FAILED = "HypothesisFailed"
CONCLUSION_FAILED = "ConclusionFailed"


class UnknownTheoremError(ValueError):
    pass


@dataclass
class CheckRecord:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "details": self.details}


@dataclass
class TheoremReport:
    theorem: str
    algebra: dict
    hypotheses: list[CheckRecord]
    conclusion: CheckRecord | None
    status: str

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "algebra": self.algebra,
            "status": self.status,
            "hypotheses": [h.to_json() for h in self.hypotheses],
            "conclusion": None if self.conclusion is None else self.conclusion.to_json(),
        }


class _Verification:
    """Accumulates hypothesis checks, then runs the conclusion lazily."""

    def __init__(self, theorem: str, algebra: Algebra):
        self.theorem = theorem
        self.algebra = algebra
        self.hypotheses: list[CheckRecord] = []

    def hypothesis(self, record: CheckRecord) -> bool:
        self.hypotheses.append(record)
        return record.passed

    def all_hold(self) -> bool:
        return all(h.passed for h in self.hypotheses)

    def finish(self, conclusion: CheckRecord | None) -> TheoremReport:
        if not self.all_hold():
            status = HYPOTHESIS_FAILED
        elif conclusion is None or conclusion.passed:
            status = VERIFIED
        else:
            status = CONCLUSION_FAILED
        return TheoremReport(
            self.theorem, self.algebra.describe(), self.hypotheses, conclusion, status
        )


# -- hypothesis builders --------------------------------------------------------


def _h_simple(algebra: Algebra) -> CheckRecord:
    note = (
        "full matrix algebra over a field"
        if algebra.kind == "matrix"
        else "quaternion algebra over a field"
    )
    return CheckRecord("simple", True, {"mode": "by-construction", "note": note})


def _h_first_kind(algebra: Algebra) -> CheckRecord:
    ok = is_first_kind(algebra)
    return CheckRecord("involution_first_kind", ok, {"center_dim": center(algebra).dim})


def _h_s_proper(algebra: Algebra) -> CheckRecord:
    s_dim = sym_skew_bases(algebra)[0].dim
    return CheckRecord(
        "symmetric_part_proper", s_dim < algebra.dim, {"dim_S": s_dim, "dim_R": algebra.dim}
    )


def _h_probe(algebra: Algebra, name: str, mode: str, expect_holds: bool) -> CheckRecord:
    probe = commutativity_probe(algebra, mode)
    passed = probe.holds if expect_holds else not probe.holds
    details: dict = {"mode": mode}
    if probe.witness is not None:
        details["witness"] = [probe.witness[0].to_json(), probe.witness[1].to_json()]
    return CheckRecord(name, passed, details)


def _h_dim_over_center(algebra: Algebra, minimum_exclusive: int | None, equals: int | None = None) -> CheckRecord:
    value = dim_over_center(algebra)
    if equals is not None:
        passed = value == equals
        name = f"dim_over_center_eq_{equals}"
    else:
        passed = value > minimum_exclusive
        name = f"dim_over_center_gt_{minimum_exclusive}"
    return CheckRecord(name, passed, {"dim_over_center": value})


def _h_witness(algebra: Algebra, criterion: str, pool: str = "basis") -> CheckRecord:
    result = criteria.witness_search(algebra, criterion, pool=pool)
    details = {
        "criterion": criterion,
        "pool": pool,
        "pool_size": result.pool_size,
        "tried": result.tried,
    }
    if result.found is not None:
        details["witness"] = {
            "x": result.found.x.to_json(),
            "y": result.found.y.to_json(),
        }
    else:
        details["exhausted"] = result.exhausted
    return CheckRecord(f"witness_{criterion}", result.found is not None, details)


def _h_subset(algebra: Algebra, name: str, small: str, big: str) -> CheckRecord:
    a = evaluate(parse_set_expr(small), algebra)
    b = evaluate(parse_set_expr(big), algebra)
    return CheckRecord(name, a.is_subspace_of(b), {"dim_small": a.dim, "dim_big": b.dim})


# -- conclusion builders ---------------------------------------------------------


def _c_fills(algebra: Algebra, expr_text: str) -> CheckRecord:
    space = evaluate(parse_set_expr(expr_text), algebra)
    return CheckRecord(
        f"{expr_text} = R",
        space.dim == algebra.dim,
        {"dim": space.dim, "dim_R": algebra.dim},
    )


def _c_multi_fills(algebra: Algebra, exprs: list[str]) -> CheckRecord:
    dims = {}
    ok = True
    for text in exprs:
        space = evaluate(parse_set_expr(text), algebra)
        dims[text] = space.dim
        ok = ok and space.dim == algebra.dim
    return CheckRecord(" and ".join(f"{t} = R" for t in exprs), ok, {"dims": dims, "dim_R": algebra.dim})


# -- the registry ---------------------------------------------------------------


def _t_prop_s_commutative(v: _Verification) -> TheoremReport:
    alg = v.algebra
    v.hypothesis(_h_first_kind(alg))
    v.hypothesis(_h_s_proper(alg))
    v.hypothesis(_h_probe(alg, "symmetric_part_commutative", "commutative", True))
    if not v.all_hold():
        return v.finish(None)
    s, _ = sym_skew_bases(alg)
    s2 = evaluate(parse_set_expr("S^2"), alg)
    conclusion = CheckRecord(
        "S^2 = S and S^2 != R",
        s2 == s and s2.dim < alg.dim,
        {"dim_S2": s2.dim, "dim_S": s.dim, "dim_R": alg.dim},
    )
    return v.finish(conclusion)


def _noncommutative_s_family(expr_texts: list[str]):
    def run(v: _Verification) -> TheoremReport:
        alg = v.algebra
        v.hypothesis(_h_simple(alg))
        v.hypothesis(_h_first_kind(alg))
        v.hypothesis(_h_s_proper(alg))
        v.hypothesis(_h_probe(alg, "symmetric_part_noncommutative", "commutative", False))
        if not v.all_hold():
            return v.finish(None)
        return v.finish(_c_multi_fills(alg, expr_texts))

    return run


def _t_s2_equals_r(v: _Verification) -> TheoremReport:
    alg = v.algebra
    v.hypothesis(_h_simple(alg))
    v.hypothesis(_h_first_kind(alg))
    v.hypothesis(_h_s_proper(alg))
    v.hypothesis(_h_probe(alg, "symmetric_part_noncommutative", "commutative", False))
    v.hypothesis(_h_witness(alg, "first"))
    if not v.all_hold():
        return v.finish(None)
    return v.finish(_c_fills(alg, "S^2"))


def _criterion_equivalence(criterion: str):
    """The biconditional: a witness exists iff S^2 fills the algebra."""

    def run(v: _Verification) -> TheoremReport:
        alg = v.algebra
        v.hypothesis(_h_simple(alg))
        v.hypothesis(_h_first_kind(alg))
        v.hypothesis(_h_s_proper(alg))
        v.hypothesis(_h_probe(alg, "symmetric_part_noncommutative", "commutative", False))
        if not v.all_hold():
            return v.finish(None)
        search = criteria.witness_search(alg, criterion, pool="basis")
        has_witness = search.found is not None
        s2_full = evaluate(parse_set_expr("S^2"), alg).dim == alg.dim
        details: dict = {"witness_found": has_witness, "S^2_fills": s2_full}
        consistent = has_witness == s2_full
        if s2_full and criterion == "second":
            # the unit pair realizes the reverse direction explicitly
            unit = alg.unit()
            details["unit_pair_passes"] = criteria.check_criterion(
                alg, "second", unit, unit
            ).passed
            consistent = consistent and details["unit_pair_passes"]
        if s2_full and criterion == "first":
            probe = commutativity_probe(alg, "commutative")
            if probe.witness is not None:
                out = criteria.check_criterion(alg, "first", probe.witness[0], probe.witness[1])
                details["noncommuting_pair_passes"] = out.passed
                consistent = consistent and out.passed
        conclusion = CheckRecord("witness exists iff S^2 = R", consistent, details)
        return v.finish(conclusion)

    return run


def _t_cent_s_in_z(v: _Verification) -> TheoremReport:
    alg = v.algebra
    v.hypothesis(_h_simple(alg))
    v.hypothesis(_h_dim_over_center(alg, 4))
    if not v.all_hold():
        return v.finish(None)
    cent = centralizer(symmetric_elements(alg), alg)
    z = center(alg)
    conclusion = CheckRecord(
        "Cent(S) = Z(R)",
        cent == z,
        {"dim_Cent_S": cent.dim, "dim_Z": z.dim},
    )
    return v.finish(conclusion)


def _t_s_comm_iff_z_eq_s(v: _Verification) -> TheoremReport:
    alg = v.algebra
    v.hypothesis(_h_simple(alg))
    v.hypothesis(_h_first_kind(alg))
    v.hypothesis(_h_s_proper(alg))
    v.hypothesis(_h_dim_over_center(alg, 4))
    if not v.all_hold():
        return v.finish(None)
    commutative = commutativity_probe(alg, "commutative").holds
    z_equals_s = center(alg) == sym_skew_bases(alg)[0]
    conclusion = CheckRecord(
        "S commutative iff Z(R) = S",
        commutative == z_equals_s,
        {"S_commutative": commutative, "Z_equals_S": z_equals_s},
    )
    return v.finish(conclusion)


def _t_herstein_k(v: _Verification) -> TheoremReport:
    alg = v.algebra
    v.hypothesis(_h_simple(alg))
    v.hypothesis(_h_first_kind(alg))
    v.hypothesis(_h_s_proper(alg))
    v.hypothesis(_h_dim_over_center(alg, 4))
    if not v.all_hold():
        return v.finish(None)
    return v.finish(_c_fills(alg, "K+(KoK)"))


def _k_power_family(exprs: list[str], need_first_witness: bool):
    # The K^6/K^4 route goes through S = K o K, which needs the
    # dim-over-center restriction of the underlying classical results.
    def run(v: _Verification) -> TheoremReport:
        alg = v.algebra
        v.hypothesis(_h_simple(alg))
        v.hypothesis(_h_first_kind(alg))
        v.hypothesis(_h_s_proper(alg))
        v.hypothesis(_h_probe(alg, "symmetric_part_noncommutative", "commutative", False))
        v.hypothesis(_h_dim_over_center(alg, 4))
        if need_first_witness:
            v.hypothesis(_h_witness(alg, "first"))
        if not v.all_hold():
            return v.finish(None)
        return v.finish(_c_multi_fills(alg, exprs))

    return run


def _t_k_plus_ksk(v: _Verification) -> TheoremReport:
    alg = v.algebra
    v.hypothesis(_h_simple(alg))
    v.hypothesis(_h_first_kind(alg))
    v.hypothesis(_h_s_proper(alg))
    v.hypothesis(_h_probe(alg, "skew_part_not_skew_commutative", "skew_commutative", False))
    if not v.all_hold():
        return v.finish(None)
    return v.finish(_c_fills(alg, "K+KSK"))


def _witness_conclusion_family(criterion: str, extra_probe: tuple[str, str, bool] | None = None):
    def run(v: _Verification) -> TheoremReport:
        alg = v.algebra
        v.hypothesis(_h_simple(alg))
        v.hypothesis(_h_first_kind(alg))
        v.hypothesis(_h_s_proper(alg))
        if extra_probe is not None:
            name, mode, expect = extra_probe
            v.hypothesis(_h_probe(alg, name, mode, expect))
        v.hypothesis(_h_witness(alg, criterion))
        if not v.all_hold():
            return v.finish(None)
        return v.finish(_c_fills(alg, criteria.VARIANTS[criterion].conclusion))

    return run


def _t_k_plus_k3(v: _Verification) -> TheoremReport:
    alg = v.algebra
    v.hypothesis(_h_simple(alg))
    v.hypothesis(_h_first_kind(alg))
    v.hypothesis(_h_s_proper(alg))
    v.hypothesis(_h_skew_noncommutative(alg))
    v.hypothesis(_h_subset(alg, "K^2 inside K+K^3", "K^2", "K+K^3"))
    if not v.all_hold():
        return v.finish(None)
    return v.finish(_c_fills(alg, "K+K^3"))


def _h_skew_noncommutative(algebra: Algebra) -> CheckRecord:
    probe = commutativity_probe(algebra, "commutative", sym_skew_bases(algebra)[1])
    details: dict = {"mode": "commutative", "space": "K"}
    if probe.witness is not None:
        details["witness"] = [probe.witness[0].to_json(), probe.witness[1].to_json()]
    return CheckRecord("skew_part_noncommutative", not probe.holds, details)


def _t_k_plus_k2_k3(v: _Verification) -> TheoremReport:
    alg = v.algebra
    v.hypothesis(_h_first_kind(alg))
    v.hypothesis(_h_s_proper(alg))
    v.hypothesis(_h_skew_noncommutative(alg))
    v.hypothesis(_h_witness(alg, "e"))
    if not v.all_hold():
        return v.finish(None)
    return v.finish(_c_fills(alg, "K+K^2+K^3"))


def _t_k_plus_k2(v: _Verification) -> TheoremReport:
    alg = v.algebra
    v.hypothesis(_h_first_kind(alg))
    v.hypothesis(_h_s_proper(alg))
    v.hypothesis(_h_probe(alg, "skew_part_not_skew_commutative", "skew_commutative", False))
    v.hypothesis(_h_witness(alg, "d"))
    if not v.all_hold():
        return v.finish(None)
    return v.finish(_c_fills(alg, "K+K^2"))


def _t_s2k_equals_r(v: _Verification) -> TheoremReport:
    alg = v.algebra
    v.hypothesis(_h_simple(alg))
    v.hypothesis(_h_first_kind(alg))
    v.hypothesis(_h_s_proper(alg))
    v.hypothesis(_h_probe(alg, "noncommuting_symmetric_skew_pair", "mixed_sk", False))
    if not v.all_hold():
        return v.finish(None)
    return v.finish(_c_fills(alg, "S^2K"))


def _t_ks_sk_trace_zero(v: _Verification) -> TheoremReport:
    alg = v.algebra
    v.hypothesis(
        CheckRecord("matrix_algebra", alg.kind == "matrix", {"kind": alg.kind})
    )
    if not v.all_hold():
        return v.finish(None)
    space = evaluate(parse_set_expr("KS+SK"), alg)
    traces_vanish = all(
        devectorize(alg, row).trace().is_zero() for row in space.basis
    )
    conclusion = CheckRecord(
        "KS+SK inside the trace-zero hyperplane",
        traces_vanish and space.dim <= alg.dim - 1,
        {"dim": space.dim, "bound": alg.dim - 1, "all_traces_zero": traces_vanish},
    )
    return v.finish(conclusion)


def _t_k2_equals_r(v: _Verification) -> TheoremReport:
    alg = v.algebra
    v.hypothesis(_h_simple(alg))
    v.hypothesis(_h_first_kind(alg))
    v.hypothesis(_h_s_proper(alg))
    v.hypothesis(_h_dim_over_center(alg, None, equals=4))
    k_dim = sym_skew_bases(alg)[1].dim
    v.hypothesis(
        CheckRecord("skew_part_three_dimensional", k_dim == 3, {"dim_K": k_dim})
    )
    if not v.all_hold():
        return v.finish(None)
    return v.finish(_c_fills(alg, "K^2"))


def _dim_bound_family(power_expr: str, exponent: int):
    def run(v: _Verification) -> TheoremReport:
        alg = v.algebra
        v.hypothesis(_h_simple(alg))
        v.hypothesis(_h_first_kind(alg))
        space = evaluate(parse_set_expr(power_expr), alg)
        v.hypothesis(
            CheckRecord(
                f"{power_expr} = R", space.dim == alg.dim, {"dim": space.dim}
            )
        )
        if not v.all_hold():
            return v.finish(None)
        s_dim = sym_skew_bases(alg)[0].dim
        conclusion = CheckRecord(
            f"dim(S)^{exponent} >= dim(R)",
            s_dim**exponent >= alg.dim,
            {"dim_S": s_dim, "dim_R": alg.dim},
        )
        return v.finish(conclusion)

    return run


_REGISTRY: dict[str, tuple] = {
    "prop_s_commutative": (
        _t_prop_s_commutative,
        "if the symmetric part is commutative then S^2 = S is proper",
    ),
    "s3_equals_r": (
        _noncommutative_s_family(["S^3"]),
        "noncommutative symmetric part fills the algebra in three factors",
    ),
    "s2_equals_r": (
        _t_s2_equals_r,
        "a first-criterion witness forces S^2 = R",
    ),
    "first_criterion": (
        _criterion_equivalence("first"),
        "witness for xSy in S^2 exists iff S^2 = R",
    ),
    "second_criterion": (
        _criterion_equivalence("second"),
        "witness for xKy in S^2 exists iff S^2 = R",
    ),
    "cent_s_in_z": (
        _t_cent_s_in_z,
        "the centralizer of the symmetric part is the center (dim over center > 4)",
    ),
    "s_comm_iff_z_eq_s": (
        _t_s_comm_iff_z_eq_s,
        "S commutative iff Z(R) = S (dim over center > 4)",
    ),
    "herstein_k": (
        _t_herstein_k,
        "R = K + (K o K) for dim over center > 4",
    ),
    "k6": (
        _k_power_family(["(KoK)^3", "K^6"], need_first_witness=False),
        "K^6 = R via (K o K)^3 = R",
    ),
    "k4": (
        _k_power_family(["(KoK)^2", "K^4"], need_first_witness=True),
        "K^4 = R via (K o K)^2 = R, given a first-criterion witness",
    ),
    "k_plus_ksk": (
        _t_k_plus_ksk,
        "R = K + KSK when K is not skew-commutative",
    ),
    "ks_plus_k2_v1": (
        _witness_conclusion_family("a"),
        "KS + K^2 = R from a skew pair with xy+yx != 0 and xSy in KS+K^2",
    ),
    "ks_plus_k2_v2": (
        _witness_conclusion_family("b"),
        "KS + K^2 = R from a skew/symmetric pair with xy-yx != 0",
    ),
    "ks_plus_k2_v3": (
        _witness_conclusion_family("c"),
        "KS = R from a skew/symmetric pair with xSy in KS",
    ),
    "k_plus_k2": (
        _t_k_plus_k2,
        "K + K^2 = R from an invertible Jordan value with xSy in K^2",
    ),
    "k_plus_k2_k3": (
        _t_k_plus_k2_k3,
        "K + K^2 + K^3 = R from an invertible skew commutator",
    ),
    "k_plus_k3": (
        _t_k_plus_k3,
        "K + K^3 = R when K is noncommutative and K^2 lies in K+K^3",
    ),
    "sks_equals_r": (
        _noncommutative_s_family(["SKS"]),
        "SKS = R when the symmetric part is noncommutative",
    ),
    "ks_sk": (
        _witness_conclusion_family(
            "g", extra_probe=("symmetric_part_noncommutative", "commutative", False)
        ),
        "KS + SK = R from a symmetric pair with xKy in KS+SK",
    ),
    "ks_sk_trace_zero": (
        _t_ks_sk_trace_zero,
        "on matrices KS + SK stays inside the trace-zero hyperplane",
    ),
    "s2k_equals_r": (
        _t_s2k_equals_r,
        "S^2K = R once some symmetric and skew element fail to commute",
    ),
    "sk_equals_r": (
        _witness_conclusion_family("f"),
        "SK = R from a symmetric/skew pair with xSy in SK",
    ),
    "k2_equals_r": (
        _t_k2_equals_r,
        "K^2 = R on the four-dimensional instances with a 3-dimensional skew part",
    ),
    "dim_bound_s3": (
        _dim_bound_family("S^3", 3),
        "S^3 = R forces dim(S)^3 >= dim(R)",
    ),
    "dim_bound_s2": (
        _dim_bound_family("S^2", 2),
        "S^2 = R forces dim(S)^2 >= dim(R)",
    ),
}


THEOREM_IDS: tuple[str, ...] = tuple(sorted(_REGISTRY))


def theorem_catalog() -> dict[str, str]:
    return {name: entry[1] for name, entry in sorted(_REGISTRY.items())}


def verify_theorem(theorem_id: str, algebra: Algebra) -> TheoremReport:
    entry = _REGISTRY.get(theorem_id)
    if entry is None:
        raise UnknownTheoremError(
            f"unknown theorem {theorem_id!r}; known: {', '.join(THEOREM_IDS)}"
        )
    return entry[0](_Verification(theorem_id, algebra))


def verify_all(algebra: Algebra) -> list[TheoremReport]:
    return [verify_theorem(name, algebra) for name in THEOREM_IDS]
