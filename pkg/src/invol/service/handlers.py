"""Service handlers: pure functions from request models to response models.

Usage errors (unknown ids, malformed specs, missing seeds) raise
``ValueError``; mathematical negatives (failed expectations, exhausted
searches, obstructed decompositions) are reported inside the response so
that callers can distinguish the two.
"""

from __future__ import annotations

import random

from invol import criteria, decompose, theorems
from invol.algebras import Algebra, Element
from invol.staralg import bundled_corpus_text, evaluate_corpus
from invol.structure import evaluate, parse_set_expr
from invol.service.models import (
    CheckModel,
    DecomposeRequest,
    DecomposeResponse,
    IdentityRequest,
    IdentityResponse,
    IdentityVerdictModel,
    SpanRequest,
    SpanResponse,
    TheoremCatalogResponse,
    TheoremReportModel,
    VerifyRequest,
    VerifyResponse,
    WitnessSearchRequest,
    WitnessSearchResponse,
)

# scheme -> criterion providing the witness nondegeneracy/membership shape
_SCHEME_CRITERIA = {
    "s3": "h_s3",
    "s2": "h_s2",
    "k_plus_k2": "d",
    "k_plus_k2_k3": "e",
}

_SCHEME_OBSTRUCTIONS = {
    "s3": "no symmetric pair with invertible xy - yx in the search pool",
    "s2": "no symmetric pair with invertible xy - yx and x S y inside S^2",
    "k_plus_k2": "x S y not inside K^2 for any searched skew pair",
    "k_plus_k2_k3": "no skew pair with invertible xy - yx in the search pool",
}


def catalog() -> TheoremCatalogResponse:
    return TheoremCatalogResponse(theorems=theorems.theorem_catalog())


def run_verify(request: VerifyRequest) -> VerifyResponse:
    algebra = request.build_algebra()
    ids = request.theorems if request.theorems is not None else list(theorems.THEOREM_IDS)
    expectations = request.expect or {}
    for theorem_id in ids:
        if theorem_id not in theorems.THEOREM_IDS:
            raise ValueError(
                f"unknown theorem {theorem_id!r}; known: {', '.join(theorems.THEOREM_IDS)}"
            )
    reports = []
    ok = True
    for theorem_id in ids:
        report = theorems.verify_theorem(theorem_id, algebra)
        expected = expectations.get(theorem_id, theorems.VERIFIED)
        as_expected = report.status == expected
        ok = ok and as_expected
        reports.append(
            TheoremReportModel(
                theorem=report.theorem,
                algebra=report.algebra,
                status=report.status,
                expected=expected,
                as_expected=as_expected,
                hypotheses=[CheckModel(**h.to_json()) for h in report.hypotheses],
                conclusion=(
                    None if report.conclusion is None else CheckModel(**report.conclusion.to_json())
                ),
            )
        )
    return VerifyResponse(reports=reports, ok=ok)


def run_span(request: SpanRequest) -> SpanResponse:
    algebra = request.build_algebra()
    expr = parse_set_expr(request.expr)
    report = evaluate(expr, algebra).to_report()
    return SpanResponse(expr=str(expr), **report)


def run_witness_search(request: WitnessSearchRequest) -> WitnessSearchResponse:
    algebra = request.build_algebra()
    result = criteria.witness_search(
        algebra, request.criterion, pool=request.pool, max_pairs=request.max_pairs
    )
    return WitnessSearchResponse(
        criterion=result.criterion,
        pool=result.pool,
        pool_size=result.pool_size,
        tried=result.tried,
        exhausted=result.exhausted,
        found=None if result.found is None else result.found.to_json(),
        ok=result.found is not None,
    )


def _resolve_target(algebra: Algebra, request: DecomposeRequest) -> Element:
    target = request.target
    if isinstance(target, dict):
        return algebra.element_from_json(target)
    text = target.strip()
    if text == "random":
        if request.seed is None:
            raise ValueError("random targets need an explicit seed")
        return algebra.random_element(random.Random(request.seed))
    if algebra.kind == "quaternion":
        return algebra.quaternion_unit(text)
    if text.startswith("e"):
        body = text[1:]
        if "," in body:
            i_text, _, j_text = body.partition(",")
        elif len(body) == 2:
            i_text, j_text = body[0], body[1]
        else:
            raise ValueError(f"cannot parse matrix unit {text!r} (try 'e1,2')")
        return algebra.matrix_unit(int(i_text), int(j_text))
    raise ValueError(f"cannot parse target {text!r}")


def _resolve_witness(algebra: Algebra, request: DecomposeRequest):
    if request.witness_elements is not None:
        data = request.witness_elements
        return (
            algebra.element_from_json(data["x"]),
            algebra.element_from_json(data["y"]),
        ), None
    spec = request.witness.strip()
    if spec.startswith("paper:"):
        return criteria.named_witness(algebra, spec[len("paper:"):]), None
    if spec == "search":
        criterion = _SCHEME_CRITERIA[request.scheme]
        result = criteria.witness_search(algebra, criterion, pool="extended")
        if result.found is None:
            return None, (
                f"{_SCHEME_OBSTRUCTIONS[request.scheme]} "
                f"(criterion {criterion!r}, {result.tried} pairs tried)"
            )
        return (result.found.x, result.found.y), None
    raise ValueError(f"cannot resolve witness {spec!r} (use 'paper:<name>' or 'search')")


def run_decompose(request: DecomposeRequest) -> DecomposeResponse:
    algebra = request.build_algebra()
    witness, obstruction = _resolve_witness(algebra, request)
    if witness is None:
        return DecomposeResponse(
            scheme=request.scheme, certificate=None, valid=False, obstruction=obstruction
        )
    x, y = witness
    target = _resolve_target(algebra, request)
    try:
        certificate = decompose.decompose(algebra, request.scheme, x, y, target)
    except (decompose.NotInvertibleError, decompose.DecompositionObstructedError) as exc:
        return DecomposeResponse(
            scheme=request.scheme, certificate=None, valid=False, obstruction=str(exc)
        )
    result = decompose.verify_certificate(certificate)
    return DecomposeResponse(
        scheme=request.scheme,
        certificate=certificate.to_json(),
        valid=result.valid,
        violations=result.violations,
    )


def run_identities(request: IdentityRequest) -> IdentityResponse:
    if request.corpus_text is not None:
        text = request.corpus_text
    else:
        text = bundled_corpus_text(mutated=request.mutated)
    verdicts = [IdentityVerdictModel(**v) for v in evaluate_corpus(text)]
    failures = sum(1 for v in verdicts if not v.holds)
    return IdentityResponse(
        verdicts=verdicts,
        total=len(verdicts),
        failures=failures,
        all_hold=failures == 0,
    )
