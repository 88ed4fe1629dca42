"""Request/response schemas shared by the HTTP service and the CLI."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

from invol.algebras import Algebra, parse_algebra
from invol.fields import parse_field


class AlgebraRequest(BaseModel):
    """Mixin for requests that name an algebra instance."""

    algebra: str = Field(description="algebra spec, 'mat:<n>:<involution>' or 'quat'")
    field: str = Field(default="q", description="field token, 'q' or 'gf:<p>'")

    def build_algebra(self) -> Algebra:
        return parse_algebra(self.algebra, parse_field(self.field))


class VerifyRequest(AlgebraRequest):
    theorems: list[str] | None = Field(
        default=None, description="theorem ids to verify; all known ids when omitted"
    )
    expect: dict[str, str] | None = Field(
        default=None,
        description="expected status per theorem id; defaults to 'Verified'",
    )


class CheckModel(BaseModel):
    name: str
    passed: bool
    details: dict = Field(default_factory=dict)


class TheoremReportModel(BaseModel):
    theorem: str
    algebra: dict
    status: str
    expected: str
    as_expected: bool
    hypotheses: list[CheckModel]
    conclusion: CheckModel | None


class VerifyResponse(BaseModel):
    reports: list[TheoremReportModel]
    ok: bool


class SpanRequest(AlgebraRequest):
    expr: str = Field(description="set expression over S, K, R, Z, e.g. 'S^2' or 'K+KSK'")


class SpanResponse(BaseModel):
    expr: str
    ambient: int
    dim: int
    basis: list[list[str]]


class WitnessSearchRequest(AlgebraRequest):
    criterion: str
    pool: Literal["basis", "extended"] = "extended"
    max_pairs: int | None = None


class WitnessSearchResponse(BaseModel):
    criterion: str
    pool: str
    pool_size: int
    tried: int
    exhausted: bool
    found: dict | None
    ok: bool


class DecomposeRequest(AlgebraRequest):
    scheme: Literal["s3", "s2", "k_plus_k2", "k_plus_k2_k3"]
    witness: str = Field(
        default="search",
        description="'paper:<name>' for a catalog witness, or 'search'",
    )
    witness_elements: dict | None = Field(
        default=None, description="explicit {'x': ..., 'y': ...} element JSON"
    )
    target: str | dict = Field(
        default="random",
        description="basis element name ('e12', 'i'), 'random', or element JSON",
    )
    seed: int | None = Field(default=None, description="required for random targets")


class DecomposeResponse(BaseModel):
    scheme: str
    certificate: dict | None
    valid: bool
    violations: list[str] = Field(default_factory=list)
    obstruction: str | None = None


class IdentityRequest(BaseModel):
    corpus_text: str | None = Field(
        default=None, description="corpus file contents; bundled corpus when omitted"
    )
    mutated: bool = Field(
        default=False, description="use the bundled mutated corpus (corpus_text unset)"
    )


class IdentityVerdictModel(BaseModel):
    index: int
    line: int
    comment: str
    declarations: str
    identity: str
    holds: bool
    difference: str | None


class IdentityResponse(BaseModel):
    verdicts: list[IdentityVerdictModel]
    total: int
    failures: int
    all_hold: bool


class TheoremCatalogResponse(BaseModel):
    theorems: dict[str, str]
