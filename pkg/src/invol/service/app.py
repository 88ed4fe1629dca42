"""FastAPI application exposing the verification toolkit.

Run with::

    uvicorn invol.service.app:app

Computation is stateless and exact, so every endpoint is a pure
request/response call.  Usage errors surface as 422 responses; mathematical
negatives (failed expectations, exhausted searches, obstructions) are part
of the response payload.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from invol import __version__
from invol.service import handlers
from invol.service.models import (
    DecomposeRequest,
    DecomposeResponse,
    IdentityRequest,
    IdentityResponse,
    SpanRequest,
    SpanResponse,
    TheoremCatalogResponse,
    VerifyRequest,
    VerifyResponse,
    WitnessSearchRequest,
    WitnessSearchResponse,
)
from invol.staralg import StarParseError

app = FastAPI(
    title="invol",
    version=__version__,
    description="Exact structural verification for algebras with involution",
)


def _guard(fn, request):
    try:
        return fn(request)
    except (ValueError, KeyError) as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.get("/theorems", response_model=TheoremCatalogResponse)
def theorems() -> TheoremCatalogResponse:
    return handlers.catalog()


@app.post("/verify", response_model=VerifyResponse)
def verify(request: VerifyRequest) -> VerifyResponse:
    return _guard(handlers.run_verify, request)


@app.post("/span", response_model=SpanResponse)
def span(request: SpanRequest) -> SpanResponse:
    return _guard(handlers.run_span, request)


@app.post("/witness-search", response_model=WitnessSearchResponse)
def witness_search(request: WitnessSearchRequest) -> WitnessSearchResponse:
    return _guard(handlers.run_witness_search, request)


@app.post("/decompose", response_model=DecomposeResponse)
def decompose(request: DecomposeRequest) -> DecomposeResponse:
    return _guard(handlers.run_decompose, request)


@app.post("/identities", response_model=IdentityResponse)
def identities(request: IdentityRequest) -> IdentityResponse:
    try:
        return handlers.run_identities(request)
    except StarParseError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
