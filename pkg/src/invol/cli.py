"""Command-line client for the verification toolkit.

Subcommands mirror the service endpoints and share the same request and
response models, so CLI runs and HTTP calls report identical payloads.

Exit codes: 0 on success, 1 on a mathematical negative (failed expectation,
exhausted search, obstructed decomposition, broken identity), 2 on usage
errors.  Reports are deterministic: JSON output has sorted keys and no
timestamps.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from pydantic import ValidationError

from invol.service import handlers
from invol.service.models import (
    DecomposeRequest,
    IdentityRequest,
    SpanRequest,
    VerifyRequest,
    WitnessSearchRequest,
)
from invol.staralg import StarParseError

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


def _print_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invol",
        description="Exact structural verification for algebras with involution",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def algebra_flags(p):
        p.add_argument("--algebra", required=True, help="mat:<n>:<involution> or quat")
        p.add_argument("--field", default="q", help="field token: q or gf:<p>")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p_verify = sub.add_parser("verify", help="run named theorem verifications")
    algebra_flags(p_verify)
    p_verify.add_argument(
        "--theorem",
        action="append",
        dest="theorems",
        metavar="ID",
        help="theorem id (repeatable); all known ids when omitted",
    )
    p_verify.add_argument(
        "--expect",
        metavar="FILE",
        help="JSON file mapping theorem id to the expected status",
    )

    p_span = sub.add_parser("span", help="evaluate a set expression to a subspace report")
    algebra_flags(p_span)
    p_span.add_argument("--expr", required=True, help="e.g. 'S^2', 'K+KSK', '(KoK)^3'")

    p_search = sub.add_parser("witness-search", help="search for a criterion witness")
    algebra_flags(p_search)
    p_search.add_argument("--criterion", required=True)
    p_search.add_argument("--pool", choices=("basis", "extended"), default="extended")
    p_search.add_argument("--max-pairs", type=int, default=None, dest="max_pairs")

    p_dec = sub.add_parser("decompose", help="produce and verify a decomposition certificate")
    algebra_flags(p_dec)
    p_dec.add_argument("--scheme", required=True, choices=("s3", "s2", "k_plus_k2", "k_plus_k2_k3"))
    p_dec.add_argument(
        "--witness",
        default="search",
        help="'paper:<name>', 'file:<path>' with {'x','y'} element JSON, or 'search'",
    )
    p_dec.add_argument(
        "--target",
        default="random",
        help="'e12' / 'e1,2' / quaternion unit, 'random', or 'file:<path>'",
    )
    p_dec.add_argument("--seed", type=int, default=None, help="seed for random targets")
    p_dec.add_argument("--out", metavar="FILE", help="write the certificate JSON here")

    p_id = sub.add_parser("identity", help="check an identity corpus")
    p_id.add_argument("--corpus", metavar="FILE", help="corpus file; bundled corpus when omitted")
    p_id.add_argument("--mutated", action="store_true", help="use the bundled mutated corpus")
    p_id.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def _read_json_file(path: str):
    return json.loads(Path(path).read_text(encoding="utf-8"))


def _cmd_verify(args) -> int:
    expect = _read_json_file(args.expect) if args.expect else None
    request = VerifyRequest(
        algebra=args.algebra, field=args.field, theorems=args.theorems, expect=expect
    )
    response = handlers.run_verify(request)
    if args.format == "json":
        _print_json(response.model_dump())
    else:
        for report in response.reports:
            marker = "ok " if report.as_expected else "MISMATCH"
            conclusion = ""
            if report.conclusion is not None:
                conclusion = f" | {report.conclusion.name}: {report.conclusion.details}"
            print(f"{marker:8s} {report.theorem:20s} {report.status}{conclusion}")
        print(f"overall: {'ok' if response.ok else 'mismatch'}")
    return EXIT_OK if response.ok else EXIT_NEGATIVE


def _cmd_span(args) -> int:
    request = SpanRequest(algebra=args.algebra, field=args.field, expr=args.expr)
    response = handlers.run_span(request)
    if args.format == "json":
        _print_json(response.model_dump())
    else:
        print(f"{response.expr}: dim {response.dim} of {response.ambient}")
        for row in response.basis:
            print("  [" + ", ".join(row) + "]")
    return EXIT_OK


def _cmd_witness_search(args) -> int:
    request = WitnessSearchRequest(
        algebra=args.algebra,
        field=args.field,
        criterion=args.criterion,
        pool=args.pool,
        max_pairs=args.max_pairs,
    )
    response = handlers.run_witness_search(request)
    if args.format == "json":
        _print_json(response.model_dump())
    else:
        if response.ok:
            witness = response.found["witness"]
            print(f"found after {response.tried} candidates")
            print(f"x = {witness['x']}")
            print(f"y = {witness['y']}")
        else:
            state = "exhausted" if response.exhausted else "budget reached"
            print(f"{state}: {response.tried} of {response.pool_size} pairs tried")
    return EXIT_OK if response.ok else EXIT_NEGATIVE


def _cmd_decompose(args) -> int:
    witness = args.witness
    witness_elements = None
    if witness.startswith("file:"):
        witness_elements = _read_json_file(witness[len("file:"):])
        witness = "search"
    target = args.target
    if isinstance(target, str) and target.startswith("file:"):
        target = _read_json_file(target[len("file:"):])
    request = DecomposeRequest(
        algebra=args.algebra,
        field=args.field,
        scheme=args.scheme,
        witness=witness,
        witness_elements=witness_elements,
        target=target,
        seed=args.seed,
    )
    response = handlers.run_decompose(request)
    if args.out and response.certificate is not None:
        Path(args.out).write_text(
            json.dumps(response.certificate, sort_keys=True, indent=2), encoding="utf-8"
        )
    if args.format == "json":
        _print_json(response.model_dump())
    else:
        if response.obstruction is not None:
            print(f"obstruction: {response.obstruction}")
        elif response.valid:
            terms = len(response.certificate["terms"])
            print(f"certificate valid: {terms} terms (scheme {response.scheme})")
        else:
            print("certificate INVALID:")
            for violation in response.violations:
                print(f"  {violation}")
    return EXIT_OK if response.valid else EXIT_NEGATIVE


def _cmd_identity(args) -> int:
    corpus_text = None
    if args.corpus:
        path = Path(args.corpus)
        if not path.exists():
            print(f"error: corpus file {args.corpus!r} not found", file=sys.stderr)
            return EXIT_USAGE
        corpus_text = path.read_text(encoding="utf-8")
    request = IdentityRequest(corpus_text=corpus_text, mutated=args.mutated)
    response = handlers.run_identities(request)
    if args.format == "json":
        _print_json(response.model_dump())
    else:
        for verdict in response.verdicts:
            marker = "ok " if verdict.holds else "FAIL"
            print(f"{marker:5s} {verdict.identity}")
            if not verdict.holds:
                print(f"      difference: {verdict.difference}")
        print(f"{response.total - response.failures}/{response.total} identities hold")
    return EXIT_OK if response.all_hold else EXIT_NEGATIVE


_COMMANDS = {
    "verify": _cmd_verify,
    "span": _cmd_span,
    "witness-search": _cmd_witness_search,
    "decompose": _cmd_decompose,
    "identity": _cmd_identity,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except StarParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValidationError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
