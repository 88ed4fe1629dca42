"""Identity corpus files: parsing, evaluation, matrix substitution checks.

A corpus file is a sequence of blocks separated by blank lines.  Lines
starting with ``#`` are comments attached to the following block.  Each
block is a declarations line followed by a single ``lhs = rhs`` line::

    # the defining anti-automorphism law
    gen a b
    (a b)* = b* a*
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from invol.staralg.expr import (
    GENERAL,
    SYMMETRIC,
    Add,
    Const,
    Letter,
    Mul,
    Neg,
    Star,
    check_identity,
)
from invol.staralg.parse import StarParseError, parse_declarations, parse_expression


@dataclass
class CorpusEntry:
    index: int
    line: int
    comment: str
    declarations_text: str
    declarations: dict[str, str]
    lhs_text: str
    rhs_text: str

    def check(self) -> tuple[bool, str | None]:
        lhs = parse_expression(self.lhs_text, self.declarations, line=self.line + 1)
        rhs = parse_expression(self.rhs_text, self.declarations, line=self.line + 1)
        holds, difference = check_identity(lhs, rhs, self.declarations)
        return holds, None if holds else difference.pretty()


def parse_corpus(text: str) -> list[CorpusEntry]:
    entries: list[CorpusEntry] = []
    comment_lines: list[str] = []
    declarations_line: tuple[int, str] | None = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            if declarations_line is not None:
                raise StarParseError("block ended before its identity line", 1, number)
            comment_lines = []
            continue
        if line.startswith("#"):
            comment_lines.append(line.lstrip("# "))
            continue
        if declarations_line is None:
            declarations_line = (number, line)
            continue
        if "=" not in line:
            raise StarParseError("expected an identity 'lhs = rhs'", 1, number)
        lhs_text, _, rhs_text = line.partition("=")
        decl_number, decl_text = declarations_line
        try:
            declarations = parse_declarations(decl_text)
        except ValueError as exc:
            raise StarParseError(str(exc), 1, decl_number) from exc
        entries.append(
            CorpusEntry(
                index=len(entries),
                line=decl_number,
                comment=" ".join(comment_lines),
                declarations_text=decl_text,
                declarations=declarations,
                lhs_text=lhs_text.strip(),
                rhs_text=rhs_text.strip(),
            )
        )
        declarations_line = None
        comment_lines = []
    if declarations_line is not None:
        raise StarParseError("file ended before the identity line", 1, declarations_line[0])
    return entries


def evaluate_corpus(text: str) -> list[dict]:
    verdicts = []
    for entry in parse_corpus(text):
        holds, difference = entry.check()
        verdicts.append(
            {
                "index": entry.index,
                "line": entry.line,
                "comment": entry.comment,
                "declarations": entry.declarations_text,
                "identity": f"{entry.lhs_text} = {entry.rhs_text}",
                "holds": holds,
                "difference": difference,
            }
        )
    return verdicts


def bundled_corpus_text(mutated: bool = False) -> str:
    name = "identities_mutated.txt" if mutated else "identities.txt"
    return resources.files("invol.staralg").joinpath(name).read_text(encoding="utf-8")


# -- matrix substitution ------------------------------------------------------


def _random_typed_element(algebra, kind: str, rng):
    r = algebra.random_element(rng)
    if kind == GENERAL:
        return r
    s, k = r.sk_split()
    return s if kind == SYMMETRIC else k


def _evaluate_on_matrices(expr, assignment, algebra):
    if isinstance(expr, Const):
        return algebra.unit().scale(expr.value)
    if isinstance(expr, Letter):
        return assignment[expr.name]
    if isinstance(expr, Neg):
        return -_evaluate_on_matrices(expr.inner, assignment, algebra)
    if isinstance(expr, Star):
        return _evaluate_on_matrices(expr.inner, assignment, algebra).star()
    if isinstance(expr, Mul):
        out = _evaluate_on_matrices(expr.parts[0], assignment, algebra)
        for part in expr.parts[1:]:
            out = out * _evaluate_on_matrices(part, assignment, algebra)
        return out
    if isinstance(expr, Add):
        out = _evaluate_on_matrices(expr.parts[0], assignment, algebra)
        for part in expr.parts[1:]:
            out = out + _evaluate_on_matrices(part, assignment, algebra)
        return out
    raise TypeError(f"not a star expression: {expr!r}")


def matrix_substitution_agrees(entry: CorpusEntry, algebra, rng, samples: int = 3) -> bool:
    """Substitute random typed elements; True iff every sample difference is zero.

    An identity of the free *-algebra must vanish under every substitution,
    so for entries that hold this returns True; for broken entries a nonzero
    sample difference gives False (generic, given the low word degrees).
    """
    lhs = parse_expression(entry.lhs_text, entry.declarations)
    rhs = parse_expression(entry.rhs_text, entry.declarations)
    for _ in range(samples):
        assignment = {
            name: _random_typed_element(algebra, kind, rng)
            for name, kind in entry.declarations.items()
        }
        lhs_value = _evaluate_on_matrices(lhs, assignment, algebra)
        rhs_value = _evaluate_on_matrices(rhs, assignment, algebra)
        if lhs_value != rhs_value:
            return False
    return True
