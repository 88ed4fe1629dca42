"""Parser for *-algebra expressions and letter declarations.

Grammar for expressions::

    expression := ['+'|'-'] term (('+'|'-') term)*
    term       := factor+                    # juxtaposition is the product
    factor     := primary '*'*               # postfix stars
    primary    := NUMBER | LETTER | '(' expression ')'
    NUMBER     := digits ['/' digits]        # a rational coefficient

Declarations are semicolon-separated groups, e.g. ``sym a b c; skew x y;
gen r u``.  Letters are single characters and must be unique.
"""

from __future__ import annotations

from fractions import Fraction

from invol.staralg.expr import (
    GENERAL,
    SKEW,
    SYMMETRIC,
    Add,
    Const,
    Letter,
    Mul,
    Neg,
    Star,
    StarExpr,
)


class StarParseError(ValueError):
    def __init__(self, message: str, column: int, line: int | None = None):
        self.column = column
        self.line = line
        where = f"column {column}" if line is None else f"line {line}, column {column}"
        super().__init__(f"{message} at {where}")


_DECL_KEYWORDS = {
    "gen": GENERAL,
    "general": GENERAL,
    "sym": SYMMETRIC,
    "symmetric": SYMMETRIC,
    "skew": SKEW,
}


def parse_declarations(text: str) -> dict[str, str]:
    declarations: dict[str, str] = {}
    for group in text.split(";"):
        group = group.strip()
        if not group:
            continue
        words = group.split()
        keyword = words[0].lower()
        if keyword not in _DECL_KEYWORDS:
            raise ValueError(
                f"unknown declaration keyword {words[0]!r} (use sym, skew or gen)"
            )
        if len(words) == 1:
            raise ValueError(f"declaration {group!r} names no letters")
        for letter in words[1:]:
            if len(letter) != 1 or not letter.isalpha():
                raise ValueError(f"letters are single characters, got {letter!r}")
            if letter in declarations:
                raise ValueError(f"letter {letter!r} declared twice")
            declarations[letter] = _DECL_KEYWORDS[keyword]
    if not declarations:
        raise ValueError("no letters declared")
    return declarations


def _tokenize(text: str, line: int | None):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        column = i + 1
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            if j < len(text) and text[j] == "/":
                if j + 1 >= len(text) or not text[j + 1].isdigit():
                    raise StarParseError("expected digits after '/'", j + 2, line)
                k = j + 1
                while k < len(text) and text[k].isdigit():
                    k += 1
                tokens.append(("num", Fraction(int(text[i:j]), int(text[j + 1:k])), column))
                i = k
            else:
                tokens.append(("num", Fraction(int(text[i:j])), column))
                i = j
            continue
        if ch.isalpha():
            tokens.append(("letter", ch, column))
        elif ch in "+-*()":
            tokens.append((ch, ch, column))
        else:
            raise StarParseError(f"unexpected character {ch!r}", column, line)
        i += 1
    return tokens


class _Parser:
    def __init__(self, tokens, declarations, line):
        self.tokens = tokens
        self.declarations = declarations
        self.line = line
        self.pos = 0
        self.end_column = tokens[-1][2] + 1 if tokens else 1

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def error(self, message: str):
        token = self.peek()
        column = token[2] if token is not None else self.end_column
        raise StarParseError(message, column, self.line)

    def expression(self) -> StarExpr:
        parts = []
        sign = 1
        token = self.peek()
        if token is not None and token[0] in "+-":
            sign = -1 if token[0] == "-" else 1
            self.pos += 1
        term = self.term()
        parts.append(Neg(term) if sign < 0 else term)
        while (token := self.peek()) is not None and token[0] in "+-":
            self.pos += 1
            term = self.term()
            parts.append(Neg(term) if token[0] == "-" else term)
        return parts[0] if len(parts) == 1 else Add(tuple(parts))

    def term(self) -> StarExpr:
        factors = [self.factor()]
        while (token := self.peek()) is not None and token[0] in ("num", "letter", "("):
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Mul(tuple(factors))

    def factor(self) -> StarExpr:
        expr = self.primary()
        while (token := self.peek()) is not None and token[0] == "*":
            expr = Star(expr)
            self.pos += 1
        return expr

    def primary(self) -> StarExpr:
        token = self.peek()
        if token is None:
            self.error("unexpected end of expression")
        kind, value, column = token
        if kind == "num":
            self.pos += 1
            return Const(value)
        if kind == "letter":
            if value not in self.declarations:
                raise StarParseError(f"undeclared letter {value!r}", column, self.line)
            self.pos += 1
            return Letter(value)
        if kind == "(":
            self.pos += 1
            expr = self.expression()
            closing = self.peek()
            if closing is None or closing[0] != ")":
                self.error("missing closing parenthesis")
            self.pos += 1
            return expr
        self.error(f"unexpected token {value!r}")


def parse_expression(
    text: str, declarations: dict[str, str], line: int | None = None
) -> StarExpr:
    tokens = _tokenize(text, line)
    if not tokens:
        raise StarParseError("empty expression", 1, line)
    parser = _Parser(tokens, declarations, line)
    expr = parser.expression()
    if parser.peek() is not None:
        parser.error(f"unexpected token {parser.peek()[1]!r}")
    return expr
