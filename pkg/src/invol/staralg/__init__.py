"""Free algebra with involution over the rationals.

Words in declared letters (general, symmetric or skew) are expanded into a
canonical normal form: the star is pushed down to letters via
``(uv)* = v* u*`` and ``u** = u`` and eliminated on typed letters
(``s* = s``, ``k* = -k``).  Two expressions are identically equal exactly
when their normal forms coincide, with no commutation assumed.
"""

from invol.staralg.expr import (
    GENERAL,
    SKEW,
    SYMMETRIC,
    NormalForm,
    check_identity,
    classify_symmetry,
    normalize,
)
from invol.staralg.parse import (
    StarParseError,
    parse_declarations,
    parse_expression,
)
from invol.staralg.corpus import (
    CorpusEntry,
    bundled_corpus_text,
    evaluate_corpus,
    matrix_substitution_agrees,
    parse_corpus,
)

__all__ = [
    "GENERAL",
    "SKEW",
    "SYMMETRIC",
    "NormalForm",
    "CorpusEntry",
    "StarParseError",
    "bundled_corpus_text",
    "check_identity",
    "classify_symmetry",
    "evaluate_corpus",
    "matrix_substitution_agrees",
    "normalize",
    "parse_corpus",
    "parse_declarations",
    "parse_expression",
]
