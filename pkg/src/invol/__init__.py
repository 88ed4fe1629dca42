"""Exact verification toolkit for finite-dimensional algebras with involution.

The core objects are matrix algebras over the rationals or GF(p) carrying the
transpose or symplectic involution (plus the rational quaternions with
conjugation).  On top of exact span arithmetic, the package evaluates set
expressions in the symmetric/skew parts, runs structural verifications,
searches for criterion witnesses, and produces machine-checkable
decomposition certificates.
"""

from invol.fields import PrimeField, Rationals, Scalar, parse_field
from invol.algebras import Algebra, Element, matrix_algebra, quaternion_algebra

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "Element",
    "PrimeField",
    "Rationals",
    "Scalar",
    "matrix_algebra",
    "parse_field",
    "quaternion_algebra",
    "__version__",
]
