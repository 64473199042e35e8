"""Exact computations with finite-dimensional right Leibniz algebras."""

from .algebra import LeibnizAlgebra, NotLeibnizError, StructureError
from .field import GF, QQ, FieldError, FieldSpec, Scalar
from .subspace import Subspace
from .verdict import Outcome, Undecided, Verdict

__all__ = [
    "GF", "QQ", "FieldError", "FieldSpec", "Scalar", "Subspace", "LeibnizAlgebra",
    "NotLeibnizError", "StructureError", "Outcome", "Undecided", "Verdict",
]
__version__ = "0.1.0"
