"""Janet-like Groebner bases of linear difference ideals."""

from .division import JANET, JANET_LIKE, JanetTree, classify, j_divides, janet_multiplicative
from .engine import Basis, BasisResult, ResourceCapExceeded, ZeroIdealError, complete, normal_form
from .io import ParseError, format_poly, parse_system
from .ring import (
    Monomial,
    Polynomial,
    Ranking,
    RingContext,
    add,
    apply_shift,
    compare,
    leading_term,
    scale,
)
from .tools import extract_reduced_gb, is_member, verify

__version__ = "0.1.0"
