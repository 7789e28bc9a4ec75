"""Exact calculus of Berge-Gabai satellite knots and their L-space surgeries."""

__version__ = "0.1.0"

from .braid import BraidWord, Permutation
from .descriptor import BGSat, Catalog, HFKnotData, Torus, Unknot, parse_descriptor, render
from .errors import BGError, DescriptorSyntaxError, InvalidPattern, PreconditionError
from .hfcalc import genus, hf_data, is_lspace_knot, rank_surgery
from .laurent import LaurentPoly
from .pattern import BergeGabaiPattern, validate
from .surgery import Slope

__all__ = [
    "BGError",
    "BGSat",
    "BergeGabaiPattern",
    "BraidWord",
    "Catalog",
    "DescriptorSyntaxError",
    "HFKnotData",
    "InvalidPattern",
    "LaurentPoly",
    "Permutation",
    "PreconditionError",
    "Slope",
    "Torus",
    "Unknot",
    "genus",
    "hf_data",
    "is_lspace_knot",
    "parse_descriptor",
    "rank_surgery",
    "render",
    "validate",
]
