"""Exact arithmetic and minimal-norm verification for the simplest cubic fields."""

from .poly import A, Poly
from .ring import (
    SYMBOLIC, FieldParam, RingElt, add, alpha, alpha1, alpha2, associated, conjugate,
    divide_exact, is_unit, mul, norm, norm_form, one, trace, verify_symbolic_identities,
)
from .embeddings import RootEnclosure, embed, isolate_roots, verify_bracket_inequalities
from .interval import Interval, PrecisionExhausted
from .units import UnitWord, coefficient_bound_check, log_embed, reduce
from .small_norm import (
    box_oracle, classify, enumerate_small_norm, verify_case_norms, verify_table1, verify_theorem,
)
from .applications import extension_generator_poly, is_squarefree, non_square_certificate, scan_corollary

__version__ = "0.1.0"
