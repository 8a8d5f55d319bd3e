"""Exact polynomial arithmetic, Groebner bases and Hilbert series."""

from petersonring.polyring.groebner import (
    DEFAULT_SPAIR_BUDGET, GroebnerBasis, GuardError, Ideal, buchberger, normal_form)
from petersonring.polyring.hilbert import (
    HilbertSeries, hilbert_series_quotient, is_regular_sequence,
    is_zero_dimensional_at_origin, render_q, standard_monomials)
from petersonring.polyring.poly import Poly, grevlex_key, ring_names

__all__ = [
    "DEFAULT_SPAIR_BUDGET", "GroebnerBasis", "GuardError", "HilbertSeries", "Ideal",
    "Poly", "buchberger", "grevlex_key", "hilbert_series_quotient", "is_regular_sequence",
    "is_zero_dimensional_at_origin", "normal_form", "render_q", "ring_names",
    "standard_monomials",
]
