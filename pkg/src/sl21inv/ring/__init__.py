"""Exact ring layer: Laurent polynomials, color forms and scalars."""

from sl21inv.ring._backend import active as active_kernel, use_kernel
from sl21inv.ring.forms import (ColorForm, PrefactorMismatch, QuadExponent,
                                Scalar, qn, qpow)
from sl21inv.ring.laurent import (GaussLaurent, LaurentPoly, NotDivisible,
                                  default_names, exact_div,
                                  specialize_colors_equal, specialize_q_to_i)
from sl21inv.ring.packing import ExponentOverflow

__all__ = [
    "ColorForm", "ExponentOverflow", "GaussLaurent", "LaurentPoly",
    "NotDivisible", "PrefactorMismatch", "QuadExponent", "Scalar",
    "active_kernel", "default_names", "exact_div", "qn", "qpow",
    "specialize_colors_equal", "specialize_q_to_i", "use_kernel",
]
