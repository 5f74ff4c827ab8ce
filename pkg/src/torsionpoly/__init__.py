"""Exact torsion polynomials for surgeries on torus knots."""

from .cyclofield import FieldContext, NFElement, c_constant, cos_element, min_poly_2cos
from .errors import InternalMathError, InvalidInput, TorsionPolyError
from .oracle import collect_roots, compare, locate_roots, reconstruct
from .polyalg import IntPoly, RatPoly, chebyshev_T, chebyshev_U, even_part, exact_div
from .torsion import (ParityCase, RepClass, SurgeryDescriptor, TorsionPolynomial,
                      degree_formula, enumerate_reps, make_descriptor,
                      normalization_value, sigma, three_term_D, torsion_value,
                      verify_three_term, x_polynomial, y_polynomial)

__version__ = '0.1.0'
