"""linkinv: exact combinatorial invariants of links.

Multivariable Alexander polynomials via Fox calculus, Newton polytopes and
their polyhedral norms with dual vertices, Dehn-surgery homology via Smith
normal form, and Seiberg-Witten basic-class / vertex-valence analysis.
All core arithmetic is exact (integers and rationals).
"""

from .laurent import LaurentPoly, mt_link_polynomial
from .polytope import Polytope, hull
from .norm import newton_polytope, poly_norm, unit_ball, dual_vertex
from .fox import parse_pd, wirtinger_from_pd, alexander_polynomial
from .surgery import LinkingData, smith_normal_form, h1_of_surgery
from .sw import sw_polynomial, basic_classes_unit_coeff

__all__ = [
    "LaurentPoly",
    "mt_link_polynomial",
    "Polytope",
    "hull",
    "newton_polytope",
    "poly_norm",
    "unit_ball",
    "dual_vertex",
    "parse_pd",
    "wirtinger_from_pd",
    "alexander_polynomial",
    "LinkingData",
    "smith_normal_form",
    "h1_of_surgery",
    "sw_polynomial",
    "basic_classes_unit_coeff",
]

__version__ = "0.1.0"
