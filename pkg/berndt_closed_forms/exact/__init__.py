from .poly import Poly, moebius_substitute, one_minus_x
from .rational_function import RationalFunction, poly_gcd
