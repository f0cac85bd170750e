"""Symbolic expressions for the hyperbolic-sum families at generic modulus x.

Cosh families are sums over n >= 0 of (-1)^n w^e f(w y/2) with w = 2n+1:

    C1(p)   e = 2p-1   1/cosh
    C2S(p)  e = 2p     sinh/cosh^2
    C3(p)   e = 2p+1   1/cosh^3
    S4(p)   e = 2p+2   sinh/cosh^4
    C5(p)   e = 2p+3   1/cosh^5

Sinh families are sums over n >= 1 of (-1)^n n^e f(n y):

    B1(p)   e = 2p+1   1/sinh
    K2(p)   e = 2p+2   cosh/sinh^2
    B3(p)   e = 2p+3   1/sinh^3
    K4(p)   e = 2p+4   cosh/sinh^4
    B5(p)   e = 2p+5   1/sinh^5

Every family is reached from the base sums C1 and B1 by d/dy and the elementary
identities for d/dy of sinh/cosh^j and cosh/sinh^j.
"""
from fractions import Fraction
from functools import lru_cache
from math import factorial

from berndt_closed_forms.diffalg.expr import DEFAULT_ORDER_CAP, DX_DY, X_POLY, DiffExpr, d_dx, d_dy
from berndt_closed_forms.exact import Poly, RationalFunction
from berndt_closed_forms.exceptions import IndexRangeError
from berndt_closed_forms.series import sd_poly, sinh_poly

COSH_FAMILIES = ('C1', 'C2S', 'C3', 'S4', 'C5')
SINH_FAMILIES = ('B1', 'K2', 'B3', 'K4', 'B5')

_EXPONENT_SHIFT = {'C1': -1, 'C2S': 0, 'C3': 1, 'S4': 2, 'C5': 3,
                   'B1': 1, 'K2': 2, 'B3': 3, 'K4': 4, 'B5': 5}

HALF = Fraction(1, 2)


def family_exponent(family: str, p: int) -> int:
    """Power of (2n+1) or n carried by the family at index p."""
    return 2 * p + _EXPONENT_SHIFT[family]


def family_index(family: str, exponent: int) -> int:
    """Inverse of family_exponent."""
    shift = _EXPONENT_SHIFT[family]
    if (exponent - shift) % 2:
        raise IndexRangeError(f'{family} carries exponents of parity {shift % 2}, got {exponent}')
    return (exponent - shift) // 2


def _check_index(family: str, p: int) -> None:
    if p < 1:
        raise IndexRangeError(f'{family}({p}) is defined for p >= 1')


def second_y_derivative(f: DiffExpr, cap: int = DEFAULT_ORDER_CAP) -> DiffExpr:
    """d^2 f/dy^2 written with x-derivatives: (dx/dy)^2 f'' - y'' (dx/dy)^3 f'."""
    y_prime = DiffExpr.monomial(RationalFunction(-1, X_POLY), -2)
    y_second = d_dx(y_prime, cap)
    f1 = d_dx(f, cap)
    f2 = d_dx(f1, cap)
    return DX_DY ** 2 * f2 - y_second * DX_DY ** 3 * f1


@lru_cache(maxsize=None)
def cosh_family_expr(family: str, p: int, cap: int = DEFAULT_ORDER_CAP) -> DiffExpr:
    """Expression for the cosh family ``family`` at index p (n >= 0 form, half power 1).

    Raises:
        IndexRangeError: if p < 1.
        DerivativeOrderError: if the construction needs z-derivatives above ``cap``.
    """
    _check_index(family, p)
    if family == 'C1':
        m = p - 1
        return DiffExpr.monomial(sd_poly(2 * m + 1) * Fraction((-1) ** m, 2), 2 * m + 2, half_power=1)
    if family == 'C2S':
        return d_dy(cosh_family_expr('C1', p, cap), cap) * -2
    if family == 'C3':
        base = cosh_family_expr('C1', p, cap)
        return d_dy(d_dy(base, cap), cap) * -2 + cosh_family_expr('C1', p + 1, cap) * HALF
    if family == 'S4':
        return d_dy(cosh_family_expr('C3', p, cap), cap) * Fraction(-2, 3)
    if family == 'C5':
        base = cosh_family_expr('C3', p, cap)
        return d_dy(d_dy(base, cap), cap) * Fraction(-1, 3) + cosh_family_expr('C3', p + 1, cap) * Fraction(3, 4)
    raise ValueError(f'unknown cosh family {family!r}, expected one of {COSH_FAMILIES}')


@lru_cache(maxsize=None)
def sinh_family_expr(family: str, p: int, cap: int = DEFAULT_ORDER_CAP) -> DiffExpr:
    """Expression for the sinh family ``family`` at index p (half power 0).

    Raises:
        IndexRangeError: if p < 1.
        DerivativeOrderError: if the construction needs z-derivatives above ``cap``.
    """
    _check_index(family, p)
    if family == 'B1':
        coeff = Poly([0, -1, 1]) * sinh_poly(2 * p) * Fraction(factorial(2 * p), 2 ** (2 * p + 2))
        return DiffExpr.monomial(coeff, 2 * p + 2)
    if family == 'K2':
        return d_dy(sinh_family_expr('B1', p, cap), cap) * -1
    if family == 'B3':
        base = sinh_family_expr('B1', p, cap)
        return d_dy(d_dy(base, cap), cap) * HALF - sinh_family_expr('B1', p + 1, cap) * HALF
    if family == 'K4':
        return d_dy(sinh_family_expr('B3', p, cap), cap) * Fraction(-1, 3)
    if family == 'B5':
        base = sinh_family_expr('B3', p, cap)
        return d_dy(d_dy(base, cap), cap) * Fraction(1, 12) - sinh_family_expr('B3', p + 1, cap) * Fraction(3, 4)
    raise ValueError(f'unknown sinh family {family!r}, expected one of {SINH_FAMILIES}')


def family_expr(family: str, p: int, cap: int = DEFAULT_ORDER_CAP) -> DiffExpr:
    if family in COSH_FAMILIES:
        return cosh_family_expr(family, p, cap)
    return sinh_family_expr(family, p, cap)


def cosh3_via_y_second(p: int, cap: int = DEFAULT_ORDER_CAP) -> DiffExpr:
    """C3(p) from the base sum through y'' = d^2y/dx^2 instead of repeated d/dy."""
    _check_index('C3', p)
    base = cosh_family_expr('C1', p, cap)
    return second_y_derivative(base, cap) * -2 + cosh_family_expr('C1', p + 1, cap) * HALF


def sinh3_via_y_second(p: int, cap: int = DEFAULT_ORDER_CAP) -> DiffExpr:
    """B3(p) as (1/2)(dx/dy)^2 B1'' - (1/2) B1(p+1) + (1/2) y'' (dx/dy)^2 K2(p)."""
    _check_index('B3', p)
    y_second = d_dx(DiffExpr.monomial(RationalFunction(-1, X_POLY), -2), cap)
    base = sinh_family_expr('B1', p, cap)
    return (DX_DY ** 2 * d_dx(d_dx(base, cap), cap) * HALF
            - sinh_family_expr('B1', p + 1, cap) * HALF
            + y_second * DX_DY ** 2 * sinh_family_expr('K2', p, cap) * HALF)
