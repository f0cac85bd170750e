"""Closed forms for the Berndt-type integrals of order three

    plus:  int_0^inf x^(4m+1) / (cos x + cosh x)^3 dx,  m >= 1
    minus: int_0^inf x^(4m-1) / (cos x - cosh x)^3 dx,  m >= 2

The ``theorem`` route evaluates the stated formulas in p and R at x = 1/2. The
``corollary`` route combines four hyperbolic sums at y = pi obtained from the
symbolic pipeline. For the minus sign the ``printed`` route keeps the first
bracket exactly as it is usually quoted; it disagrees with the other two routes.
"""
import logging
from fractions import Fraction
from math import factorial
from typing import List, Set, Tuple

from berndt_closed_forms.closed_forms.abstract import G, PI, R_at_half, p_at_half
from berndt_closed_forms.closed_forms.gamma_pi import GammaPiExpr, eval_at_half
from berndt_closed_forms.diffalg import family_expr, family_index
from berndt_closed_forms.exceptions import IndexRangeError

logger = logging.getLogger(__name__)

SIGNS = ('plus', 'minus')
INTEGRAL_ROUTES = ('theorem', 'corollary', 'printed')


def integrand_exponent(sign: str, m: int) -> int:
    if sign == 'plus':
        return 4 * m + 1
    if sign == 'minus':
        return 4 * m - 1
    raise ValueError(f'unknown sign {sign!r}, expected one of {SIGNS}')


def check_integral_range(sign: str, m: int) -> None:
    low = 1 if sign == 'plus' else 2
    integrand_exponent(sign, m)
    if m < low:
        raise IndexRangeError(f'{sign} integral closed form needs m >= {low}, got m={m}')


def sum_at_pi(family: str, exponent: int) -> GammaPiExpr:
    """Pipeline value at y = pi of the family sum carrying the given exponent."""
    return eval_at_half(family_expr(family, family_index(family, exponent)))


def _plus_theorem(m: int) -> GammaPiExpr:
    pre = G ** (8 * m - 4) * (-1) ** m / (GammaPiExpr.constant(2 ** (6 * m + 17)) * PI ** (2 * m + 7))
    p = p_at_half(4 * m - 3)
    p2 = p_at_half(4 * m - 3, 2)
    p4 = p_at_half(4 * m - 3, 4)
    bracket = (PI ** 6 * G ** 8 * (256 * p_at_half(4 * m + 1))
               - PI ** 8 * (32768 * m * (2 * m - 1) * (4 * m - 1) * (4 * m + 1) * p)
               + PI ** 4 * G ** 8 * (PI * p_at_half(4 * m - 1, 1) + m * (4 * m - 6) * p + m * p2) * (512 * (4 * m + 1))
               - G ** 16 * (8 * (m - 2) * (6 * m - 7) * p + 12 * (2 * m - 5) * p2 + p4))
    return pre * bracket


def _plus_corollary(m: int) -> GammaPiExpr:
    a = 4 * m + 1
    combo = (sum_at_pi('C3', a - 2) * (4 * m * a)
             + PI ** 2 * sum_at_pi('C3', a) * Fraction(5, 2)
             - PI * sum_at_pi('S4', a - 1) * (3 * a)
             - PI ** 2 * sum_at_pi('C5', a) * 3)
    # The n >= 0 sums are the negatives of the n >= 1 sums with (-1)^n (2n-1)^e.
    return -(PI ** (4 * m) * combo) / (-4) ** (m + 1)


def _minus_theorem(m: int, printed: bool = False) -> GammaPiExpr:
    pre = G ** (8 * m) * (-1) ** m / (GammaPiExpr.constant(2 ** (6 * m + 7)) * PI ** (2 * m + 2))
    r6 = R_at_half(4 * m - 6)
    first_inner = factorial(4 * m - 4) * (4 * m - 1) * R_at_half(4 * m - 4, 1)
    second_inner = Fraction(8 * factorial(4 * m - 1) * r6, 4 * m - 5) / G ** 8
    if printed:
        first = PI * (first_inner - PI ** 2 * second_inner) * 2
    else:
        first = -PI * (first_inner + PI ** 3 * second_inner) * 2
    mix = 4 * (m - 3) * r6 + R_at_half(4 * m - 6, 2)
    middle = (2 * m - 1) * (PI ** 2 * (8 * (m - 1) * (4 * m - 5) * (4 * m - 3) * R_at_half(4 * m - 2))
                            + (4 * m - 1) * mix)
    tail = G ** 8 / (PI ** 4 * 256) * (8 * (55 + m * (6 * m - 37)) * r6 + 24 * (m - 4) * R_at_half(4 * m - 6, 2)
                                        + R_at_half(4 * m - 6, 4))
    return pre * (first + (middle - tail) * factorial(4 * m - 6))


def _minus_corollary(m: int) -> GammaPiExpr:
    a = 4 * m - 1
    combo = (sum_at_pi('B3', a - 2) * Fraction(-(a * (a - 1)), 2)
             + PI * sum_at_pi('K4', a - 1) * (3 * a)
             - PI ** 2 * sum_at_pi('B3', a) * 5
             - PI ** 2 * sum_at_pi('B5', a) * 6)
    return PI ** (4 * m - 2) * combo * ((-1) ** (m - 1) * 2 ** (2 * m - 3))


def berndt_integral_closed(sign: str, m: int, route: str = 'theorem') -> GammaPiExpr:
    """Exact value of the order-three Berndt-type integral.

    Args:
        sign: 'plus' for x^(4m+1)/(cos x + cosh x)^3, 'minus' for x^(4m-1)/(cos x - cosh x)^3.
        m: index, m >= 1 for plus and m >= 2 for minus.
        route: 'theorem', 'corollary', or 'printed' (minus only).

    Raises:
        IndexRangeError: if m is outside the range of the closed form.
    """
    check_integral_range(sign, m)
    if route not in INTEGRAL_ROUTES or (route == 'printed' and sign != 'minus'):
        raise ValueError(f'route {route!r} is not available for the {sign} integral')
    if sign == 'plus':
        value = _plus_theorem(m) if route == 'theorem' else _plus_corollary(m)
    elif route == 'corollary':
        value = _minus_corollary(m)
    else:
        value = _minus_theorem(m, printed=route == 'printed')
    logger.debug(f'{sign} integral m={m} via {route}: {value.to_text()}')
    return value


def conjecture_closed() -> GammaPiExpr:
    """Conjectured value of int_0^inf x/(cos x + cosh x)^3 dx. CONJECTURAL: not proven."""
    return (G ** 4 * Fraction(-1, 2 ** 7) / PI ** 2
            + G ** 4 * Fraction(1, 2 ** 9) / PI
            + G ** 12 * Fraction(1, 2 ** 13) / PI ** 7)


def membership_pattern(sign: str, p: int) -> Set[Tuple[int, int]]:
    """Allowed (gamma_exp, pi_exp_x2) pairs of the five-term rational span for index p."""
    if sign == 'plus':
        return {(8 * p - 4, -(4 * p - 2)), (8 * p + 4, -(4 * p + 6)), (8 * p + 4, -(4 * p + 4)),
                (8 * p + 4, -(4 * p + 2)), (8 * p + 12, -(4 * p + 14))}
    if sign == 'minus':
        return {(8 * p - 8, -(4 * p - 4)), (8 * p, -(4 * p + 4)), (8 * p, -(4 * p + 2)),
                (8 * p, -4 * p), (8 * p + 8, -(4 * p + 12))}
    raise ValueError(f'unknown sign {sign!r}, expected one of {SIGNS}')


def membership_violations(e: GammaPiExpr, sign: str, m: int) -> List[Tuple[int, int]]:
    allowed = membership_pattern(sign, m)
    return [pair for pair in e.exponent_pairs() if pair not in allowed]


def theorem1_membership_check(e: GammaPiExpr, sign: str, m: int) -> bool:
    """True iff every term of e lies in the rational span allowed for (sign, m)."""
    outside = membership_violations(e, sign, m)
    if outside:
        logger.debug(f'{sign} m={m}: exponent pairs {outside} outside the allowed span')
    return not outside
