"""Direct summation of the alternating hyperbolic series

    cosh families:  sum_{n>=0} (-1)^n (2n+1)^e f((2n+1) y / 2)
    sinh families:  sum_{n>=1} (-1)^n n^e f(n y)

The series are cut where an analytic bound of the remaining tail drops below
the context's tail epsilon.
"""
import logging
from typing import Callable, Dict, NamedTuple, Tuple, Union

import mpmath
from mpmath import mpf

from berndt_closed_forms.diffalg import COSH_FAMILIES, SINH_FAMILIES
from berndt_closed_forms.exceptions import PrecisionBudgetError
from berndt_closed_forms.numerics.context import DEFAULT_CONTEXT, NumericContext

logger = logging.getLogger(__name__)

Real = Union[int, float, mpf]

# family -> (summand, power of the hyperbolic denominator, numerator is sinh/cosh)
SUMMANDS: Dict[str, Tuple[Callable[[mpf], mpf], int, bool]] = {
    'C1': (lambda t: mpmath.sech(t), 1, False),
    'C2S': (lambda t: mpmath.sinh(t) * mpmath.sech(t) ** 2, 2, True),
    'C3': (lambda t: mpmath.sech(t) ** 3, 3, False),
    'S4': (lambda t: mpmath.sinh(t) * mpmath.sech(t) ** 4, 4, True),
    'C5': (lambda t: mpmath.sech(t) ** 5, 5, False),
    'B1': (lambda t: mpmath.csch(t), 1, False),
    'K2': (lambda t: mpmath.cosh(t) * mpmath.csch(t) ** 2, 2, True),
    'B3': (lambda t: mpmath.csch(t) ** 3, 3, False),
    'K4': (lambda t: mpmath.cosh(t) * mpmath.csch(t) ** 4, 4, True),
    'B5': (lambda t: mpmath.csch(t) ** 5, 5, False),
}


class SeriesSum(NamedTuple):
    value: mpf
    terms: int
    tail_bound: mpf


def _envelope(family: str, y: mpf) -> Tuple[mpf, int]:
    """(C, kappa) with |f(theta)| <= C exp(-kappa theta) for every theta of the series."""
    _, j, mixed = SUMMANDS[family]
    if family in COSH_FAMILIES:
        return (mpf(2) ** (j - 1), j - 1) if mixed else (mpf(2) ** j, j)
    # sinh(theta) >= e^theta (1 - e^(-2y)) / 2 for theta >= y
    s = 2 / (1 - mpmath.exp(-2 * y))
    if mixed:
        return mpmath.coth(y) * s ** (j - 1), j - 1
    return s ** j, j


def sum_hyperbolic_with_bound(family: str, exponent: int, y: Real,
                              ctx: NumericContext = DEFAULT_CONTEXT) -> SeriesSum:
    """Partial sum, number of terms used and a rigorous bound of the dropped tail.

    Raises:
        PrecisionBudgetError: if the tail bound is not reached within ctx.max_series_terms terms.
    """
    if family not in SUMMANDS:
        raise ValueError(f'unknown family {family!r}, expected one of {sorted(SUMMANDS)}')
    assert exponent >= 0, f'exponent must be non-negative, got {exponent}'
    if not y > 0:
        raise ValueError(f'y must be positive, got {y}')
    f = SUMMANDS[family][0]
    cosh_type = family in COSH_FAMILIES
    with ctx.workprec():
        y = mpf(y)
        c, kappa = _envelope(family, y)
        step = 2 if cosh_type else 1
        total = mpf(0)
        n = 0 if cosh_type else 1
        while True:
            w = 2 * n + 1 if cosh_type else n
            theta = w * y / 2 if cosh_type else w * y
            term = mpf(w) ** exponent * f(theta)
            total += -term if n % 2 else term
            n += 1
            # tail from index n on, dominated by a geometric series of ratio rho
            w_next = w + step
            rho = (mpf(w_next + step) / w_next) ** exponent * mpmath.exp(-kappa * y)
            if rho < 1:
                theta_next = w_next * y / 2 if cosh_type else w_next * y
                bound = c * mpf(w_next) ** exponent * mpmath.exp(-kappa * theta_next) / (1 - rho)
                if bound < ctx.tail_epsilon * max(1, abs(total)):
                    break
            if n > ctx.max_series_terms:
                raise PrecisionBudgetError(f'{family} series with exponent {exponent} at y={y} '
                                           f'needs more than {ctx.max_series_terms} terms')
        terms = n if cosh_type else n - 1
        logger.debug(f'{family}, exponent {exponent}: {terms} terms, tail bound {mpmath.nstr(bound, 5)}')
        return SeriesSum(total, terms, bound)


def sum_hyperbolic(family: str, exponent: int, y: Real, ctx: NumericContext = DEFAULT_CONTEXT) -> mpf:
    return sum_hyperbolic_with_bound(family, exponent, y, ctx).value
