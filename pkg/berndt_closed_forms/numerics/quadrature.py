"""Quadrature on [0, inf) for integrands that decay like a power times exp(-r x).

The range is split into unit panels [0, 1], [1, 2], ..., [X - 1, X] integrated
by Gauss-Legendre; X is the first panel end where the analytic tail bound falls
under the context's tail epsilon.
"""
import logging
from typing import Callable, Union

import mpmath
from mpmath import mpf

from berndt_closed_forms.exceptions import IndexRangeError, PrecisionBudgetError
from berndt_closed_forms.numerics.context import DEFAULT_CONTEXT, NumericContext
from berndt_closed_forms.numerics.elliptic import elliptic_data

logger = logging.getLogger(__name__)

Real = Union[int, float, mpf]

SANITY_KINDS = ('ramanujan', 'ismail')
MAX_CUTOFF = 2000


def exp_tail(a: int, rate: mpf, X: mpf) -> mpf:
    """int_X^inf s^a exp(-rate s) ds."""
    return mpmath.gammainc(a + 1, rate * X) / rate ** (a + 1)


def cos_plus_cosh(u: mpf, v: mpf) -> mpf:
    """cos u + cosh v without cancellation near u = v = 0."""
    return 2 * (mpmath.cos(u / 2) ** 2 + mpmath.sinh(v / 2) ** 2)


def cos_minus_cosh(u: mpf, v: mpf) -> mpf:
    """cos u - cosh v without cancellation near u = v = 0."""
    return -2 * (mpmath.sin(u / 2) ** 2 + mpmath.sinh(v / 2) ** 2)


def integrate_half_line(f: Callable[[mpf], mpf], tail: Callable[[mpf], mpf], ctx: NumericContext,
                        label: str = 'integral') -> mpf:
    """Integrate f over [0, inf) given tail(X), an upper bound of |int_X^inf f|."""
    with ctx.workprec():
        eps = ctx.tail_epsilon
        X = 4 * ctx.panel_width
        while tail(mpf(X)) >= eps:
            X += ctx.panel_width
            if X > MAX_CUTOFF:
                raise PrecisionBudgetError(f'{label}: tail bound stays above {mpmath.nstr(eps, 3)} '
                                           f'up to x = {MAX_CUTOFF}')
        points = [mpf(k) for k in range(0, X + 1, ctx.panel_width)]
        value, error = mpmath.quad(f, points, method='gauss-legendre', maxdegree=ctx.quad_max_degree,
                                   error=True)
        logger.debug(f'{label}: cut-off {X}, {len(points) - 1} panels, estimated error {mpmath.nstr(error, 3)}')
        if error > mpf(10) ** -ctx.target_digits * max(1, abs(value)):
            raise PrecisionBudgetError(f'{label}: quadrature error {mpmath.nstr(error, 3)} above target '
                                       f'with maxdegree {ctx.quad_max_degree}')
        return value


def quad_berndt(a_exp: int, sign: str, ctx: NumericContext = DEFAULT_CONTEXT) -> mpf:
    """int_0^inf x^a / (cos x +- cosh x)^3 dx.

    Both denominators are bounded by cosh x - 1 = e^x (1 - e^-x)^2 / 2 from below,
    so the tail beyond X is at most 8 (1 - e^-X)^-6 int_X^inf x^a e^(-3x) dx.

    Raises:
        IndexRangeError: for a < 0, or a < 6 with the minus sign (the integral diverges at 0).
        PrecisionBudgetError: if quadrature cannot reach the target digits.
    """
    if sign == 'plus':
        low, denominator = 0, cos_plus_cosh
    elif sign == 'minus':
        low, denominator = 6, cos_minus_cosh
    else:
        raise ValueError(f"sign must be 'plus' or 'minus', got {sign!r}")
    if a_exp < low:
        raise IndexRangeError(f'{sign} integral needs exponent >= {low}, got {a_exp}')

    def f(x):
        return x ** a_exp / denominator(x, x) ** 3

    def tail(X):
        return 8 * exp_tail(a_exp, mpf(3), X) / (1 - mpmath.exp(-X)) ** 6

    return integrate_half_line(f, tail, ctx, label=f'x^{a_exp}/(cos x {"+" if sign == "plus" else "-"} cosh x)^3')


def quad_ramanujan(n: int, ctx: NumericContext = DEFAULT_CONTEXT) -> mpf:
    """int_0^inf sin(n x) / (x (cos x + cosh x)) dx, equal to pi/4 for odd n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f'n must be a positive odd integer, got {n}')

    def f(x):
        return n * mpmath.sinc(n * x) / cos_plus_cosh(x, x)

    def tail(X):
        return 2 * exp_tail(0, mpf(1), X) / (X * (1 - mpmath.exp(-X)) ** 2)

    return integrate_half_line(f, tail, ctx, label=f'ramanujan({n})')


def quad_ismail(x: Real = 0.5, ctx: NumericContext = DEFAULT_CONTEXT) -> mpf:
    """int_-inf^inf dt / (cos(K sqrt t) + cosh(K' sqrt t)), equal to 2 for every modulus x.

    With t = s^2 on t > 0 and t = -s^2 on t < 0 the integral becomes two half-line
    integrals of 2s / (cos(Ks) + cosh(K's)) and 2s / (cosh(Ks) + cos(K's)).
    """
    data = elliptic_data(x, ctx)
    K, Kp = data.K, data.K_prime

    def half(u_scale, v_scale):
        def f(s):
            return 2 * s / cos_plus_cosh(u_scale * s, v_scale * s)

        def tail(X):
            return 4 * exp_tail(1, v_scale, X) / (1 - mpmath.exp(-v_scale * X)) ** 2

        return f, tail

    f_pos, tail_pos = half(K, Kp)
    f_neg, tail_neg = half(Kp, K)
    return (integrate_half_line(f_pos, tail_pos, ctx, label='ismail t > 0')
            + integrate_half_line(f_neg, tail_neg, ctx, label='ismail t < 0'))


def quad_sanity(kind: str, n: int = 1, x: Real = 0.5, ctx: NumericContext = DEFAULT_CONTEXT) -> mpf:
    """Classical integrals with known values: 'ramanujan' (pi/4, odd n) or 'ismail' (2, any x)."""
    if kind == 'ramanujan':
        return quad_ramanujan(n, ctx)
    if kind == 'ismail':
        return quad_ismail(x, ctx)
    raise ValueError(f'unknown sanity integral {kind!r}, expected one of {SANITY_KINDS}')
