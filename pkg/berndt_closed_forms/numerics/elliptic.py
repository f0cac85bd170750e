"""Numeric elliptic quantities in Ramanujan's notation

    x = k^2,  K = K(k),  K' = K(k'),  y = pi K'/K,  z = 2K/pi.

Everything is computed through mpmath at the precision of a NumericContext; the
results are plain mpf values valid only to that precision.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import List, Sequence, Tuple, Union

import mpmath
from mpmath import mpf

from berndt_closed_forms.closed_forms.gamma_pi import GammaPiExpr
from berndt_closed_forms.diffalg import DiffExpr
from berndt_closed_forms.exact import Poly, RationalFunction
from berndt_closed_forms.exceptions import EvaluationPoleError, PrecisionBudgetError
from berndt_closed_forms.numerics.context import DEFAULT_CONTEXT, NumericContext

logger = logging.getLogger(__name__)

Real = Union[int, float, Fraction, mpf]


def to_mpf(c: Real) -> mpf:
    if isinstance(c, Fraction):
        return mpf(c.numerator) / c.denominator
    return mpf(c)


def agm(a: Real, b: Real, ctx: NumericContext = DEFAULT_CONTEXT) -> mpf:
    """Arithmetic-geometric mean of two positive numbers."""
    assert a > 0 and b > 0, f'agm needs positive arguments, got {a}, {b}'
    with ctx.workprec():
        return mpmath.agm(to_mpf(a), to_mpf(b))


def gamma_quarter(ctx: NumericContext = DEFAULT_CONTEXT) -> mpf:
    """Gamma(1/4) from the lemniscatic identity Gamma(1/4)^2 = (2 pi)^(3/2) / agm(1, sqrt 2)."""
    with ctx.workprec():
        return mpmath.sqrt((2 * mpmath.pi) ** mpf(1.5) / mpmath.agm(1, mpmath.sqrt(2)))


@dataclass(frozen=True)
class EllipticData:
    x: mpf
    K: mpf
    K_prime: mpf
    y: mpf
    z: mpf

    @property
    def q(self) -> mpf:
        """The nome e^(-y)."""
        return mpmath.exp(-self.y)


def elliptic_data(x: Real, ctx: NumericContext = DEFAULT_CONTEXT) -> EllipticData:
    if not 0 < x < 1:
        raise ValueError(f'modulus x = k^2 must lie in (0, 1), got {x}')
    with ctx.workprec():
        x = to_mpf(x)
        K = mpmath.pi / (2 * mpmath.agm(1, mpmath.sqrt(1 - x)))
        K_prime = mpmath.pi / (2 * mpmath.agm(1, mpmath.sqrt(x)))
        return EllipticData(x=x, K=K, K_prime=K_prime, y=mpmath.pi * K_prime / K, z=2 * K / mpmath.pi)


def hyp2f1_halfplus(n: int, x: Real, ctx: NumericContext = DEFAULT_CONTEXT) -> mpf:
    """2F1(1/2 + n, 1/2 + n; 1 + n; x).

    Raises:
        PrecisionBudgetError: if the series needs more than ctx.max_series_terms terms.
    """
    assert 0 <= n <= 4, f'only z-derivatives up to order 4 are used, got n={n}'
    if not 0 <= x < 1:
        raise ValueError(f'hypergeometric series evaluated only on [0, 1), got x={x}')
    with ctx.workprec():
        a = mpf(1) / 2 + n
        try:
            return mpmath.hyp2f1(a, a, 1 + n, to_mpf(x), maxterms=ctx.max_series_terms)
        except mpmath.libmp.NoConvergence as e:
            raise PrecisionBudgetError(f'2F1 series at x={x}, n={n} did not converge '
                                       f'within {ctx.max_series_terms} terms') from e


def z_derivative_numeric(n: int, x: Real, ctx: NumericContext = DEFAULT_CONTEXT) -> mpf:
    """d^n z / dx^n = (1/2)_n^2 / n! * 2F1(1/2 + n, 1/2 + n; 1 + n; x)."""
    with ctx.workprec():
        return mpmath.rf(mpf(1) / 2, n) ** 2 / factorial(n) * hyp2f1_halfplus(n, x, ctx)


def z_derivatives(max_order: int, x: Real, ctx: NumericContext = DEFAULT_CONTEXT) -> List[mpf]:
    return [z_derivative_numeric(n, x, ctx) for n in range(max_order + 1)]


def jacobi_sn_sd(u: Real, x: Real, ctx: NumericContext = DEFAULT_CONTEXT) -> Tuple[mpf, mpf]:
    """sn(u) and sd(u) = sn(u)/dn(u) at parameter m = x, through mpmath's theta quotients."""
    data = elliptic_data(x, ctx)
    if abs(u) >= data.K:
        raise ValueError(f'|u| = {abs(u)} must stay below K = {data.K}')
    if u == 0:
        # sn and sd are odd; ellipfun is not exact at 0
        return mpf(0), mpf(0)
    with ctx.workprec():
        u = to_mpf(u)
        sn = mpmath.ellipfun('sn', u, m=data.x)
        dn = mpmath.ellipfun('dn', u, m=data.x)
        return sn, sn / dn


def poly_numeric(p: Poly, x: mpf) -> mpf:
    return mpmath.polyval([to_mpf(c) for c in reversed(p.coeffs)], x)


def rational_numeric(f: RationalFunction, x: mpf) -> mpf:
    den = poly_numeric(f.den, x)
    if den == 0:
        raise EvaluationPoleError(f'denominator of {f.to_text()} vanishes at x={x}')
    return poly_numeric(f.num, x) / den


def dexpr_eval_numeric(e: DiffExpr, x: Real, ctx: NumericContext = DEFAULT_CONTEXT,
                       z_values: Sequence[mpf] = None) -> mpf:
    """Evaluate a DiffExpr at a generic modulus x with z-derivatives from the 2F1 series."""
    with ctx.workprec():
        x = to_mpf(x)
        if z_values is None:
            z_values = z_derivatives(max(e.max_order, 0), x, ctx)
        prefactor = (x * (1 - x)) ** (mpf(e.half_power) / 2)
        return e.evaluate(lambda c: rational_numeric(c, x), z_values, prefactor, mpf(0))


def gp_eval(e: GammaPiExpr, ctx: NumericContext = DEFAULT_CONTEXT) -> mpf:
    """Numeric value of a GammaPiExpr with Gamma(1/4) from gamma_quarter."""
    g = gamma_quarter(ctx)
    with ctx.workprec():
        return mpmath.fsum(to_mpf(t.coeff) * g ** t.gamma_exp * mpmath.pi ** (mpf(t.pi_exp_x2) / 2) for t in e)
