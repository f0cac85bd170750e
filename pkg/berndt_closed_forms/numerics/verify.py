import logging
import time
from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Optional, Union

import mpmath
from mpmath import mpc, mpf

from berndt_closed_forms.closed_forms import GammaPiExpr
from berndt_closed_forms.exceptions import IndexRangeError
from berndt_closed_forms.numerics.context import DEFAULT_CONTEXT, NumericContext
from berndt_closed_forms.numerics.elliptic import gp_eval
from berndt_closed_forms.numerics.quadrature import quad_berndt
from berndt_closed_forms.numerics.series import sum_hyperbolic

logger = logging.getLogger(__name__)

Number = Union[mpf, mpc]


@dataclass
class VerificationReport:
    """Outcome of one numeric comparison.

    ``passed`` holds iff ``digits_agreed >= tolerance_digits``. When both sides are
    below 10^-tolerance_digits in size the comparison is absolute.
    """

    item_id: str
    kind: str
    lhs: str
    rhs: str
    deviation: str
    digits_agreed: float
    tolerance_digits: int
    passed: bool
    symbolic_latex: str = ''
    symbolic_json: Optional[List[Dict]] = None
    runtime_ms: float = 0.0
    conjectural: bool = False
    detail: str = ''
    extra: Dict = field(default_factory=dict)

    def to_json(self) -> Dict:
        out = {
            'id': self.item_id,
            'kind': self.kind,
            'symbolic_latex': self.symbolic_latex,
            'symbolic_json': self.symbolic_json,
            'numeric_value': self.rhs,
            'lhs': self.lhs,
            'deviation': self.deviation,
            'digits_agreed': round(self.digits_agreed, 2),
            'tolerance_digits': self.tolerance_digits,
            'pass': self.passed,
            'runtime_ms': round(self.runtime_ms, 1),
            'conjectural': self.conjectural,
        }
        if self.detail:
            out['detail'] = self.detail
        out.update(self.extra)
        return out


def default_tolerance(ctx: NumericContext) -> int:
    return max(ctx.target_digits - 10, 10)


def agreement(lhs: Number, rhs: Number, ctx: NumericContext, tolerance_digits: int):
    """(deviation, digits agreed, passed) for two numbers at the context's precision."""
    with ctx.workprec():
        deviation = abs(lhs - rhs)
        scale = max(abs(lhs), abs(rhs))
        threshold = mpf(10) ** -tolerance_digits
        if scale < threshold:
            digits = ctx.target_digits if deviation == 0 else min(ctx.target_digits, -mpmath.log10(deviation))
            return deviation, float(digits), bool(deviation <= threshold)
        if deviation == 0:
            digits = ctx.target_digits
        else:
            digits = min(ctx.target_digits, -mpmath.log10(deviation / scale))
        return deviation, float(digits), bool(digits >= tolerance_digits)


def make_report(item_id: str, kind: str, lhs: Number, rhs: Number, ctx: NumericContext,
                tolerance_digits: int = None, symbolic: GammaPiExpr = None, started: float = None,
                conjectural: bool = False, detail: str = '') -> VerificationReport:
    tolerance_digits = tolerance_digits or default_tolerance(ctx)
    deviation, digits, passed = agreement(lhs, rhs, ctx, tolerance_digits)
    report = VerificationReport(
        item_id=item_id, kind=kind,
        lhs=mpmath.nstr(lhs, ctx.target_digits), rhs=mpmath.nstr(rhs, ctx.target_digits),
        deviation=mpmath.nstr(deviation, 5), digits_agreed=digits, tolerance_digits=tolerance_digits,
        passed=passed, conjectural=conjectural, detail=detail,
        symbolic_latex=symbolic.to_latex() if symbolic is not None else '',
        symbolic_json=symbolic.to_json() if symbolic is not None else None,
        runtime_ms=(time.perf_counter() - started) * 1000 if started is not None else 0.0,
    )
    level = logging.DEBUG if passed else logging.WARNING
    logger.log(level, f'{item_id}: {digits:.1f} digits agreed (tolerance {tolerance_digits}), '
                      f'{"pass" if passed else "FAIL"}')
    return report


def compare(symbolic: GammaPiExpr, numeric: mpf, ctx: NumericContext = DEFAULT_CONTEXT, item_id: str = 'compare',
            kind: str = 'closed-form', tolerance_digits: int = None, conjectural: bool = False,
            started: float = None) -> VerificationReport:
    """Evaluate a closed form numerically and compare it with an independent value."""
    started = time.perf_counter() if started is None else started
    return make_report(item_id, kind, gp_eval(symbolic, ctx), numeric, ctx, tolerance_digits, symbolic=symbolic,
                       started=started, conjectural=conjectural)


def _cosh_combination(a: int, y: mpf, ctx: NumericContext) -> mpf:
    """a(a-1) C3(a-2) + (5/2) pi^2 C3(a) - 3 a pi S4(a-1) - 3 pi^2 C5(a), zero-coefficient terms skipped."""
    pi = mpmath.pi
    total = (mpf(5) / 2 * pi ** 2 * sum_hyperbolic('C3', a, y, ctx)
             - 3 * pi ** 2 * sum_hyperbolic('C5', a, y, ctx))
    if a >= 1:
        total -= 3 * a * pi * sum_hyperbolic('S4', a - 1, y, ctx)
    if a >= 2:
        total += a * (a - 1) * sum_hyperbolic('C3', a - 2, y, ctx)
    return total


def _sinh_combination(a: int, y: mpf, ctx: NumericContext) -> mpf:
    """-C(a,2) B3(a-2) + 3 a pi K4(a-1) - 5 pi^2 B3(a) - 6 pi^2 B5(a)."""
    pi = mpmath.pi
    return (-comb(a, 2) * sum_hyperbolic('B3', a - 2, y, ctx)
            + 3 * a * pi * sum_hyperbolic('K4', a - 1, y, ctx)
            - 5 * pi ** 2 * sum_hyperbolic('B3', a, y, ctx)
            - 6 * pi ** 2 * sum_hyperbolic('B5', a, y, ctx))


def contour_identity_check(sign: str, p: int, ctx: NumericContext = DEFAULT_CONTEXT,
                           tolerance_digits: int = None) -> VerificationReport:
    """Integral against the four-series combination at y = pi.

    plus (p >= 0):  -(-4)^(p+1) / pi^(4p) * int x^(4p+1)/(cos x + cosh x)^3
                    = a(a-1) C3(a-2) + (5/2) pi^2 C3(a) - 3 a pi S4(a-1) - 3 pi^2 C5(a),   a = 4p+1
    minus (p >= 2): (-1)^(p-1) / (pi^(4p-2) 2^(2p-3)) * int x^(4p-1)/(cos x - cosh x)^3
                    = -C(a,2) B3(a-2) + 3 a pi K4(a-1) - 5 pi^2 B3(a) - 6 pi^2 B5(a),   a = 4p-1
    """
    started = time.perf_counter()
    with ctx.workprec():
        pi = mpmath.pi
        if sign == 'plus':
            if p < 0:
                raise IndexRangeError(f'plus contour identity needs p >= 0, got {p}')
            a = 4 * p + 1
            lhs = -(mpf(-4) ** (p + 1)) / pi ** (4 * p) * quad_berndt(a, 'plus', ctx)
            rhs = _cosh_combination(a, pi, ctx)
        elif sign == 'minus':
            if p < 2:
                raise IndexRangeError(f'minus contour identity needs p >= 2, got {p}')
            a = 4 * p - 1
            lhs = (-1) ** (p - 1) / (pi ** (4 * p - 2) * mpf(2) ** (2 * p - 3)) * quad_berndt(a, 'minus', ctx)
            rhs = _sinh_combination(a, pi, ctx)
        else:
            raise ValueError(f"sign must be 'plus' or 'minus', got {sign!r}")
    return make_report(f'contour-{sign}-p{p}', 'contour-identity', lhs, rhs, ctx, tolerance_digits,
                       started=started)


def contour_identity_general(sign: str, a: int, ctx: NumericContext = DEFAULT_CONTEXT,
                             tolerance_digits: int = None) -> VerificationReport:
    """The contour relation for an arbitrary exponent a.

    plus (a >= 0):  (1 - i^(a+1)) / (pi^(a-1) (1+i)^(a-1)) * int x^a/(cos x + cosh x)^3
                    = 2^(-a) [a(a-1) C3(a-2) + (5/2) pi^2 C3(a) - 3 a pi S4(a-1) - 3 pi^2 C5(a)]
    minus (a >= 6): (1 + i^(a+1)) / (pi^(a-1) (1+i)^(a-3)) * int x^a/(cos x - cosh x)^3
                    = -C(a,2) B3(a-2) + 3 a pi K4(a-1) - 5 pi^2 B3(a) - 6 pi^2 B5(a)

    Where the left coefficient vanishes the right side must vanish, and the check
    falls back to an absolute comparison.
    """
    started = time.perf_counter()
    with ctx.workprec():
        pi = mpmath.pi
        i_pow = mpc(0, 1) ** (a + 1)
        if sign == 'plus':
            if a < 0:
                raise IndexRangeError(f'plus contour identity needs a >= 0, got {a}')
            coeff = (1 - i_pow) / (pi ** (a - 1) * mpc(1, 1) ** (a - 1))
            rhs = _cosh_combination(a, pi, ctx) / mpf(2) ** a
        elif sign == 'minus':
            if a < 6:
                raise IndexRangeError(f'minus contour identity needs a >= 6, got {a}')
            coeff = (1 + i_pow) / (pi ** (a - 1) * mpc(1, 1) ** (a - 3))
            rhs = _sinh_combination(a, pi, ctx)
        else:
            raise ValueError(f"sign must be 'plus' or 'minus', got {sign!r}")
        # i^k is exact only up to rounding; snap the coefficient to zero when it vanishes
        if abs(coeff) < mpf(10) ** -ctx.target_digits:
            lhs = mpf(0)
        else:
            lhs = coeff * quad_berndt(a, sign, ctx)
    return make_report(f'contour-general-{sign}-a{a}', 'contour-identity', lhs, rhs, ctx, tolerance_digits,
                       started=started)
