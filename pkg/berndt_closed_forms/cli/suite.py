"""The verify-all suite: independent items, each producing one VerificationReport.

Items are plain tuples so they can be shipped to worker processes; results come
back in item order whatever the number of workers.
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, NamedTuple, Tuple

import mpmath

from berndt_closed_forms.cli.config import Config
from berndt_closed_forms.closed_forms import (HYPERBOLIC_SUMS, berndt_integral_closed, closed_sum, conjecture_closed,
                                              eval_at_half, integrand_exponent, membership_violations)
from berndt_closed_forms.diffalg import (COSH_FAMILIES, SINH_FAMILIES, cosh3_via_y_second, family_expr,
                                         family_exponent, sinh3_via_y_second)
from berndt_closed_forms.numerics import (NumericContext, VerificationReport, compare, contour_identity_check,
                                          contour_identity_general, dexpr_eval_numeric, elliptic_data, make_report,
                                          quad_berndt, quad_sanity, sum_hyperbolic)
from berndt_closed_forms.series import check_structural_identities

logger = logging.getLogger(__name__)

STRUCTURAL_MAX_INDEX = 17
GENERIC_POINTS = ('0.25', '0.36')
NON_BLOCKING_KINDS = ('discrepancy',)
# (working digits, tolerance digits) of the high-precision conjecture check
CONJECTURE_HIGH_PRECISION = (50, 40)


class SuiteItem(NamedTuple):
    item_id: str
    kind: str
    args: Tuple


def build_items(config: Config) -> List[SuiteItem]:
    max_m = config.max_m
    items = [SuiteItem('structural-identities', 'structural', (STRUCTURAL_MAX_INDEX,)),
             SuiteItem('base-case-C1', 'base-case', ())]
    for name, family in HYPERBOLIC_SUMS.items():
        for m in range(family.min_m, max_m + 1):
            items.append(SuiteItem(f'route-{name}-m{m}', 'route-sum', (name, m)))
            items.append(SuiteItem(f'numeric-{name}-m{m}', 'numeric-sum', (name, m)))
    for sign, low in (('plus', 1), ('minus', 2)):
        for m in range(low, max_m + 1):
            items.append(SuiteItem(f'route-integral-{sign}-m{m}', 'route-integral', (sign, m)))
            items.append(SuiteItem(f'membership-{sign}-m{m}', 'membership', (sign, m)))
            items.append(SuiteItem(f'numeric-integral-{sign}-m{m}', 'numeric-integral', (sign, m)))
            if sign == 'minus':
                items.append(SuiteItem(f'printed-bracket-minus-m{m}', 'discrepancy', (m,)))
    for family in ('C3', 'B3'):
        for p in range(1, max_m + 1):
            items.append(SuiteItem(f'y-second-route-{family}-p{p}', 'alt-route', (family, p)))
    for p in range(0, min(2, max_m) + 1):
        items.append(SuiteItem(f'contour-plus-p{p}', 'contour', ('plus', p)))
    for p in range(2, max(2, min(3, max_m)) + 1):
        items.append(SuiteItem(f'contour-minus-p{p}', 'contour', ('minus', p)))
    items.append(SuiteItem('contour-general-plus-a5', 'contour-general', ('plus', 5)))
    items.append(SuiteItem('contour-general-minus-a7', 'contour-general', ('minus', 7)))
    for n in (1, 3):
        items.append(SuiteItem(f'sanity-ramanujan-n{n}', 'sanity', ('ramanujan', n, '0.5')))
    for x in ('0.5', '0.3'):
        items.append(SuiteItem(f'sanity-ismail-x{x}', 'sanity', ('ismail', 1, x)))
    for family in COSH_FAMILIES + SINH_FAMILIES:
        for x0 in GENERIC_POINTS:
            items.append(SuiteItem(f'generic-x-{family}-x{x0}', 'generic-x', (family, x0)))
    items.append(SuiteItem('conjecture-plus-a1', 'conjecture', ()))
    items.append(SuiteItem('conjecture-plus-a1-d50', 'conjecture', CONJECTURE_HIGH_PRECISION))
    return items


def _exact_report(item: SuiteItem, passed: bool, lhs: str, rhs: str, ctx: NumericContext, tolerance: int,
                  started: float, symbolic=None, detail: str = '') -> VerificationReport:
    level = logging.DEBUG if passed or item.kind in NON_BLOCKING_KINDS else logging.WARNING
    logger.log(level, f'{item.item_id}: exact check {"pass" if passed else "FAIL"}')
    return VerificationReport(
        item_id=item.item_id, kind=item.kind, lhs=lhs, rhs=rhs, deviation='0' if passed else 'nonzero',
        digits_agreed=float(ctx.target_digits) if passed else 0.0, tolerance_digits=tolerance, passed=passed,
        symbolic_latex=symbolic.to_latex() if symbolic is not None else '',
        symbolic_json=symbolic.to_json() if symbolic is not None else None,
        runtime_ms=(time.perf_counter() - started) * 1000, detail=detail, extra={'exact': True})


def run_item(item: SuiteItem, precision_digits: int, tolerance: int) -> VerificationReport:
    ctx = NumericContext(target_digits=precision_digits)
    started = time.perf_counter()
    kind, args = item.kind, item.args
    with ctx.workprec():
        pi = +mpmath.pi

    if kind == 'structural':
        checks = check_structural_identities(*args)
        failed = [c for c in checks if not c.passed]
        return _exact_report(item, not failed, f'{len(checks)} identities', f'{len(failed)} failed', ctx, tolerance,
                             started, detail='; '.join(f'{c.name}: {c.detail}' for c in failed[:5]))
    if kind == 'route-sum':
        theorem, pipeline = closed_sum(*args, route='theorem'), closed_sum(*args, route='pipeline')
        return _exact_report(item, theorem == pipeline, theorem.to_text(), pipeline.to_text(), ctx, tolerance,
                             started, symbolic=theorem)
    if kind == 'route-integral':
        theorem = berndt_integral_closed(*args, route='theorem')
        corollary = berndt_integral_closed(*args, route='corollary')
        return _exact_report(item, theorem == corollary, theorem.to_text(), corollary.to_text(), ctx, tolerance,
                             started, symbolic=theorem)
    if kind == 'discrepancy':
        (m,) = args
        theorem = berndt_integral_closed('minus', m)
        printed = berndt_integral_closed('minus', m, route='printed')
        return _exact_report(item, printed != theorem, printed.to_text(), theorem.to_text(), ctx, tolerance, started,
                             detail=f'printed first bracket differs by {(printed - theorem).to_text()}')
    if kind == 'membership':
        sign, m = args
        value = berndt_integral_closed(sign, m)
        outside = membership_violations(value, sign, m)
        return _exact_report(item, not outside, value.to_text(), f'outside pairs: {outside}', ctx, tolerance,
                             started, symbolic=value)
    if kind == 'alt-route':
        family, p = args
        via = cosh3_via_y_second(p) if family == 'C3' else sinh3_via_y_second(p)
        direct = family_expr(family, p)
        return _exact_report(item, via == direct, via.to_text(), direct.to_text(), ctx, tolerance, started)
    if kind == 'numeric-sum':
        name, m = args
        family = HYPERBOLIC_SUMS[name]
        numeric = sum_hyperbolic(family.family, family.exponent(m), pi, ctx)
        return compare(closed_sum(name, m), numeric, ctx, item.item_id, kind, tolerance, started=started)
    if kind == 'numeric-integral':
        sign, m = args
        numeric = quad_berndt(integrand_exponent(sign, m), sign, ctx)
        return compare(berndt_integral_closed(sign, m), numeric, ctx, item.item_id, kind, tolerance, started=started)
    if kind == 'base-case':
        numeric = sum_hyperbolic('C1', 1, pi, ctx)
        return compare(eval_at_half(family_expr('C1', 1)), numeric, ctx, item.item_id, kind, tolerance,
                       started=started)
    if kind == 'conjecture':
        if args:
            ctx, tolerance = NumericContext(target_digits=args[0]), args[1]
        numeric = quad_berndt(1, 'plus', ctx)
        return compare(conjecture_closed(), numeric, ctx, item.item_id, kind, tolerance, conjectural=True,
                       started=started)
    if kind == 'contour':
        report = contour_identity_check(*args, ctx=ctx, tolerance_digits=tolerance)
    elif kind == 'contour-general':
        report = contour_identity_general(*args, ctx=ctx, tolerance_digits=tolerance)
    elif kind == 'sanity':
        which, n, x = args
        with ctx.workprec():
            expected = mpmath.pi / 4 if which == 'ramanujan' else mpmath.mpf(2)
            x = mpmath.mpf(x)
        report = make_report(item.item_id, kind, quad_sanity(which, n=n, x=x, ctx=ctx), expected, ctx, tolerance,
                             started=started)
    elif kind == 'generic-x':
        family, x0 = args
        with ctx.workprec():
            x = mpmath.mpf(x0)
        data = elliptic_data(x, ctx)
        p = 1
        direct = sum_hyperbolic(family, family_exponent(family, p), data.y, ctx)
        symbolic = dexpr_eval_numeric(family_expr(family, p), x, ctx)
        report = make_report(item.item_id, kind, symbolic, direct, ctx, tolerance, started=started)
    else:
        raise ValueError(f'unknown suite item kind {kind!r}')
    report.item_id = item.item_id
    return report


def is_blocking(report: VerificationReport, include_conjecture: bool) -> bool:
    if report.kind in NON_BLOCKING_KINDS:
        return False
    return include_conjecture or not report.conjectural


def summarize(reports: List[VerificationReport], config: Config, runtime_s: float) -> Dict:
    failed = [r.item_id for r in reports if not r.passed and is_blocking(r, config.include_conjecture)]
    return {
        'total': len(reports),
        'passed': sum(r.passed for r in reports),
        'failed_blocking': len(failed),
        'failed_items': failed,
        'precision_digits': config.precision_digits,
        'tolerance_digits': config.effective_tolerance,
        'max_m': config.max_m,
        'runtime_s': runtime_s,
        'exit_code': 1 if failed else 0,
    }


def run_suite(config: Config) -> Tuple[List[VerificationReport], Dict]:
    items = build_items(config)
    tolerance = config.effective_tolerance
    logger.info(f'running {len(items)} items at {config.precision_digits} digits with {config.jobs} job(s)')
    started = time.perf_counter()
    if config.jobs == 1:
        reports = [run_item(item, config.precision_digits, tolerance) for item in items]
    else:
        with ProcessPoolExecutor(max_workers=config.jobs) as executor:
            reports = list(executor.map(run_item, items, [config.precision_digits] * len(items),
                                        [tolerance] * len(items)))
    return reports, summarize(reports, config, time.perf_counter() - started)
