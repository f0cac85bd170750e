"""Command line entry point: ``berndt-verify {coeffs,sum,integral,verify-all}``.

Exit codes: 0 everything passed, 1 a verification failed, 2 usage error.
"""
import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional

import mpmath

from berndt_closed_forms import version
from berndt_closed_forms.cli.cache import TABLE_KINDS, prepare_tables
from berndt_closed_forms.cli.config import FORMATS, Config, env_overrides
from berndt_closed_forms.cli.render import render_expr, render_report_line, render_suite, render_table
from berndt_closed_forms.cli.suite import run_suite
from berndt_closed_forms.closed_forms import (HYPERBOLIC_SUMS, berndt_integral_closed, check_integral_range, closed_sum,
                                              conjecture_closed, integrand_exponent)
from berndt_closed_forms.exceptions import BerndtError, IndexRangeError, PrecisionBudgetError
from berndt_closed_forms.numerics import NumericContext, compare, quad_berndt, sum_hyperbolic
from berndt_closed_forms.series import TABLE_TYPES, get_table

logger = logging.getLogger('berndt_closed_forms')

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
LOG_LEVEL_ENV = 'BERNDT_LOG_LEVEL'


def _common_flags() -> argparse.ArgumentParser:
    # SUPPRESS keeps a flag given before the subcommand from being reset by the subparser
    p = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    p.add_argument('--precision-digits', type=int, dest='precision_digits',
                   help=f'Working precision in decimal digits (default: {Config.precision_digits}).')
    p.add_argument('--tolerance-digits', type=int, dest='tolerance_digits',
                   help='Digits that must agree for a pass (default: precision - 10, at least 10).')
    p.add_argument('--max-m', type=int, dest='max_m', help=f'Largest m in verify-all (default: {Config.max_m}).')
    p.add_argument('--format', choices=FORMATS, help='Output format (default: text).')
    p.add_argument('--cache', type=Path, help='Coefficient table cache file.')
    p.add_argument('--jobs', type=int, help='Worker processes for verify-all (default: 1).')
    p.add_argument('--include-conjecture', action='store_true', dest='include_conjecture',
                   help='Let conjectural items affect the exit code.')
    p.add_argument('--report', type=Path, help='Write the verify-all JSON report to this file.')
    p.add_argument('-v', '--verbose', action='count', help='Repeat for more detail (INFO, DEBUG).')
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog='berndt-verify', parents=[common],
        description='Exact Gamma(1/4)/pi closed forms of hyperbolic series and Berndt-type integrals, '
                    'verified at arbitrary precision.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {version}')
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    p = sub.add_parser('coeffs', parents=[common], help='Print a Maclaurin coefficient table.')
    p.add_argument('kind', choices=TABLE_KINDS)
    p.add_argument('max_index', type=int)

    p = sub.add_parser('sum', parents=[common], help='Closed form of a hyperbolic sum at y = pi.')
    p.add_argument('family', choices=sorted(HYPERBOLIC_SUMS))
    p.add_argument('m', type=int)

    p = sub.add_parser('integral', parents=[common], help='Closed form of int x^a/(cos x +- cosh x)^3.')
    p.add_argument('sign', choices=('plus', 'minus', 'conjecture'))
    p.add_argument('m', type=int, nargs='?')

    sub.add_parser('verify-all', parents=[common], help='Run the full verification suite.')
    return parser


def setup_logging(verbose: int) -> None:
    if verbose:
        level = logging.INFO if verbose == 1 else logging.DEBUG
    else:
        level = getattr(logging, os.environ.get(LOG_LEVEL_ENV, 'WARNING').upper(), logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr, force=True,
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')


def resolve_config(args: argparse.Namespace) -> Config:
    """dataclass defaults < BERNDT_* environment < flags."""
    flags = {name: getattr(args, name, None) for name in
             ('precision_digits', 'tolerance_digits', 'max_m', 'format', 'cache', 'jobs', 'include_conjecture',
              'report')}
    overrides = env_overrides()
    overrides.update({k: v for k, v in flags.items() if v is not None})
    return Config(**overrides)


def _context(config: Config) -> NumericContext:
    return NumericContext(target_digits=config.precision_digits)


def cmd_coeffs(config: Config, kind: str, max_index: int) -> int:
    first = TABLE_TYPES[kind].first_index
    if max_index < first:
        raise IndexRangeError(f'{kind} starts at index {first}, got max_index {max_index}')
    prepare_tables(config.cache, max(max_index, 1))
    print(render_table(get_table(kind, max_index).truncated(max_index), config.format))
    return EXIT_PASS


def _emit(config: Config, title: str, routes, report, notes=()) -> None:
    """Print a closed form, its route agreement and the numeric comparison."""
    first_name, first = routes[0]
    if config.format == 'json':
        out = {
            'item': title,
            'closed_form': first.to_json(),
            'latex': first.to_latex(),
            'routes': {name: value.to_text() for name, value in routes},
            'routes_agree': all(value == first for _, value in routes),
            'verification': report.to_json(),
        }
        if notes:
            out['notes'] = list(notes)
        print(json.dumps(out, indent=1, sort_keys=True))
        return
    print(f'{title} = {render_expr(first, config.format)}')
    for name, value in routes[1:]:
        if value == first:
            print(f'  {first_name} and {name} routes agree')
        else:
            print(f'  {name} route gives {render_expr(value, config.format)}')
    for note in notes:
        print(f'  {note}')
    print(f'  numeric {mpmath.nstr(mpmath.mpf(report.rhs), 20)}: {render_report_line(report)}')


def cmd_sum(config: Config, name: str, m: int) -> int:
    family = HYPERBOLIC_SUMS[name]
    family.check_range(m)
    prepare_tables(config.cache, max(config.table_max_index, 2 * m + 2))
    theorem, pipeline = closed_sum(name, m), closed_sum(name, m, route='pipeline')
    ctx = _context(config)
    with ctx.workprec():
        numeric = sum_hyperbolic(family.family, family.exponent(m), +mpmath.pi, ctx)
    report = compare(theorem, numeric, ctx, f'{name}-m{m}', 'hyperbolic-sum', config.effective_tolerance)
    _emit(config, f'{name}(m={m})', (('theorem', theorem), ('pipeline', pipeline)), report)
    if theorem != pipeline:
        logger.warning(f'{name}(m={m}): theorem and pipeline routes disagree')
        return EXIT_FAIL
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_integral(config: Config, sign: str, m: Optional[int]) -> int:
    ctx = _context(config)
    if sign == 'conjecture':
        value = conjecture_closed()
        report = compare(value, quad_berndt(1, 'plus', ctx), ctx, 'conjecture-plus-a1', 'integral',
                         config.effective_tolerance, conjectural=True)
        _emit(config, 'int x/(cos x + cosh x)^3', (('conjecture', value),), report)
        if config.include_conjecture and not report.passed:
            return EXIT_FAIL
        return EXIT_PASS
    if m is None:
        raise IndexRangeError(f'integral {sign} needs an index m')
    check_integral_range(sign, m)
    a = integrand_exponent(sign, m)
    prepare_tables(config.cache, max(config.table_max_index, 2 * m + 2))
    theorem = berndt_integral_closed(sign, m)
    corollary = berndt_integral_closed(sign, m, route='corollary')
    notes = []
    if sign == 'minus':
        printed = berndt_integral_closed(sign, m, route='printed')
        if printed != theorem:
            notes.append(f'printed first bracket differs by {(printed - theorem).to_text()}')
    report = compare(theorem, quad_berndt(a, sign, ctx), ctx, f'integral-{sign}-m{m}', 'integral',
                     config.effective_tolerance)
    op = '+' if sign == 'plus' else '-'
    _emit(config, f'int x^{a}/(cos x {op} cosh x)^3', (('theorem', theorem), ('corollary', corollary)), report,
          notes)
    if theorem != corollary:
        logger.warning(f'integral {sign} m={m}: theorem and corollary routes disagree')
        return EXIT_FAIL
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_verify_all(config: Config) -> int:
    prepare_tables(config.cache, config.table_max_index)
    reports, summary = run_suite(config)
    if config.report is not None:
        config.report.parent.mkdir(parents=True, exist_ok=True)
        config.report.write_text(render_suite(reports, summary, 'json') + '\n', encoding='utf-8')
        logger.info(f'wrote report to {config.report}')
    if config.report is None or config.format != 'json':
        print(render_suite(reports, summary, config.format))
    for item_id in summary['failed_items']:
        logger.error(f'{item_id} failed')
    return summary['exit_code']


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    setup_logging(getattr(args, 'verbose', 0))
    try:
        config = resolve_config(args)
    except ValueError as e:
        logger.error(str(e))
        return EXIT_USAGE
    logger.debug(f'config: {config}')

    try:
        if args.command == 'coeffs':
            return cmd_coeffs(config, args.kind, args.max_index)
        if args.command == 'sum':
            return cmd_sum(config, args.family, args.m)
        if args.command == 'integral':
            return cmd_integral(config, args.sign, args.m)
        return cmd_verify_all(config)
    except PrecisionBudgetError as e:
        logger.error(str(e))
        return EXIT_FAIL
    except (IndexRangeError, ValueError) as e:
        logger.error(str(e))
        return EXIT_USAGE
    except BerndtError as e:
        logger.error(str(e))
        return EXIT_FAIL


if __name__ == '__main__':
    sys.exit(main())
