import json
from typing import Dict, List

from berndt_closed_forms.closed_forms import GammaPiExpr
from berndt_closed_forms.numerics import VerificationReport
from berndt_closed_forms.series import SeriesTable


def _latex_label(table: SeriesTable, index: int) -> str:
    return f'{table.symbol}_{{{table.power_of(index)}}}'


def render_table(table: SeriesTable, fmt: str) -> str:
    """One line per polynomial, e.g. ``p_5 = 16x^2 - 16x + 1``."""
    if fmt == 'json':
        return json.dumps(table.to_json(), sort_keys=True, indent=1)
    indices = range(table.first_index, table.max_index + 1)
    if fmt == 'latex':
        return '\n'.join(f'{_latex_label(table, i)} = {table[i].to_latex()} \\\\' for i in indices)
    return '\n'.join(f'{table.label(i)} = {table[i].to_text()}' for i in indices)


def render_expr(e: GammaPiExpr, fmt: str) -> str:
    if fmt == 'latex':
        return e.to_latex()
    if fmt == 'json':
        return json.dumps(e.to_json(), sort_keys=True)
    return e.to_text()


def status(report: VerificationReport) -> str:
    word = 'pass' if report.passed else 'FAIL'
    if report.conjectural:
        word += ' (CONJECTURAL)'
    return word


def render_report_line(report: VerificationReport) -> str:
    return (f'{report.item_id}: {report.digits_agreed:.1f} digits agreed '
            f'(tolerance {report.tolerance_digits}) {status(report)}')


def render_suite(reports: List[VerificationReport], summary: Dict, fmt: str) -> str:
    if fmt == 'json':
        return json.dumps({'summary': summary, 'items': [r.to_json() for r in reports]}, indent=1, sort_keys=True)
    lines = []
    for r in reports:
        line = render_report_line(r)
        if r.detail:
            line += f'  [{r.detail}]'
        lines.append(line)
    lines.append(f"{summary['passed']}/{summary['total']} passed, {summary['failed_blocking']} blocking failures, "
                 f"{summary['runtime_s']:.1f} s")
    return '\n'.join(lines)
