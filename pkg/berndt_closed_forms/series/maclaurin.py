"""Exact Maclaurin coefficient polynomials of sd, sn and sn^2 in x = k^2.

All series are handled in exponential-generating form: a list ``c`` stands for
sum_j c[j] u^(2j+1)/(2j+1)! (odd series) or sum_k c[k] u^(2k)/(2k)! (even series).
"""
import logging
from math import comb, factorial
from typing import Dict, List, Sequence

from berndt_closed_forms.exact import Poly, moebius_substitute
from berndt_closed_forms.exceptions import DegreeBoundError
from berndt_closed_forms.series.abstract import (SdTable, SeriesTable, SinhTable, SnSquareTable, SnTable,
                                                 TABLE_TYPES)

logger = logging.getLogger(__name__)

X = Poly.x()
ONE_MINUS_X = Poly([1, -1])


def egf_square(odd: Sequence[Poly], k: int) -> Poly:
    """Coefficient of u^(2k)/(2k)! in the square of the odd series ``odd``.

    Cauchy product: sum_{i=0}^{k-1} C(2k, 2i+1) odd[i] odd[k-1-i].
    """
    acc = Poly()
    for i in range(k):
        acc = acc + odd[i] * odd[k - 1 - i] * comb(2 * k, 2 * i + 1)
    return acc


def _egf_cube_coeff(odd: Sequence[Poly], squares: Sequence[Poly], j: int) -> Poly:
    # Coefficient of u^(2j-1)/(2j-1)! in odd^3 = odd^2 * odd; squares[0] is the zero constant term.
    acc = Poly()
    for k in range(1, j):
        acc = acc + squares[k] * odd[j - 1 - k] * comb(2 * j - 1, 2 * k)
    return acc


def odd_ode_series(linear: Poly, cubic: Poly, M: int) -> List[Poly]:
    """Solve f'' = linear * f + cubic * f^3, f(0) = 0, f'(0) = 1, as an odd EGF.

    Returns the first M + 1 coefficients, i.e. those of u^1, u^3, ..., u^(2M+1).
    """
    assert M >= 0, f'M must be non-negative, got {M}'
    coeffs = [Poly.constant(1)]
    squares = [Poly()]
    for j in range(1, M + 1):
        squares.append(egf_square(coeffs, j))
        coeffs.append(linear * coeffs[j - 1] + cubic * _egf_cube_coeff(coeffs, squares, j))
    return coeffs


def gen_sd_polys(M: int) -> SdTable:
    """p_1, ..., p_{2M+1} from sd'' = (2x-1) sd - 2x(1-x) sd^3."""
    if M < 0:
        raise ValueError(f'gen_sd_polys needs M >= 0, got {M}')
    table = SdTable(odd_ode_series(2 * X - 1, X * ONE_MINUS_X * (-2), M))
    logger.debug(f'generated sd table up to p_{2 * M + 1}')
    return table


def gen_sn_polys(M: int) -> SnTable:
    """g_1, ..., g_{2M-1} from sn'' = -(1+x) sn + 2x sn^3."""
    if M < 1:
        raise ValueError(f'gen_sn_polys needs M >= 1, got {M}')
    table = SnTable(odd_ode_series(-(X + 1), X * 2, M - 1))
    logger.debug(f'generated sn table up to g_{2 * M - 1}')
    return table


def gen_q_polys(M: int, g_table: SnTable = None) -> SnSquareTable:
    """q_2, ..., q_{2M}: q_{2n} = sum_{j=1}^{n} C(2n, 2j-1) g_{2j-1} g_{2n-2j+1}."""
    if M < 1:
        raise ValueError(f'gen_q_polys needs M >= 1, got {M}')
    if g_table is None or g_table.max_index < M:
        g_table = gen_sn_polys(M)
    return SnSquareTable([egf_square(g_table.polys, n) for n in range(1, M + 1)])


def gen_R_polys(M: int, q_table: SnSquareTable = None) -> SinhTable:
    """R_{2m}(x) = (x-1)^(m-1) q_{2m}(x/(x-1)) / (2m)! for m = 1..M.

    Raises:
        DegreeBoundError: if some q_{2m} has degree above m - 1.
    """
    if M < 1:
        raise ValueError(f'gen_R_polys needs M >= 1, got {M}')
    if q_table is None or q_table.max_index < M:
        q_table = gen_q_polys(M)
    polys = []
    for m in range(1, M + 1):
        q = q_table[m]
        if q.degree > m - 1:
            raise DegreeBoundError(f'q_{2 * m} has degree {q.degree}, expected at most {m - 1}')
        polys.append(moebius_substitute(q, m - 1) / factorial(2 * m))
    return SinhTable(polys)


def _generate(kind: str, max_index: int) -> SeriesTable:
    if kind == SdTable.kind:
        return gen_sd_polys(max_index)
    if kind == SnTable.kind:
        return gen_sn_polys(max_index)
    if kind == SnSquareTable.kind:
        return gen_q_polys(max_index, _REGISTRY.get(SnTable.kind))
    if kind == SinhTable.kind:
        return gen_R_polys(max_index, _REGISTRY.get(SnSquareTable.kind))
    raise ValueError(f'unknown table kind {kind!r}, expected one of {sorted(TABLE_TYPES)}')


_REGISTRY: Dict[str, SeriesTable] = {}


def get_table(kind: str, max_index: int) -> SeriesTable:
    """Table of the given kind covering at least ``max_index``; grown on demand and reused."""
    table = _REGISTRY.get(kind)
    if table is None or table.max_index < max_index:
        # Grow with headroom so neighbouring requests hit the registry.
        target = max(max_index, 2 * table.max_index if table is not None else max_index)
        logger.debug(f'extending {kind} table to index {target}')
        table = _generate(kind, target)
        _REGISTRY[kind] = table
    return table


def register_table(table: SeriesTable) -> None:
    """Install a precomputed table (e.g. loaded from the cache) after a degree check."""
    bad = table.degree_violations()
    if bad:
        raise DegreeBoundError(f'{table.kind} table has unexpected degrees at indices {bad}')
    current = _REGISTRY.get(table.kind)
    if current is None or current.max_index < table.max_index:
        _REGISTRY[table.kind] = table


def clear_tables() -> None:
    _REGISTRY.clear()


def sd_poly(power: int) -> Poly:
    """p_power for odd power >= 1."""
    assert power >= 1 and power % 2 == 1, f'sd polynomials carry odd powers, got {power}'
    return get_table(SdTable.kind, (power - 1) // 2).by_power(power)


def sinh_poly(power: int) -> Poly:
    """R_power for even power >= 2."""
    assert power >= 2 and power % 2 == 0, f'R polynomials carry even powers, got {power}'
    return get_table(SinhTable.kind, power // 2).by_power(power)
