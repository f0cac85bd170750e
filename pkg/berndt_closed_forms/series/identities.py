import logging
from collections import namedtuple
from fractions import Fraction
from typing import Callable, Iterator, List

from berndt_closed_forms.exact import Poly, one_minus_x
from berndt_closed_forms.series.maclaurin import gen_q_polys, gen_R_polys, gen_sd_polys, gen_sn_polys

logger = logging.getLogger(__name__)

IdentityCheck = namedtuple('IdentityCheck', ['name', 'index', 'passed', 'detail'])

HALF = Fraction(1, 2)


def _vanishes(name: str, index: int, value: Fraction) -> IdentityCheck:
    return IdentityCheck(name, index, value == 0, '' if value == 0 else f'value {value}')


def _equal(name: str, index: int, lhs: Poly, rhs: Poly) -> IdentityCheck:
    if lhs == rhs:
        return IdentityCheck(name, index, True, '')
    return IdentityCheck(name, index, False, f'{lhs.to_text()} != {rhs.to_text()}')


def _degree_checks(table) -> Iterator[IdentityCheck]:
    for i in range(table.first_index, table.max_index + 1):
        deg, want = table[i].degree, table.expected_degree(i)
        yield IdentityCheck(f'deg {table.label(i)}', i, deg == want,
                            '' if deg == want else f'degree {deg}, expected {want}')


def check_structural_identities(maxN: int) -> List[IdentityCheck]:
    """Check the exact identities satisfied by the p, g, q and R tables.

    Every table is generated up to index ``maxN`` and each identity is checked
    for all indices that fit. A failing identity is returned as a record with
    ``passed=False``; nothing is raised.

    Args:
        maxN: largest table index (p_{2maxN+1}, g_{2maxN-1}, q_{2maxN}, R_{2maxN}).

    Returns:
        list of IdentityCheck records in a deterministic order.
    """
    assert maxN >= 1, f'maxN must be positive, got {maxN}'
    sd = gen_sd_polys(maxN)
    sn = gen_sn_polys(maxN)
    sq = gen_q_polys(maxN, sn)
    rs = gen_R_polys(maxN, sq)
    p = sd.by_power
    q = sq.by_power
    R = rs.by_power

    checks: List[IdentityCheck] = []
    for table in (sd, sn, sq, rs):
        checks.extend(_degree_checks(table))

    for j in range(sd.first_index, sd.max_index + 1):
        poly = sd[j]
        bad = [c for c in poly.coeffs if c.denominator != 1]
        checks.append(IdentityCheck(f'{sd.label(j)} integral', j, not bad,
                                    '' if not bad else f'non-integer coefficients {bad}'))
        checks.append(_equal(f'{sd.label(j)}(1-x) = (-1)^{j} {sd.label(j)}(x)', j,
                             one_minus_x(poly), poly * (-1) ** j))

    for n in range(1, maxN + 1):
        checks.append(_equal(f'{sn.label(n)} reflection', n, sn[n].reflect(n - 1), sn[n]))
        checks.append(_equal(f'{sq.label(n)} reflection', n, sq[n].reflect(n - 1), sq[n]))

    def in_range(power: int, table) -> bool:
        return table.power_of(table.first_index) <= power <= table.power_of(table.max_index)

    def add(name: str, m: int, powers: List[int], table, value: Callable[[], Fraction]):
        if all(in_range(k, table) for k in powers):
            checks.append(_vanishes(name, m, value()))

    for m in range(1, maxN + 1):
        add(f'q_{4 * m}(-1) = 0', m, [4 * m], sq, lambda: q(4 * m)(-1))
        add(f"q'_{4 * m - 2}(-1) + {m - 1} q_{4 * m - 2}(-1) = 0", m, [4 * m - 2], sq,
            lambda: q(4 * m - 2).derivative()(-1) + (m - 1) * q(4 * m - 2)(-1))
        add(f"q''_{4 * m}(-1) + {2 * (m - 1)} q'_{4 * m}(-1) = 0", m, [4 * m], sq,
            lambda: q(4 * m).derivative(2)(-1) + 2 * (m - 1) * q(4 * m).derivative()(-1))

    for m in range(0, maxN + 1):
        add(f"p'_{4 * m + 1}(1/2) = 0", m, [4 * m + 1], sd, lambda: p(4 * m + 1).derivative()(HALF))
        if m == 0:
            continue
        add(f'p_{4 * m - 1}(1/2) = 0', m, [4 * m - 1], sd, lambda: p(4 * m - 1)(HALF))
        add(f"p'_{4 * m - 3}(1/2) = 0", m, [4 * m - 3], sd, lambda: p(4 * m - 3).derivative()(HALF))
        add(f"p''_{4 * m - 1}(1/2) = 0", m, [4 * m - 1], sd, lambda: p(4 * m - 1).derivative(2)(HALF))
        add(f'p^(4)_{4 * m - 1}(1/2) = 0', m, [4 * m - 1], sd, lambda: p(4 * m - 1).derivative(4)(HALF))

    for m in range(1, maxN + 1):
        add(f"R'_{4 * m - 2}(1/2) = 0", m, [4 * m - 2], rs, lambda: R(4 * m - 2).derivative()(HALF))
        if m < 2:
            continue
        add(f'R_{4 * m - 4}(1/2) = 0', m, [4 * m - 4], rs, lambda: R(4 * m - 4)(HALF))
        add(f"R'_{4 * m - 6}(1/2) = 0", m, [4 * m - 6], rs, lambda: R(4 * m - 6).derivative()(HALF))
        add(f"R''_{4 * m - 4}(1/2) = 0", m, [4 * m - 4], rs, lambda: R(4 * m - 4).derivative(2)(HALF))

    failed = [c for c in checks if not c.passed]
    if failed:
        logger.warning(f'{len(failed)} of {len(checks)} structural identities failed, first: {failed[0]}')
    else:
        logger.debug(f'all {len(checks)} structural identities hold up to index {maxN}')
    return checks
