import logging
from fractions import Fraction
from typing import Callable, Dict, List, NamedTuple, Sequence, Tuple, TypeVar, Union

from berndt_closed_forms.exact import Poly, RationalFunction
from berndt_closed_forms.exceptions import DerivativeOrderError, HalfPowerMismatchError

logger = logging.getLogger(__name__)

T = TypeVar('T')
Coeff = Union[int, Fraction, Poly, RationalFunction]
Key = Tuple[int, Tuple[int, ...]]

DEFAULT_ORDER_CAP = 4

X_POLY = Poly([0, 1, -1])   # x(1-x)
# d/dx log (x(1-x)) = (1-2x)/(x(1-x))
LOG_PREFACTOR_DERIVATIVE = RationalFunction(Poly([1, -2]), X_POLY)


def _as_rf(c: Coeff) -> RationalFunction:
    if isinstance(c, RationalFunction):
        return c
    if isinstance(c, Poly):
        return RationalFunction(c, reduce=False)
    return RationalFunction.constant(c)


def _trim(exps: Sequence[int]) -> Tuple[int, ...]:
    n = len(exps)
    while n and not exps[n - 1]:
        n -= 1
    return tuple(exps[:n])


def _pad(exps: Tuple[int, ...], n: int) -> Tuple[int, ...]:
    return exps + (0,) * (n - len(exps))


class DiffTerm(NamedTuple):
    """coeff(x) * z^z_exp * prod_i (z^(i))^deriv_exps[i-1]"""
    coeff: RationalFunction
    z_exp: int
    deriv_exps: Tuple[int, ...]


class DiffExpr:
    """Element (x(1-x))^(s/2) * sum of DiffTerms of the differential algebra Q(x)[z^{+-1}, z', ..., z^(4)].

    Terms are merged by exponent vector and zero coefficients are dropped, so equal
    expressions with equal ``half_power`` compare equal.
    """

    __slots__ = ('half_power', '_terms')

    def __init__(self, terms: Dict[Key, RationalFunction] = None, half_power: int = 0):
        self.half_power = half_power
        self._terms: Dict[Key, RationalFunction] = {}
        for key, c in (terms or {}).items():
            self._accumulate(self._terms, key, c)

    @staticmethod
    def _accumulate(target: Dict[Key, RationalFunction], key: Key, c: RationalFunction) -> None:
        key = (key[0], _trim(key[1]))
        total = target[key] + c if key in target else c
        if total.is_zero():
            target.pop(key, None)
        else:
            target[key] = total

    @classmethod
    def monomial(cls, coeff: Coeff, z_exp: int = 0, deriv_exps: Sequence[int] = (),
                 half_power: int = 0) -> 'DiffExpr':
        return cls({(z_exp, tuple(deriv_exps)): _as_rf(coeff)}, half_power)

    @classmethod
    def z(cls, order: int = 0) -> 'DiffExpr':
        """The symbol z^(order)."""
        if order == 0:
            return cls.monomial(1, 1)
        return cls.monomial(1, 0, (0,) * (order - 1) + (1,))

    @property
    def terms(self) -> List[DiffTerm]:
        width = max([DEFAULT_ORDER_CAP] + [len(k[1]) for k in self._terms])
        keys = sorted(self._terms, key=lambda k: (k[0], _pad(k[1], width)))
        return [DiffTerm(self._terms[k], k[0], _pad(k[1], width)) for k in keys]

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def max_order(self) -> int:
        return max([len(k[1]) for k in self._terms], default=0)

    def __len__(self) -> int:
        return len(self._terms)

    def _check_compatible(self, other: 'DiffExpr', op: str) -> None:
        # The zero expression is compatible with any prefactor.
        if self.half_power != other.half_power and not (self.is_zero() or other.is_zero()):
            raise HalfPowerMismatchError(f'cannot {op} expressions with half powers '
                                         f'{self.half_power} and {other.half_power}')

    def __add__(self, other: 'DiffExpr') -> 'DiffExpr':
        if not isinstance(other, DiffExpr):
            return NotImplemented
        self._check_compatible(other, 'add')
        s = other.half_power if self.is_zero() else self.half_power
        out = DiffExpr(self._terms, s)
        for key, c in other._terms.items():
            self._accumulate(out._terms, key, c)
        return out

    def __neg__(self) -> 'DiffExpr':
        return DiffExpr({k: -c for k, c in self._terms.items()}, self.half_power)

    def __sub__(self, other: 'DiffExpr') -> 'DiffExpr':
        if not isinstance(other, DiffExpr):
            return NotImplemented
        self._check_compatible(other, 'subtract')
        return self + (-other)

    def scale(self, c: Coeff) -> 'DiffExpr':
        c = _as_rf(c)
        return DiffExpr({k: v * c for k, v in self._terms.items()}, self.half_power)

    def __mul__(self, other) -> 'DiffExpr':
        if not isinstance(other, DiffExpr):
            if isinstance(other, (int, Fraction, Poly, RationalFunction)):
                return self.scale(other)
            return NotImplemented
        out = DiffExpr(half_power=self.half_power + other.half_power)
        for (ea, da), ca in self._terms.items():
            for (eb, db), cb in other._terms.items():
                n = max(len(da), len(db))
                ders = tuple(a + b for a, b in zip(_pad(da, n), _pad(db, n)))
                self._accumulate(out._terms, (ea + eb, ders), ca * cb)
        return out

    def __rmul__(self, other) -> 'DiffExpr':
        return self.__mul__(other)

    def __pow__(self, n: int) -> 'DiffExpr':
        assert n >= 0, f'negative power {n}'
        out = DiffExpr.monomial(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiffExpr):
            return False
        if self.is_zero() and other.is_zero():
            return True
        return self.half_power == other.half_power and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.half_power, frozenset(self._terms.items())))

    def d_dx(self, cap: int = DEFAULT_ORDER_CAP) -> 'DiffExpr':
        return d_dx(self, cap)

    def d_dy(self, cap: int = DEFAULT_ORDER_CAP) -> 'DiffExpr':
        return d_dy(self, cap)

    def evaluate(self, coeff_value: Callable[[RationalFunction], T], z_values: Sequence[T], prefactor: T,
                 zero: T) -> T:
        """Substitute values for the coefficients, for z, z', ... and for (x(1-x))^(s/2).

        Args:
            coeff_value: evaluates a RationalFunction coefficient at the point.
            z_values: values of z, z', z'', ... at the point, at least max_order + 1 of them.
            prefactor: value of (x(1-x))^(s/2).
            zero: additive identity of the value type.
        """
        assert len(z_values) > self.max_order, f'need {self.max_order + 1} z values, got {len(z_values)}'
        total = zero
        for (e, ders), c in self._terms.items():
            term = z_values[0] ** e * coeff_value(c)
            for i, d in enumerate(ders):
                if d:
                    term = term * z_values[i + 1] ** d
            total = total + term
        return total * prefactor

    def to_json(self) -> Dict:
        return {
            'half_power': self.half_power,
            'terms': [{'num': t.coeff.num.to_json(), 'den': t.coeff.den.to_json(),
                       'z_exp': t.z_exp, 'deriv_exps': list(t.deriv_exps)} for t in self.terms],
        }

    @classmethod
    def from_json(cls, data: Dict) -> 'DiffExpr':
        terms = {(t['z_exp'], tuple(t['deriv_exps'])):
                 RationalFunction(Poly.from_json(t['num']), Poly.from_json(t['den'])) for t in data['terms']}
        return cls(terms, data['half_power'])

    def to_text(self) -> str:
        return _render(self, latex=False)

    def to_latex(self) -> str:
        return _render(self, latex=True)

    def __repr__(self) -> str:
        return f'DiffExpr({self.to_text()})'


def d_dx(e: DiffExpr, cap: int = DEFAULT_ORDER_CAP) -> DiffExpr:
    """Derivative in x with the half power s held fixed.

    The derivative of the prefactor enters each term as (s/2)(1-2x)/(x(1-x)).

    Raises:
        DerivativeOrderError: if a z-derivative of order above ``cap`` would appear.
    """
    out = DiffExpr(half_power=e.half_power)
    acc = out._terms
    pre = LOG_PREFACTOR_DERIVATIVE * Fraction(e.half_power, 2) if e.half_power else None
    for (z_exp, ders), c in e._terms.items():
        key = (z_exp, ders)
        DiffExpr._accumulate(acc, key, c.derivative())
        if pre is not None:
            DiffExpr._accumulate(acc, key, c * pre)
        if z_exp:
            DiffExpr._accumulate(acc, (z_exp - 1, (ders[0] + 1,) + ders[1:] if ders else (1,)), c * z_exp)
        for i, d in enumerate(ders):
            if not d:
                continue
            if i + 2 > cap:
                raise DerivativeOrderError(f'z-derivative of order {i + 2} exceeds cap {cap}')
            new = list(_pad(ders, i + 2))
            new[i] -= 1
            new[i + 1] += 1
            DiffExpr._accumulate(acc, (z_exp, tuple(new)), c * d)
    return out


DX_DY = DiffExpr.monomial(-X_POLY, 2)   # dx/dy = -x(1-x) z^2


def d_dy(e: DiffExpr, cap: int = DEFAULT_ORDER_CAP) -> DiffExpr:
    """d/dy = (dx/dy) d/dx with dx/dy = -x(1-x) z^2."""
    return DX_DY * d_dx(e, cap)


def _z_symbol(order: int, latex: bool) -> str:
    if order == 0:
        return 'z'
    if order <= 2:
        return 'z' + "'" * order
    return f'z^{{({order})}}' if latex else f'z^({order})'


def _render(e: DiffExpr, latex: bool) -> str:
    if e.is_zero():
        return '0'
    parts = []
    for t in e.terms:
        factors = []
        if t.z_exp:
            factors.append('z' if t.z_exp == 1 else (f'z^{{{t.z_exp}}}' if latex else f'z^{t.z_exp}'))
        for i, d in enumerate(t.deriv_exps):
            if d:
                sym = _z_symbol(i + 1, latex)
                if d > 1:
                    sym = f'({sym})^{{{d}}}' if latex else f'({sym})^{d}'
                factors.append(sym)
        c = t.coeff.to_latex() if latex else t.coeff.to_text()
        mono = ' '.join(factors)
        if not mono:
            parts.append(f'({c})')
        elif c == '1':
            parts.append(mono)
        else:
            parts.append(f'({c}) {mono}')
    body = ' + '.join(parts)
    s = e.half_power
    if s == 0:
        return body
    if latex:
        pre = '\\sqrt{x(1-x)}' if s == 1 else f'(x(1-x))^{{{Fraction(s, 2)}}}'
        return f'{pre}\\left[{body}\\right]'
    pre = 'sqrt(x(1-x))' if s == 1 else f'(x(1-x))^({Fraction(s, 2)})'
    return f'{pre} * [{body}]'
