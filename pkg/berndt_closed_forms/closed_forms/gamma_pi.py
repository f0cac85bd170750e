from collections import namedtuple
from fractions import Fraction
from typing import Dict, Iterator, List, Tuple, Union

from berndt_closed_forms.diffalg import DiffExpr
from berndt_closed_forms.exceptions import RadicalSurvivesError

Scalar = Union[int, Fraction]
GPTerm = namedtuple('GPTerm', ['coeff', 'gamma_exp', 'pi_exp_x2'])
ZDerivValue = namedtuple('ZDerivValue', ['order', 'value'])

HALF = Fraction(1, 2)


class GammaPiExpr:
    """Finite sum of c * Gamma(1/4)^a * pi^(h/2) with rational c.

    The pi exponent is stored doubled (``pi_exp_x2`` = h) so half-integer powers of
    pi are exact. Zero coefficients never appear.
    """

    __slots__ = ('_terms',)

    def __init__(self, terms: Dict[Tuple[int, int], Scalar] = None):
        self._terms: Dict[Tuple[int, int], Fraction] = {}
        for key, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self._terms[key] = c

    @classmethod
    def constant(cls, c: Scalar) -> 'GammaPiExpr':
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c: Scalar, gamma_exp: int = 0, pi_exp_x2: int = 0) -> 'GammaPiExpr':
        return cls({(gamma_exp, pi_exp_x2): c})

    @classmethod
    def gamma(cls, k: int = 1) -> 'GammaPiExpr':
        return cls.monomial(1, k, 0)

    @classmethod
    def pi(cls, k: Scalar = 1) -> 'GammaPiExpr':
        """pi^k for integer or half-integer k."""
        h = Fraction(k) * 2
        assert h.denominator == 1, f'pi exponent must be a multiple of 1/2, got {k}'
        return cls.monomial(1, 0, int(h))

    @property
    def terms(self) -> List[GPTerm]:
        """Terms ordered by descending gamma exponent, then descending pi exponent."""
        keys = sorted(self._terms, key=lambda k: (-k[0], -k[1]))
        return [GPTerm(self._terms[k], k[0], k[1]) for k in keys]

    def __iter__(self) -> Iterator[GPTerm]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def exponent_pairs(self) -> List[Tuple[int, int]]:
        return [(t.gamma_exp, t.pi_exp_x2) for t in self.terms]

    @staticmethod
    def _coerce(other) -> 'GammaPiExpr':
        if isinstance(other, GammaPiExpr):
            return other
        if isinstance(other, (int, Fraction)):
            return GammaPiExpr.constant(other)
        return NotImplemented

    def __add__(self, other) -> 'GammaPiExpr':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return GammaPiExpr(out)

    __radd__ = __add__

    def __neg__(self) -> 'GammaPiExpr':
        return GammaPiExpr({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> 'GammaPiExpr':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> 'GammaPiExpr':
        return (-self) + other

    def scale(self, c: Scalar) -> 'GammaPiExpr':
        return GammaPiExpr({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other) -> 'GammaPiExpr':
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Tuple[int, int], Fraction] = {}
        for (a1, h1), c1 in self._terms.items():
            for (a2, h2), c2 in other._terms.items():
                key = (a1 + a2, h1 + h2)
                out[key] = out.get(key, 0) + c1 * c2
        return GammaPiExpr(out)

    __rmul__ = __mul__

    def inverse(self) -> 'GammaPiExpr':
        if len(self._terms) != 1:
            raise ZeroDivisionError(f'only single-term expressions are invertible, got {self}')
        (a, h), c = next(iter(self._terms.items()))
        return GammaPiExpr({(-a, -h): 1 / c})

    def __truediv__(self, other) -> 'GammaPiExpr':
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> 'GammaPiExpr':
        return self.inverse() * other

    def __pow__(self, n: int) -> 'GammaPiExpr':
        base = self if n >= 0 else self.inverse()
        out = GammaPiExpr.constant(1)
        for _ in range(abs(n)):
            out = out * base
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def to_json(self) -> List[Dict]:
        return [{'num': t.coeff.numerator, 'den': t.coeff.denominator, 'gamma_exp': t.gamma_exp,
                 'pi_exp_x2': t.pi_exp_x2} for t in self.terms]

    @classmethod
    def from_json(cls, data: List[Dict]) -> 'GammaPiExpr':
        return cls({(d['gamma_exp'], d['pi_exp_x2']): Fraction(d['num'], d['den']) for d in data})

    def to_text(self) -> str:
        return _render(self, latex=False)

    def to_latex(self) -> str:
        return _render(self, latex=True)

    def __repr__(self) -> str:
        return f'GammaPiExpr({self.to_text()})'


def _split_two(n: int) -> Tuple[int, int]:
    b = 0
    while n % 2 == 0:
        n //= 2
        b += 1
    return n, b


def _pi_power(h: int, latex: bool) -> str:
    e = Fraction(abs(h), 2)
    sym = '\\pi' if latex else 'π'
    if e == 1:
        return sym
    if latex:
        return f'{sym}^{{{e}}}'
    return f'{sym}^{e}' if e.denominator == 1 else f'{sym}^({e})'


def _render_term(t: GPTerm, latex: bool) -> Tuple[str, str]:
    c = abs(t.coeff)
    top, bottom_num, bottom_sym = [], [], []
    if c.numerator != 1:
        top.append(str(c.numerator))
    if t.gamma_exp:
        a = abs(t.gamma_exp)
        g = '\\Gamma' if latex else 'Γ'
        if a != 1:
            g = f'{g}^{{{a}}}' if latex else f'{g}^{a}'
        (top if t.gamma_exp > 0 else bottom_sym).append(g)
    odd, b = _split_two(c.denominator)
    if odd != 1:
        bottom_num.append(str(odd))
    if b:
        bottom_num.append('2' if b == 1 else (f'2^{{{b}}}' if latex else f'2^{b}'))
    if t.pi_exp_x2:
        (top if t.pi_exp_x2 > 0 else bottom_sym).append(_pi_power(t.pi_exp_x2, latex))
    sign = '-' if t.coeff < 0 else '+'
    numerator = ''.join(top) or '1'
    if not bottom_num and not bottom_sym:
        return sign, numerator
    if latex:
        bottom = ' \\cdot '.join(bottom_num) + ''.join(bottom_sym)
        return sign, f'\\frac{{{numerator}}}{{{bottom}}}'
    bottom = '·'.join(bottom_num) + ''.join(bottom_sym)
    if len(bottom_num) + len(bottom_sym) > 1:
        bottom = f'({bottom})'
    return sign, f'{numerator}/{bottom}'


def _render(e: GammaPiExpr, latex: bool) -> str:
    if e.is_zero():
        return '0'
    parts = [_render_term(t, latex) for t in e.terms]
    out = ('-' if parts[0][0] == '-' else '') + parts[0][1]
    for sign, body in parts[1:]:
        out += f' {sign} {body}'
    return out


def _rising(a: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out


def _gamma_square(r: Fraction) -> GammaPiExpr:
    """Gamma(r)^2 for r in 1/4 + N or 3/4 + N, reduced to Gamma(1/4) and pi.

    Uses Gamma(x+1) = x Gamma(x) and Gamma(1/4) Gamma(3/4) = pi sqrt(2).
    """
    frac = r - (r.numerator // r.denominator)
    k = r.numerator // r.denominator
    if frac == Fraction(1, 4):
        coeff, gamma_exp, pi_h, sqrt2 = _rising(Fraction(1, 4), k), 1, 0, 0
    elif frac == Fraction(3, 4):
        coeff, gamma_exp, pi_h, sqrt2 = _rising(Fraction(3, 4), k), -1, 2, 1
    else:
        raise ValueError(f'Gamma({r}) is not reducible to Gamma(1/4)')
    return _reduce_sqrt2(coeff ** 2, 2 * gamma_exp, 2 * pi_h, 2 * sqrt2)


def _reduce_sqrt2(coeff: Fraction, gamma_exp: int, pi_h: int, sqrt2_exp: int) -> GammaPiExpr:
    if sqrt2_exp % 2:
        raise RadicalSurvivesError(f'a factor sqrt(2)^{sqrt2_exp} survives in Gamma/pi reduction')
    return GammaPiExpr.monomial(coeff * Fraction(2) ** (sqrt2_exp // 2), gamma_exp, pi_h)


def z_derivative_value(n: int) -> GammaPiExpr:
    """Exact d^n z/dx^n at x = 1/2, i.e. (1/2)_n^2 sqrt(pi) / Gamma(n/2 + 3/4)^2.

    Even n give c Gamma^2 / pi^(3/2), odd n give c sqrt(pi) / Gamma^2.
    """
    assert n >= 0, f'derivative order must be non-negative, got {n}'
    return GammaPiExpr.monomial(_rising(HALF, n) ** 2, 0, 1) / _gamma_square(Fraction(n, 2) + Fraction(3, 4))


def z_derivative_table(max_order: int) -> List[ZDerivValue]:
    return [ZDerivValue(n, z_derivative_value(n)) for n in range(max_order + 1)]


def eval_at_half(e: DiffExpr) -> GammaPiExpr:
    """Substitute x = 1/2 in a DiffExpr: (x(1-x))^(s/2) -> 2^(-s), z^(n) -> z_derivative_value(n).

    Raises:
        EvaluationPoleError: if a coefficient has a pole at x = 1/2.
    """
    if e.is_zero():
        return GammaPiExpr()
    z_values = [z_derivative_value(n) for n in range(e.max_order + 1)]
    prefactor = GammaPiExpr.constant(Fraction(2) ** -e.half_power)
    return e.evaluate(lambda c: c(HALF), z_values, prefactor, GammaPiExpr())
