from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from berndt_closed_forms.exceptions import DegreeBoundError

Scalar = Union[int, Fraction]


def to_fraction(c: Union[Scalar, str]) -> Fraction:
    if isinstance(c, Fraction):
        return c
    return Fraction(c)


def normalize(coeffs: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    # Strip trailing zeros; the zero polynomial is the empty tuple.
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Dense univariate polynomial over the rationals.

    Coefficients are stored lowest degree first, e.g. ``Poly([1, -16, 16])`` is
    16x^2 - 16x + 1. Instances are immutable.
    """

    __slots__ = ('coeffs', '_hash')

    def __init__(self, coeffs: Iterable[Union[Scalar, str]] = ()):
        self.coeffs = normalize([to_fraction(c) for c in coeffs])
        self._hash = None

    @classmethod
    def constant(cls, c: Scalar) -> 'Poly':
        return cls([c])

    @classmethod
    def monomial(cls, power: int, c: Scalar = 1) -> 'Poly':
        return cls([0] * power + [c])

    @classmethod
    def x(cls) -> 'Poly':
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def _coerce(self, other) -> 'Poly':
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other)
        return NotImplemented

    def __add__(self, other) -> 'Poly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] = res[i] + c
        return Poly(res)

    __radd__ = __add__

    def __neg__(self) -> 'Poly':
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> 'Poly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> 'Poly':
        return (-self) + other

    def __mul__(self, other) -> 'Poly':
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return Poly()
        res = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                res[i + j] += a * b
        return Poly(res)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> 'Poly':
        assert n >= 0, f'negative power {n}'
        result, base = Poly.constant(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, c: Scalar) -> 'Poly':
        c = to_fraction(c)
        return Poly([a / c for a in self.coeffs])

    def divmod(self, other: 'Poly') -> Tuple['Poly', 'Poly']:
        """Euclidean division ``self = q * other + r`` with deg r < deg other."""
        if other.is_zero():
            raise ZeroDivisionError('polynomial division by zero')
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.leading
        d = other.degree
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + d] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem[:d] if d > 0 else [])

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def monic(self) -> 'Poly':
        if self.is_zero():
            return self
        return self / self.leading

    def derivative(self, order: int = 1) -> 'Poly':
        assert order >= 0, f'derivative order must be non-negative, got {order}'
        res = list(self.coeffs)
        for _ in range(order):
            res = [c * (i + 1) for i, c in enumerate(res[1:])]
        return Poly(res)

    def __call__(self, x0: Scalar) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        x0 = to_fraction(x0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def compose(self, other: 'Poly') -> 'Poly':
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def reflect(self, d: int) -> 'Poly':
        """Return x^d * p(1/x), the coefficient reversal against degree bound d."""
        if d < self.degree:
            raise DegreeBoundError(f'reflection bound {d} below degree {self.degree}')
        padded = list(self.coeffs) + [Fraction(0)] * (d + 1 - len(self.coeffs))
        return Poly(reversed(padded))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_json(self) -> List[str]:
        return [f'{c.numerator}/{c.denominator}' for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> 'Poly':
        poly = cls(Fraction(s) for s in data)
        if len(poly.coeffs) != len(data):
            raise ValueError(f'non-canonical polynomial encoding {data!r}')
        return poly

    def __repr__(self) -> str:
        return f'Poly({self.to_text()})'

    def to_text(self, var: str = 'x') -> str:
        return _render(self, var, latex=False)

    def to_latex(self, var: str = 'x') -> str:
        return _render(self, var, latex=True)


def _render(p: Poly, var: str, latex: bool) -> str:
    if p.is_zero():
        return '0'
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        sign = '-' if c < 0 else '+'
        a = abs(c)
        if a.denominator == 1:
            mag = '' if (a == 1 and k > 0) else str(a.numerator)
        elif latex:
            mag = f'\\frac{{{a.numerator}}}{{{a.denominator}}}'
        else:
            mag = f'({a.numerator}/{a.denominator})'
        if k == 0:
            mono = ''
        elif k == 1:
            mono = var
        else:
            mono = f'{var}^{{{k}}}' if latex else f'{var}^{k}'
        parts.append((sign, mag + mono))
    out = ('-' if parts[0][0] == '-' else '') + parts[0][1]
    for sign, body in parts[1:]:
        out += f' {sign} {body}'
    return out


def moebius_substitute(p: Poly, d: int) -> Poly:
    """Compute (x-1)^d * p(x/(x-1)) exactly.

    Raises:
        DegreeBoundError: if d < deg(p), the result would not be a polynomial.
    """
    if d < p.degree:
        raise DegreeBoundError(f'moebius substitution needs d >= deg p, got d={d}, deg={p.degree}')
    x = Poly.x()
    xm1 = Poly([-1, 1])
    acc = Poly()
    # sum_k c_k x^k (x-1)^(d-k)
    for k, c in enumerate(p.coeffs):
        if c:
            acc = acc + (x ** k) * (xm1 ** (d - k)) * c
    return acc


def one_minus_x(p: Poly) -> Poly:
    """Return p(1 - x)."""
    return p.compose(Poly([1, -1]))
