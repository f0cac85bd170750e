from fractions import Fraction
from typing import Union

from berndt_closed_forms.exact.poly import Poly, Scalar, to_fraction
from berndt_closed_forms.exceptions import EvaluationPoleError


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor over the rationals (Euclid)."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


class RationalFunction:
    """Quotient num/den of rational polynomials in canonical form.

    The denominator is monic and coprime to the numerator, so equal functions
    have equal representations.
    """

    __slots__ = ('num', 'den')

    def __init__(self, num: Union[Poly, Scalar], den: Union[Poly, Scalar] = 1, reduce: bool = True):
        num = num if isinstance(num, Poly) else Poly.constant(num)
        den = den if isinstance(den, Poly) else Poly.constant(den)
        if den.is_zero():
            raise ZeroDivisionError('rational function with zero denominator')
        if num.is_zero():
            num, den = Poly(), Poly.constant(1)
        elif reduce and den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
        lead = den.leading
        if lead != 1:
            num, den = num / lead, den / lead
        self.num = num
        self.den = den

    @classmethod
    def constant(cls, c: Scalar) -> 'RationalFunction':
        return cls(Poly.constant(c))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def _coerce(self, other) -> 'RationalFunction':
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction(other, reduce=False)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(other)
        return NotImplemented

    def __add__(self, other) -> 'RationalFunction':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> 'RationalFunction':
        return RationalFunction(-self.num, self.den, reduce=False)

    def __sub__(self, other) -> 'RationalFunction':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> 'RationalFunction':
        return (-self) + other

    def __mul__(self, other) -> 'RationalFunction':
        if isinstance(other, (int, Fraction)):
            return RationalFunction(self.num * other, self.den, reduce=False)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> 'RationalFunction':
        if isinstance(other, (int, Fraction)):
            return RationalFunction(self.num / other, self.den, reduce=False)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError('division by the zero rational function')
        return RationalFunction(self.num * other.den, self.den * other.num)

    def derivative(self) -> 'RationalFunction':
        if self.is_polynomial():
            return RationalFunction(self.num.derivative(), self.den, reduce=False)
        return RationalFunction(self.num.derivative() * self.den - self.num * self.den.derivative(),
                                self.den * self.den)

    def __call__(self, x0: Scalar) -> Fraction:
        x0 = to_fraction(x0)
        d = self.den(x0)
        if not d:
            raise EvaluationPoleError(f'denominator {self.den.to_text()} vanishes at x={x0}')
        return self.num(x0) / d

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def to_text(self) -> str:
        if self.is_polynomial():
            return self.num.to_text()
        return f'({self.num.to_text()})/({self.den.to_text()})'

    def to_latex(self) -> str:
        if self.is_polynomial():
            return self.num.to_latex()
        return f'\\frac{{{self.num.to_latex()}}}{{{self.den.to_latex()}}}'

    def __repr__(self) -> str:
        return f'RationalFunction({self.to_text()})'
