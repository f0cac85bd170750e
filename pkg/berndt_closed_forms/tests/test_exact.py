from fractions import Fraction
import unittest

import numpy as np

from berndt_closed_forms.exact import Poly, RationalFunction, moebius_substitute, one_minus_x, poly_gcd
from berndt_closed_forms.exceptions import DegreeBoundError, EvaluationPoleError


class TestPoly(unittest.TestCase):

    def setUp(self) -> None:
        rng = np.random.default_rng(68)
        self.random_polys = [Poly([int(c) for c in rng.integers(-5, 6, size=rng.integers(1, 6))])
                             for _ in range(8)]

    def test_arith_examples(self) -> None:
        p3 = Poly([-1, 2])
        assert p3 * p3 == Poly([1, -4, 4]), f'{p3 * p3}'
        assert p3 + Poly() == p3
        prod = Poly([1, 1]) * Poly([1, 14, 1])
        assert prod == Poly([1, 15, 15, 1]), f'{prod}'
        assert (p3 - p3).is_zero() and (p3 - p3).degree == -1

    def test_ring_axioms(self) -> None:
        for a, b, c in zip(self.random_polys, self.random_polys[1:], self.random_polys[2:]):
            assert a + b == b + a
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            if not a.is_zero() and not b.is_zero():
                assert (a * b).degree == a.degree + b.degree, f'{a}, {b}'

    def test_derivative(self) -> None:
        p5 = Poly([1, -16, 16])
        assert p5.derivative() == Poly([-16, 32])
        assert Poly([-1, 2]).derivative(2).is_zero()
        assert Poly.monomial(3).derivative()(Fraction(1, 2)) == Fraction(3, 4)
        for n in range(1, 8):
            assert Poly.monomial(n).derivative() == Poly.monomial(n - 1, n)

    def test_eval(self) -> None:
        assert Poly([-1, 2])(Fraction(1, 2)) == 0
        assert Poly([1, -16, 16])(Fraction(1, 2)) == -3
        assert Poly.constant(Fraction(7, 3))(Fraction(11, 5)) == Fraction(7, 3)

    def test_divmod(self) -> None:
        for a, b in zip(self.random_polys, self.random_polys[1:]):
            if b.is_zero():
                continue
            quo, rem = a.divmod(b)
            assert quo * b + rem == a, f'{a} / {b}'
            assert rem.degree < b.degree

    def test_moebius_substitute(self) -> None:
        q4 = Poly([-8, -8])
        assert moebius_substitute(q4, 1) == Poly([8, -16]), f'{moebius_substitute(q4, 1)}'
        assert moebius_substitute(Poly.constant(5), 0) == Poly.constant(5)
        assert moebius_substitute(Poly.x(), 1) == Poly.x()
        for p in self.random_polys:
            d = max(p.degree, 0)
            assert moebius_substitute(moebius_substitute(p, d), d) == p, f'{p}'

    def test_moebius_degree_bound(self) -> None:
        with self.assertRaises(DegreeBoundError):
            moebius_substitute(Poly([1, 2, 3]), 1)

    def test_reflect_and_one_minus_x(self) -> None:
        g5 = Poly([1, 14, 1])
        assert g5.reflect(2) == g5
        assert Poly([1, 2]).reflect(2) == Poly([0, 2, 1])
        assert one_minus_x(Poly([-1, 2])) == Poly([1, -2])
        with self.assertRaises(DegreeBoundError):
            g5.reflect(1)

    def test_json_and_text(self) -> None:
        p = Poly([Fraction(1, 3), 0, -2])
        assert p.to_json() == ['1/3', '0/1', '-2/1']
        assert Poly.from_json(p.to_json()) == p
        assert Poly([1, -16, 16]).to_text() == '16x^2 - 16x + 1'
        assert Poly([Fraction(1, 3), Fraction(-2, 3)]).to_text() == '-(2/3)x + (1/3)'
        assert Poly().to_json() == []
        with self.assertRaises(ValueError):
            Poly.from_json(['1/1', '0/1'])


class TestRationalFunction(unittest.TestCase):

    def setUp(self) -> None:
        self.x = Poly.x()
        self.X = self.x * Poly([1, -1])

    def test_canonical_form(self) -> None:
        r = RationalFunction(self.X * 2, self.x * 4)
        assert r.is_polynomial(), f'{r}'
        assert r == RationalFunction(Poly([1, -1]) / 2)
        s = RationalFunction(Poly.constant(3), Poly([2, 2]))
        assert s.den == Poly([1, 1]) and s.num == Poly.constant(Fraction(3, 2))

    def test_field_ops(self) -> None:
        one = RationalFunction.constant(1)
        r = RationalFunction(Poly([1, -2]), self.X)
        assert (r / r) == one
        assert (r - r).is_zero()
        assert r * self.X == RationalFunction(Poly([1, -2]))
        assert r + 1 == RationalFunction(Poly([1, -2]) + self.X, self.X)

    def test_derivative(self) -> None:
        inv = RationalFunction(1, self.X)
        # d/dx 1/(x(1-x)) = -(1-2x)/(x(1-x))^2
        expected = RationalFunction(Poly([-1, 2]), self.X * self.X)
        assert inv.derivative() == expected, f'{inv.derivative()}'

    def test_eval_pole(self) -> None:
        inv = RationalFunction(1, self.X)
        assert inv(Fraction(1, 2)) == 4
        with self.assertRaises(EvaluationPoleError):
            inv(0)

    def test_gcd(self) -> None:
        a = Poly([-1, 2]) * Poly([1, 1])
        b = Poly([-1, 2]) * Poly([0, 3])
        assert poly_gcd(a, b) == Poly([Fraction(-1, 2), 1])


if __name__ == '__main__':
    unittest.main()
