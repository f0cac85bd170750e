from fractions import Fraction
from math import factorial, pi
import unittest

import numpy as np
from scipy import special

from berndt_closed_forms.closed_forms import (HYPERBOLIC_SUMS, GammaPiExpr, berndt_integral_closed, closed_sum,
                                              conjecture_closed, eval_at_half, membership_pattern,
                                              membership_violations, sum_at_pi, theorem1_membership_check,
                                              z_derivative_value)
from berndt_closed_forms.closed_forms.gamma_pi import _reduce_sqrt2
from berndt_closed_forms.diffalg import DiffExpr, family_expr
from berndt_closed_forms.exceptions import IndexRangeError, RadicalSurvivesError
from berndt_closed_forms.exact import Poly

GAMMA = special.gamma(0.25)


def gp(*terms) -> GammaPiExpr:
    """Build c * Gamma^a * pi^k from (c, a, k) triples."""
    out = GammaPiExpr()
    for c, a, k in terms:
        out = out + GammaPiExpr.monomial(Fraction(c), a, int(2 * k))
    return out


def as_float(e: GammaPiExpr) -> float:
    return sum(float(t.coeff) * GAMMA ** t.gamma_exp * pi ** (t.pi_exp_x2 / 2) for t in e)


F = Fraction

COSH_VALUES = {
    ('cosh3', 1): gp((-3 / F(2 ** 4), 4, -5), (F(1, 2 ** 10), 12, -9)),
    ('cosh3_shift', 1): gp((F(-3, 2 ** 9), 12, -9), (F(5, 2 ** 8), 12, -10)),
    ('cosh3', 2): gp((F(63, 2 ** 8), 12, -11), (F(-13, 2 ** 14), 20, -15)),
    ('cosh3_shift', 2): gp((F(189, 2 ** 13), 20, -15), (F(-297, 2 ** 12), 20, -16)),
    ('sinh_cosh4', 1): gp((F(-1, 2 ** 2), 4, -6), (F(-1, 3 * 2 ** 9), 12, -9), (F(1, 2 ** 8), 12, -10)),
    ('sinh_cosh4', 2): gp((F(21, 2 ** 5), 12, -12), (F(-13, 2 ** 11), 20, -16), (F(11, 2 ** 13), 20, -15)),
    ('cosh5', 1): gp((F(5, 2 ** 4), 4, -7), (F(-5, 2 ** 9), 12, -11), (F(25, 3 * 2 ** 9), 12, -10),
                     (F(-9, 2 ** 11), 12, -9), (F(1, 3 * 2 ** 16), 20, -15)),
    ('cosh5', 2): gp((F(-189, 2 ** 7), 12, -13), (F(117, 2 ** 12), 20, -17), (F(-495, 2 ** 13), 20, -16),
                     (F(567, 2 ** 15), 20, -15), (F(-1, 2 ** 16), 28, -21)),
}

SINH_VALUES = {
    ('sinh3', 2): gp((F(-5, 2 ** 10), 8, -8), (F(1, 2 ** 16), 16, -12)),
    ('sinh3_shift', 2): gp((F(7, 2 ** 15), 16, -13), (F(-9, 2 ** 17), 16, -12)),
    ('sinh3', 3): gp((F(81, 2 ** 16), 16, -14), (F(-17, 2 ** 22), 24, -18)),
    ('sinh3_shift', 3): gp((F(-297, 2 ** 21), 24, -19), (F(189, 2 ** 22), 24, -18)),
    ('cosh_sinh4', 2): gp((F(3, 2 ** 16), 16, -13), (F(-1, 3 * 2 ** 15), 16, -12), (F(-5, 2 ** 10), 8, -9)),
    ('cosh_sinh4', 3): gp((F(135, 2 ** 16), 16, -15), (F(-85, 2 ** 22), 24, -19), (F(9, 2 ** 21), 24, -18)),
    ('sinh5', 2): gp((F(-35, 2 ** 13), 8, -10), (F(21, 2 ** 18), 16, -14), (F(-35, 3 * 2 ** 16), 16, -13),
                     (F(27, 2 ** 19), 16, -12), (F(-5, 3 * 2 ** 25), 24, -18)),
    ('sinh5', 3): gp((F(1485, 2 ** 19), 16, -16), (F(-935, 2 ** 24), 24, -20), (F(495, 2 ** 22), 24, -19),
                     (F(-567, 2 ** 24), 24, -18), (F(65, 2 ** 31), 32, -24)),
}

INTEGRAL_VALUES = {
    ('plus', 1): gp((F(15, 2 ** 8), 4, -1), (F(5, 2 ** 13), 12, -5), (F(-5, 2 ** 13), 12, -4),
                    (F(3, 2 ** 15), 12, -3), (F(1, 2 ** 20), 20, -9)),
    ('plus', 2): gp((F(567, 2 ** 13), 12, -3), (F(117, 2 ** 18), 20, -7), (F(-297, 2 ** 19), 20, -6),
                    (F(189, 2 ** 21), 20, -5), (F(3, 2 ** 22), 28, -11)),
    ('plus', 3): gp((F(405405, 2 ** 20), 20, -5), (F(84591, 2 ** 25), 28, -9), (F(-107757, 2 ** 25), 28, -8),
                    (F(68607, 2 ** 27), 28, -7), (F(17679, 2 ** 32), 36, -13)),
    ('minus', 2): gp((F(-105, 2 ** 11), 8, -2), (F(-21, 2 ** 16), 16, -6), (F(7, 2 ** 14), 16, -5),
                     (F(-9, 2 ** 17), 16, -4), (F(-5, 2 ** 23), 24, -10)),
    ('minus', 3): gp((F(-4455, 2 ** 15), 16, -4), (F(-935, 2 ** 20), 24, -8), (F(297, 2 ** 18), 24, -7),
                     (F(-189, 2 ** 20), 24, -6), (F(-195, 2 ** 27), 32, -12)),
}


class TestGammaPiExpr(unittest.TestCase):

    def setUp(self) -> None:
        self.a = gp((F(-3, 16), 4, -5), (F(1, 1024), 12, -9))
        self.b = gp((2, 0, 0), (F(1, 3), 4, Fraction(1, 2)))

    def test_arith(self) -> None:
        assert self.a - self.a == GammaPiExpr()
        assert self.a + 0 == self.a
        assert 2 * self.a == self.a + self.a
        assert (self.a * self.b) * self.b == self.a * (self.b * self.b)
        assert GammaPiExpr.gamma(4) / GammaPiExpr.pi(2) == gp((1, 4, -2))
        assert GammaPiExpr.pi() ** -3 == gp((1, 0, -3))
        assert 1 / GammaPiExpr.monomial(4, 8, 2) == GammaPiExpr.monomial(F(1, 4), -8, -2)
        with self.assertRaises(ZeroDivisionError):
            self.a.inverse()

    def test_float_consistency(self) -> None:
        assert np.isclose(as_float(self.a * self.b), as_float(self.a) * as_float(self.b), rtol=1e-13)
        assert np.isclose(as_float(self.a), 0.063144, atol=5e-6), f'{as_float(self.a)}'

    def test_terms_order(self) -> None:
        assert self.a.exponent_pairs() == [(12, -18), (4, -10)]
        assert len(self.b) == 2

    def test_json(self) -> None:
        assert GammaPiExpr.from_json(self.a.to_json()) == self.a
        assert self.a.to_json()[0] == {'num': 1, 'den': 1024, 'gamma_exp': 12, 'pi_exp_x2': -18}

    def test_to_text(self) -> None:
        assert self.a.to_text() == 'Γ^12/(2^10π^9) - 3Γ^4/(2^4π^5)', self.a.to_text()
        assert gp((F(35, 3 * 2 ** 16), 16, -13)).to_text() == '35Γ^16/(3·2^16π^13)'
        assert gp((F(1, 2), 0, 0)).to_text() == '1/2'
        assert gp((F(-1, 4), 0, F(1, 2))).to_text() == '-π^(1/2)/2^2'
        assert GammaPiExpr().to_text() == '0'

    def test_to_latex(self) -> None:
        e = gp((F(-35, 3 * 2 ** 16), 16, -13))
        assert e.to_latex() == '-\\frac{35\\Gamma^{16}}{3 \\cdot 2^{16}\\pi^{13}}', e.to_latex()

    def test_radical_survives(self) -> None:
        with self.assertRaises(RadicalSurvivesError):
            _reduce_sqrt2(F(1), 2, 0, 1)
        assert _reduce_sqrt2(F(3), 2, 0, 2) == gp((6, 2, 0))


class TestZValues(unittest.TestCase):

    def test_exact_values(self) -> None:
        assert z_derivative_value(0) == gp((F(1, 2), 2, F(-3, 2)))
        assert z_derivative_value(1) == gp((4, -2, F(1, 2)))
        for n in range(5):
            pairs = z_derivative_value(n).exponent_pairs()
            assert pairs == ([(2, -3)] if n % 2 == 0 else [(-2, 1)]), f'order {n}: {pairs}'

    def test_against_hypergeometric(self) -> None:
        # z(x) = 2F1(1/2, 1/2; 1; x)
        poch = 1.0
        for n in range(5):
            numeric = poch ** 2 / factorial(n) * special.hyp2f1(0.5 + n, 0.5 + n, 1 + n, 0.5)
            exact = as_float(z_derivative_value(n))
            assert np.isclose(exact, numeric, rtol=1e-12), f'order {n}: {exact} vs {numeric}'
            poch *= 0.5 + n

    def test_eval_at_half_base_sums(self) -> None:
        assert eval_at_half(family_expr('C1', 1)) == gp((F(1, 16), 4, -3))
        assert eval_at_half(family_expr('B1', 1)) == gp((F(-1, 512), 8, -6))
        assert np.isclose(as_float(eval_at_half(family_expr('B1', 1))), -0.060657, atol=2e-6)

    def test_eval_at_half_is_a_ring_map(self) -> None:
        rng = np.random.default_rng(7)

        def random_expr(half_power: int) -> DiffExpr:
            out = DiffExpr(half_power=half_power)
            for _ in range(int(rng.integers(1, 4))):
                coeff = Poly([int(c) for c in rng.integers(-5, 6, size=int(rng.integers(1, 4)))])
                deriv_exps = [int(d) for d in rng.integers(0, 3, size=int(rng.integers(0, 3)))]
                out = out + DiffExpr.monomial(coeff, int(rng.integers(0, 4)), deriv_exps, half_power)
            return out

        for trial in range(20):
            a, b = random_expr(trial % 2), random_expr(trial % 2)
            c = random_expr(int(rng.integers(0, 3)))
            assert eval_at_half(a + b) == eval_at_half(a) + eval_at_half(b), f'sum, trial {trial}'
            assert eval_at_half(a * b) == eval_at_half(a) * eval_at_half(b), f'product, trial {trial}'
            assert eval_at_half(a * c) == eval_at_half(a) * eval_at_half(c), f'mixed product, trial {trial}'


class TestHyperbolicSums(unittest.TestCase):

    def test_registry(self) -> None:
        assert len(HYPERBOLIC_SUMS) == 8
        assert HYPERBOLIC_SUMS['cosh5'].exponent(2) == 9
        assert HYPERBOLIC_SUMS['sinh3_shift'].exponent(2) == 7
        assert 'cosh^5' in HYPERBOLIC_SUMS['cosh5'].describe(1)
        with self.assertRaises(ValueError):
            closed_sum('tanh3', 1)
        with self.assertRaises(ValueError):
            closed_sum('cosh3', 1, route='guess')

    def test_ranges(self) -> None:
        with self.assertRaises(IndexRangeError):
            closed_sum('cosh3', 0)
        for name in ('sinh3', 'sinh3_shift', 'cosh_sinh4', 'sinh5'):
            with self.assertRaises(IndexRangeError):
                closed_sum(name, 1)
            with self.assertRaises(IndexRangeError):
                closed_sum(name, 1, route='pipeline')

    def test_cosh_table(self) -> None:
        for (name, m), expected in COSH_VALUES.items():
            for route in ('theorem', 'pipeline'):
                value = closed_sum(name, m, route)
                assert value == expected, f'{name} m={m} via {route}: {value.to_text()}'

    def test_sinh_table(self) -> None:
        for (name, m), expected in SINH_VALUES.items():
            for route in ('theorem', 'pipeline'):
                value = closed_sum(name, m, route)
                assert value == expected, f'{name} m={m} via {route}: {value.to_text()}'

    def test_route_agreement(self) -> None:
        for name, family in HYPERBOLIC_SUMS.items():
            for m in range(family.min_m, 7):
                theorem = family.closed_sum(m, 'theorem')
                pipeline = family.closed_sum(m, 'pipeline')
                assert theorem == pipeline, f'{name} m={m}: {theorem.to_text()} != {pipeline.to_text()}'

    def test_sum_at_pi(self) -> None:
        assert sum_at_pi('C3', 3) == COSH_VALUES[('cosh3', 1)]
        assert sum_at_pi('K4', 6) == SINH_VALUES[('cosh_sinh4', 2)]


class TestIntegrals(unittest.TestCase):

    def test_table(self) -> None:
        for (sign, m), expected in INTEGRAL_VALUES.items():
            value = berndt_integral_closed(sign, m)
            assert value == expected, f'{sign} m={m}: {value.to_text()}'

    def test_route_agreement(self) -> None:
        for sign, ms in (('plus', range(1, 5)), ('minus', range(2, 5))):
            for m in ms:
                theorem = berndt_integral_closed(sign, m, 'theorem')
                corollary = berndt_integral_closed(sign, m, 'corollary')
                assert theorem == corollary, f'{sign} m={m}: {theorem.to_text()} != {corollary.to_text()}'

    def test_printed_route_differs(self) -> None:
        for m in (2, 3):
            printed = berndt_integral_closed('minus', m, 'printed')
            assert printed != berndt_integral_closed('minus', m), f'm={m}'
        with self.assertRaises(ValueError):
            berndt_integral_closed('plus', 1, 'printed')

    def test_ranges(self) -> None:
        with self.assertRaises(IndexRangeError):
            berndt_integral_closed('plus', 0)
        with self.assertRaises(IndexRangeError):
            berndt_integral_closed('minus', 1)
        with self.assertRaises(ValueError):
            berndt_integral_closed('times', 2)

    def test_numeric_magnitudes(self) -> None:
        assert np.isclose(as_float(INTEGRAL_VALUES[('plus', 1)]), 1.3475, atol=1e-3)
        assert np.isclose(as_float(conjecture_closed()), 0.17916, atol=1e-4), f'{as_float(conjecture_closed())}'

    def test_membership(self) -> None:
        for (sign, m), value in INTEGRAL_VALUES.items():
            assert theorem1_membership_check(value, sign, m), f'{sign} m={m}'
            assert set(value.exponent_pairs()) == membership_pattern(sign, m)
        for m in range(1, 5):
            assert theorem1_membership_check(berndt_integral_closed('plus', m), 'plus', m)
        # the conjectured value sits in the plus span continued to p = 0
        assert set(conjecture_closed().exponent_pairs()) <= membership_pattern('plus', 0)
        outside = membership_violations(INTEGRAL_VALUES[('plus', 1)], 'plus', 2)
        assert sorted(outside) == [(4, -2), (12, -10), (12, -8), (20, -18)], f"{outside}"
        assert not theorem1_membership_check(INTEGRAL_VALUES[('minus', 2)], 'minus', 3)
