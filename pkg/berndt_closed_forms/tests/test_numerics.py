from fractions import Fraction
import unittest

import mpmath
from mpmath import mpf
import numpy as np
from scipy import special

from berndt_closed_forms.closed_forms import (GammaPiExpr, berndt_integral_closed, closed_sum, conjecture_closed,
                                              eval_at_half, z_derivative_value)
from berndt_closed_forms.diffalg import family_expr, family_exponent
from berndt_closed_forms.exceptions import IndexRangeError, PrecisionBudgetError
from berndt_closed_forms.numerics import (SUMMANDS, NumericContext, agm, compare, contour_identity_check,
                                          contour_identity_general, dexpr_eval_numeric, elliptic_data, gamma_quarter,
                                          gp_eval, hyp2f1_halfplus, jacobi_sn_sd, quad_berndt, quad_ramanujan,
                                          quad_sanity, sum_hyperbolic, sum_hyperbolic_with_bound, z_derivative_numeric)


def digits(a, b) -> float:
    with mpmath.workdps(80):
        dev = abs(a - b)
        if dev == 0:
            return float('inf')
        return float(-mpmath.log10(dev / max(abs(a), abs(b))))


class TestConstants(unittest.TestCase):

    def setUp(self) -> None:
        self.ctx = NumericContext(target_digits=30)

    def test_agm(self) -> None:
        assert agm(1, 1, self.ctx) == 1
        with self.ctx.workprec():
            value = agm(1, mpmath.sqrt(2), self.ctx)
            assert digits(value, mpf('1.1981402347355922074399224922803238782272')) > 29, f'{value}'
            a, b = mpf(3), mpf('0.7')
            assert digits(agm(a, b, self.ctx), agm((a + b) / 2, mpmath.sqrt(a * b), self.ctx)) > 29

    def test_gamma_quarter(self) -> None:
        g = gamma_quarter(self.ctx)
        with self.ctx.workprec():
            assert digits(g, mpmath.gamma(mpf(1) / 4)) > 29, f'{g}'
            assert digits(g * mpmath.gamma(mpf(3) / 4), mpmath.pi * mpmath.sqrt(2)) > 29
            assert digits(g ** 4 * agm(1, mpmath.sqrt(2), self.ctx) ** 2, (2 * mpmath.pi) ** 3) > 29
        assert np.isclose(float(g), special.gamma(0.25), rtol=1e-14)

    def test_elliptic_data(self) -> None:
        data = elliptic_data(Fraction(1, 2), self.ctx)
        with self.ctx.workprec():
            assert digits(data.y, mpmath.pi) > 29, f'{data.y}'
            assert digits(data.z, hyp2f1_halfplus(0, Fraction(1, 2), self.ctx)) > 29
            assert digits(data.z, gp_eval(z_derivative_value(0), self.ctx)) > 29
        with self.ctx.workprec():
            x = mpf('0.36')
            swapped = elliptic_data(1 - x, self.ctx)
        data = elliptic_data(x, self.ctx)
        assert digits(data.K, swapped.K_prime) > 29 and digits(data.K_prime, swapped.K) > 29
        assert np.isclose(float(data.K), special.ellipk(0.36), rtol=1e-14)
        with self.assertRaises(ValueError):
            elliptic_data(1, self.ctx)

    def test_z_derivatives(self) -> None:
        for n in range(5):
            assert hyp2f1_halfplus(n, 0, self.ctx) == 1
            numeric = z_derivative_numeric(n, Fraction(1, 2), self.ctx)
            exact = gp_eval(z_derivative_value(n), self.ctx)
            assert digits(numeric, exact) > 28, f'order {n}: {numeric} vs {exact}'
        with self.ctx.workprec():
            z1 = 4 * mpmath.sqrt(mpmath.pi) / mpmath.gamma(mpf(1) / 4) ** 2
        assert digits(z_derivative_numeric(1, 0.5, self.ctx), z1) > 28
        assert np.isclose(float(z1), 0.5393526, atol=1e-7)

    def test_jacobi(self) -> None:
        assert jacobi_sn_sd(0, 0.36, self.ctx) == (0, 0)
        for u, x in ((0.3, 0.36), (1.1, 0.5), (0.7, 0.9)):
            sn, sd = jacobi_sn_sd(u, x, self.ctx)
            dn = sn / sd
            with self.ctx.workprec():
                assert abs(dn ** 2 + mpf(x) * sn ** 2 - 1) < mpf(10) ** -28
            assert np.isclose(float(sn), special.ellipj(u, x)[0], rtol=1e-13), f'{sn}'
        with self.assertRaises(ValueError):
            jacobi_sn_sd(2.0, 0.36, self.ctx)


class TestSeries(unittest.TestCase):

    def setUp(self) -> None:
        self.ctx = NumericContext(target_digits=30)

    def test_known_sums(self) -> None:
        with self.ctx.workprec():
            y = mpmath.pi
        base = sum_hyperbolic('C1', 1, y, self.ctx)
        assert digits(base, gp_eval(eval_at_half(family_expr('C1', 1)), self.ctx)) > 28
        cosh3 = sum_hyperbolic('C3', 3, y, self.ctx)
        assert digits(cosh3, gp_eval(closed_sum('cosh3', 1), self.ctx)) > 28
        sinh1 = sum_hyperbolic('B1', 3, y, self.ctx)
        assert digits(sinh1, gp_eval(GammaPiExpr.monomial(Fraction(-1, 512), 8, -12), self.ctx)) > 28

    def test_tail_bound(self) -> None:
        with self.ctx.workprec():
            y = mpmath.pi
            for family in SUMMANDS:
                res = sum_hyperbolic_with_bound(family, 5, y, self.ctx)
                f = SUMMANDS[family][0]
                if family.startswith(('C', 'S')):
                    extra = sum((-1) ** n * mpf(2 * n + 1) ** 5 * f((2 * n + 1) * y / 2)
                                for n in range(res.terms, 2 * res.terms))
                else:
                    extra = sum((-1) ** n * mpf(n) ** 5 * f(n * y) for n in range(res.terms + 1, 2 * res.terms + 1))
                assert abs(extra) <= res.tail_bound, f'{family}: {extra} > {res.tail_bound}'

    def test_budget(self) -> None:
        with self.assertRaises(PrecisionBudgetError):
            sum_hyperbolic('B3', 9, 0.01, NumericContext(target_digits=30, max_series_terms=3))
        with self.assertRaises(ValueError):
            sum_hyperbolic('T3', 1, 1)

    def test_generic_x(self) -> None:
        # every family at its smallest index against direct summation at y(x0)
        for x0 in ('0.25', '0.36'):
            data = elliptic_data(mpf(x0), self.ctx)
            for family in SUMMANDS:
                exponent = family_exponent(family, 1)
                direct = sum_hyperbolic(family, exponent, data.y, self.ctx)
                symbolic = dexpr_eval_numeric(family_expr(family, 1), mpf(x0), self.ctx)
                assert digits(direct, symbolic) > 25, f'{family} at x={x0}: {direct} vs {symbolic}'


class TestQuadrature(unittest.TestCase):

    def setUp(self) -> None:
        self.ctx = NumericContext(target_digits=30)

    def test_berndt_integrals(self) -> None:
        plus = quad_berndt(5, 'plus', self.ctx)
        assert digits(plus, gp_eval(berndt_integral_closed('plus', 1), self.ctx)) > 25, f'{plus}'
        minus = quad_berndt(7, 'minus', self.ctx)
        assert digits(minus, gp_eval(berndt_integral_closed('minus', 2), self.ctx)) > 25, f'{minus}'
        conj = quad_berndt(1, 'plus', self.ctx)
        assert digits(conj, gp_eval(conjecture_closed(), self.ctx)) > 25, f'{conj}'
        with self.assertRaises(IndexRangeError):
            quad_berndt(5, 'minus', self.ctx)

    def test_sanity_integrals(self) -> None:
        with self.ctx.workprec():
            quarter_pi = mpmath.pi / 4
        for n in (1, 3):
            assert digits(quad_sanity('ramanujan', n=n, ctx=self.ctx), quarter_pi) > 25, f'n={n}'
        for x in (0.5, 0.3):
            assert digits(quad_sanity('ismail', x=x, ctx=self.ctx), 2) > 25, f'x={x}'
        with self.assertRaises(ValueError):
            quad_sanity('ramanujan', n=2, ctx=self.ctx)
        with self.assertRaises(ValueError):
            quad_sanity('dirichlet', ctx=self.ctx)

    def test_quadrature_degree_converged(self) -> None:
        coarse = NumericContext(target_digits=30, quad_max_degree=10)
        fine = NumericContext(target_digits=30, quad_max_degree=20)
        for name, run in (('plus a=5', lambda ctx: quad_berndt(5, 'plus', ctx)),
                          ('minus a=7', lambda ctx: quad_berndt(7, 'minus', ctx)),
                          ('ramanujan n=1', lambda ctx: quad_ramanujan(1, ctx))):
            lo, hi = run(coarse), run(fine)
            assert digits(lo, hi) > 28, f'{name}: {lo} vs {hi}'


class TestVerify(unittest.TestCase):

    def setUp(self) -> None:
        self.ctx = NumericContext(target_digits=30)

    def test_compare(self) -> None:
        base = eval_at_half(family_expr('C1', 1))
        with self.ctx.workprec():
            numeric = sum_hyperbolic('C1', 1, mpmath.pi, self.ctx)
        report = compare(base, numeric, self.ctx, item_id='C1')
        assert report.passed and report.digits_agreed >= 20, f'{report}'
        assert report.to_json()['id'] == 'C1' and report.to_json()['pass']
        assert report.to_json()['symbolic_json'] == base.to_json()
        assert compare(GammaPiExpr(), mpf('1e-40'), self.ctx).passed
        perturbed = base + GammaPiExpr.monomial(Fraction(1, 10 ** 12), 4, -6)
        assert not compare(perturbed, numeric, self.ctx).passed

    def test_contour_identities(self) -> None:
        for sign, p in (('plus', 0), ('plus', 1), ('minus', 2)):
            report = contour_identity_check(sign, p, self.ctx, tolerance_digits=25)
            assert report.passed, f'{sign} p={p}: {report.lhs} vs {report.rhs}'
        with self.assertRaises(IndexRangeError):
            contour_identity_check('minus', 1, self.ctx)

    def test_general_identity(self) -> None:
        for sign, a in (('plus', 5), ('minus', 7)):
            report = contour_identity_general(sign, a, self.ctx, tolerance_digits=25)
            assert report.passed, f'{sign} a={a}: {report.lhs} vs {report.rhs}'
        with self.assertRaises(IndexRangeError):
            contour_identity_general('minus', 5, self.ctx)
