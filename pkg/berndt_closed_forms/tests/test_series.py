from fractions import Fraction
from math import factorial
import unittest

from scipy import special

from berndt_closed_forms.exact import Poly
from berndt_closed_forms.exceptions import DegreeBoundError
from berndt_closed_forms.series import (check_structural_identities, egf_square, gen_q_polys, gen_R_polys,
                                        gen_sd_polys, gen_sn_polys, get_table, sd_poly, sinh_poly,
                                        table_from_json)
from berndt_closed_forms.series.abstract import SnSquareTable

HALF = Fraction(1, 2)


class TestMaclaurinTables(unittest.TestCase):

    def setUp(self) -> None:
        self.M = 10
        self.sd = gen_sd_polys(self.M)
        self.sn = gen_sn_polys(self.M)
        self.sq = gen_q_polys(self.M, self.sn)
        self.rs = gen_R_polys(self.M, self.sq)

    def test_sd_polys(self) -> None:
        assert gen_sd_polys(0).polys == (Poly.constant(1),)
        assert self.sd.by_power(3) == Poly([-1, 2])
        assert self.sd.by_power(5) == Poly([1, -16, 16])
        p7 = Poly([-1, 2]) * Poly([1, -136, 136])
        assert self.sd.by_power(7) == p7, f'{self.sd.by_power(7)}'
        assert self.sd.by_power(9)(HALF) == 189

    def test_sn_polys(self) -> None:
        assert self.sn[1] == Poly.constant(1)
        assert self.sn.by_power(3) == Poly([-1, -1])
        assert self.sn.by_power(5) == Poly([1, 14, 1])
        assert self.sn.by_power(7) == Poly([-1, -135, -135, -1])
        assert self.sn.by_power(9) == Poly([1, 1228, 5478, 1228, 1])

    def test_q_polys(self) -> None:
        expected = {2: [2], 4: [-8, -8], 6: [32, 208, 32], 8: [-128, -3840, -3840, -128],
                    10: [512, 64256, 224256, 64256, 512]}
        for power, coeffs in expected.items():
            assert self.sq.by_power(power) == Poly(coeffs), f'q_{power} = {self.sq.by_power(power)}'
        assert self.sq.by_power(8)(-1) == 0

    def test_R_polys(self) -> None:
        assert self.rs.by_power(2) == Poly.constant(1)
        assert self.rs.by_power(4) == Poly([Fraction(1, 3), Fraction(-2, 3)])
        assert self.rs.by_power(6) == Poly([2, -17, 17]) / 45
        assert self.rs.by_power(6)(HALF) == Fraction(-1, 20)
        assert self.rs.by_power(8)(HALF) == 0
        assert self.rs.by_power(8).derivative()(HALF) == Fraction(3, 70)
        assert self.rs.by_power(10)(HALF) == Fraction(1, 600)

    def test_degrees_and_integrality(self) -> None:
        for table in (self.sd, self.sn, self.sq, self.rs):
            assert not table.degree_violations(), f'{table.kind}: {table.degree_violations()}'
        for p in self.sd.polys:
            assert p.is_integral(), f'{p}'

    def test_cauchy_product(self) -> None:
        # Truncating (sum g u^(2n-1)/(2n-1)!)^2 at u^(2N) reproduces the q table.
        for n in range(1, self.M + 1):
            assert egf_square(self.sn.polys, n) == self.sq[n]

    def test_R_degree_bound(self) -> None:
        bad = SnSquareTable([Poly.constant(2), Poly([1, 1, 1])])
        with self.assertRaises(DegreeBoundError):
            gen_R_polys(2, bad)

    def test_truncated_series_oracle(self) -> None:
        x0, u = 0.36, 0.3
        sn, cn, dn, _ = special.ellipj(u, x0)
        sd_series = sum(float(p(Fraction(9, 25))) * u ** (2 * j + 1) / factorial(2 * j + 1)
                        for j, p in enumerate(self.sd.polys))
        sn_series = sum(float(g(Fraction(9, 25))) * u ** (2 * n - 1) / factorial(2 * n - 1)
                        for n, g in enumerate(self.sn.polys, start=1))
        assert abs(sd_series - sn / dn) < 1e-14, f'{sd_series}, {sn / dn}'
        assert abs(sn_series - sn) < 1e-14, f'{sn_series}, {sn}'

    def test_json(self) -> None:
        for table in (self.sd, self.sn, self.sq, self.rs):
            assert table_from_json(table.to_json()) == table

    def test_registry(self) -> None:
        table = get_table('sd_p', 3)
        assert table.max_index >= 3
        assert sd_poly(5) == Poly([1, -16, 16])
        assert sinh_poly(4) == Poly([Fraction(1, 3), Fraction(-2, 3)])
        with self.assertRaises(ValueError):
            get_table('cn', 2)


class TestStructuralIdentities(unittest.TestCase):

    def test_all_pass(self) -> None:
        checks = check_structural_identities(17)
        failed = [c for c in checks if not c.passed]
        assert not failed, f'{failed[:3]}'
        names = {c.name for c in checks}
        assert 'q_4(-1) = 0' in names and 'q_32(-1) = 0' in names
        assert 'p_3(1/2) = 0' in names
        assert "R''_28(1/2) = 0" in names

    def test_small_bound(self) -> None:
        checks = check_structural_identities(4)
        assert all(c.passed for c in checks)
        # p_{4m-1} with m = 1 is p_3
        assert any(c.name == 'p_3(1/2) = 0' and c.index == 1 for c in checks)


if __name__ == '__main__':
    unittest.main()
