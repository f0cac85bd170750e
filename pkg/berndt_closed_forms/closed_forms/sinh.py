from math import factorial

from berndt_closed_forms.closed_forms.abstract import G, PI, AbstractHyperbolicSum, R_at_half
from berndt_closed_forms.closed_forms.gamma_pi import GammaPiExpr


class AbstractSinhSum(AbstractHyperbolicSum):
    """Sums over n >= 1 of (-1)^n n^e f(n pi); defined from m = 2 on."""

    summand: str = None
    min_m = 2

    def describe(self, m: int) -> str:
        return f'sum_{{n>=1}} (-1)^n n^{self.exponent(m)} {self.summand}(n pi)'


def _R_mix(m: int) -> GammaPiExpr:
    # 4(m-3) R_{4m-6} + R''_{4m-6}
    return GammaPiExpr.constant(4 * (m - 3) * R_at_half(4 * m - 6) + R_at_half(4 * m - 6, 2))


class Sinh3Sum(AbstractSinhSum):
    family = 'B3'
    summand = '1/sinh^3'

    def __init__(self):
        super().__init__()
        self.name = 'sinh3'

    def exponent(self, m: int) -> int:
        return 4 * m - 3

    def index(self, m: int) -> int:
        return 2 * m - 3

    def theorem(self, m: int) -> GammaPiExpr:
        pre = G ** (8 * m) * factorial(4 * m - 6) / (GammaPiExpr.constant(2 ** (8 * m + 3)) * PI ** (6 * m))
        r = R_at_half(4 * m - 6)
        bracket = (PI ** 4 / G ** 8 * (256 * (m - 1) * (4 * m - 3) * r)
                   + 4 * (m - 3) * r + R_at_half(4 * m - 6, 2))
        return -pre * bracket


class Sinh3ShiftSum(AbstractSinhSum):
    family = 'B3'
    summand = '1/sinh^3'

    def __init__(self):
        super().__init__()
        self.name = 'sinh3_shift'

    def exponent(self, m: int) -> int:
        return 4 * m - 1

    def index(self, m: int) -> int:
        return 2 * m - 2

    def theorem(self, m: int) -> GammaPiExpr:
        pre = G ** (8 * m) * factorial(4 * m - 4) / (GammaPiExpr.constant(2 ** (8 * m + 3)) * PI ** (6 * m + 1))
        bracket = ((4 * m - 1) * R_at_half(4 * m - 4, 1)
                   - PI * (2 * (3 + 2 * m * (4 * m - 5)) * R_at_half(4 * m - 2)))
        return -pre * bracket


class CoshSinh4Sum(AbstractSinhSum):
    family = 'K4'
    summand = 'cosh/sinh^4'

    def __init__(self):
        super().__init__()
        self.name = 'cosh_sinh4'

    def exponent(self, m: int) -> int:
        return 4 * m - 2

    def index(self, m: int) -> int:
        return 2 * m - 3

    def theorem(self, m: int) -> GammaPiExpr:
        pre = G ** (8 * m) * factorial(4 * m - 6) / (GammaPiExpr.constant(3 * 2 ** (8 * m + 3)) * PI ** (6 * m))
        bracket = (PI ** 3 / G ** 8 * (256 * (m - 1) * (2 * m - 1) * (4 * m - 3) * R_at_half(4 * m - 6))
                   - 4 * (m - 1) * (4 * m - 5) * R_at_half(4 * m - 4, 1)
                   + _R_mix(m) * (3 * (2 * m - 1)) / PI)
        return -pre * bracket


class Sinh5Sum(AbstractSinhSum):
    family = 'B5'
    summand = '1/sinh^5'

    def __init__(self):
        super().__init__()
        self.name = 'sinh5'

    def exponent(self, m: int) -> int:
        return 4 * m - 1

    def index(self, m: int) -> int:
        return 2 * m - 3

    def theorem(self, m: int) -> GammaPiExpr:
        r = R_at_half(4 * m - 6)
        lead = (G ** (8 * m - 8) * (factorial(4 * m - 1) * r)
                / (GammaPiExpr.constant(2 ** (8 * m + 1) * 3 * (4 * m - 5)) * PI ** (6 * m - 2)))
        pre = G ** (8 * m) * factorial(4 * m - 6) / (GammaPiExpr.constant(3 * 2 ** (8 * m + 13)) * PI ** (6 * m + 6))
        inner = (PI ** 2 * (72 * (m - 1) * (2 * m - 1) * (4 * m - 5) * (4 * m - 3) * R_at_half(4 * m - 2))
                 - PI * (40 * (m - 1) * (4 * m - 5) * (4 * m - 1) * R_at_half(4 * m - 4, 1))
                 + _R_mix(m) * (3 * (8 * m * m - 6 * m + 1)))
        tail = GammaPiExpr.constant(8 * (6 * m * m - 37 * m + 55) * r + 24 * (m - 4) * R_at_half(4 * m - 6, 2)
                                    + R_at_half(4 * m - 6, 4))
        return -lead - pre * (PI ** 4 * inner * 256 + G ** 8 * tail)
