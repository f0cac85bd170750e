from berndt_closed_forms.closed_forms.abstract import G, PI, AbstractHyperbolicSum, p_at_half
from berndt_closed_forms.closed_forms.gamma_pi import GammaPiExpr


class AbstractCoshSum(AbstractHyperbolicSum):
    """Sums over n >= 0 of (-1)^n (2n+1)^e f((2n+1) pi / 2)."""

    summand: str = None

    def describe(self, m: int) -> str:
        return f'sum_{{n>=0}} (-1)^n (2n+1)^{self.exponent(m)} {self.summand}((2n+1)pi/2)'


def _p_mix(m: int) -> GammaPiExpr:
    # (4m-6) p_{4m-3} + p''_{4m-3}
    return GammaPiExpr.constant((4 * m - 6) * p_at_half(4 * m - 3) + p_at_half(4 * m - 3, 2))


class Cosh3Sum(AbstractCoshSum):
    family = 'C3'
    summand = '1/cosh^3'

    def __init__(self):
        super().__init__()
        self.name = 'cosh3'

    def exponent(self, m: int) -> int:
        return 4 * m - 1

    def index(self, m: int) -> int:
        return 2 * m - 1

    def theorem(self, m: int) -> GammaPiExpr:
        pre = G ** (8 * m - 4) / (GammaPiExpr.constant(2 ** (4 * m + 7)) * PI ** (6 * m + 3))
        bracket = (PI ** 4 * (128 * (8 * m * m - 6 * m + 1) * p_at_half(4 * m - 3))
                   + G ** 8 * _p_mix(m))
        return -pre * bracket


class Cosh3ShiftSum(AbstractCoshSum):
    family = 'C3'
    summand = '1/cosh^3'

    def __init__(self):
        super().__init__()
        self.name = 'cosh3_shift'

    def exponent(self, m: int) -> int:
        return 4 * m + 1

    def index(self, m: int) -> int:
        return 2 * m

    def theorem(self, m: int) -> GammaPiExpr:
        pre = G ** (8 * m + 4) / (GammaPiExpr.constant(2 ** (4 * m + 5)) * PI ** (6 * m + 4))
        return pre * (PI * p_at_half(4 * m + 1) + (4 * m + 1) * p_at_half(4 * m - 1, 1))


class SinhCosh4Sum(AbstractCoshSum):
    family = 'S4'
    summand = 'sinh/cosh^4'

    def __init__(self):
        super().__init__()
        self.name = 'sinh_cosh4'

    def exponent(self, m: int) -> int:
        return 4 * m

    def index(self, m: int) -> int:
        return 2 * m - 1

    def theorem(self, m: int) -> GammaPiExpr:
        pre = G ** (8 * m - 4) / (GammaPiExpr.constant(3 * 2 ** (4 * m + 6)) * PI ** (6 * m))
        inner = PI * p_at_half(4 * m - 1, 1) + _p_mix(m) * (6 * m)
        bracket = (GammaPiExpr.constant(-256 * m * (8 * m * m - 6 * m + 1) * p_at_half(4 * m - 3))
                   - G ** 8 / PI ** 4 * inner)
        return pre * bracket


class Cosh5Sum(AbstractCoshSum):
    family = 'C5'
    summand = '1/cosh^5'

    def __init__(self):
        super().__init__()
        self.name = 'cosh5'

    def exponent(self, m: int) -> int:
        return 4 * m + 1

    def index(self, m: int) -> int:
        return 2 * m - 1

    def theorem(self, m: int) -> GammaPiExpr:
        pre = G ** (8 * m - 4) / (GammaPiExpr.constant(3 * 2 ** (4 * m + 15)) * PI ** (6 * m + 9))
        p = p_at_half(4 * m - 3)
        p2 = p_at_half(4 * m - 3, 2)
        p4 = p_at_half(4 * m - 3, 4)
        first = PI ** 8 * (32768 * m * (2 * m - 1) * (4 * m - 1) * (4 * m + 1) * p)
        middle = (PI ** 2 * (9 * p_at_half(4 * m + 1))
                  + PI * (10 * (4 * m + 1) * p_at_half(4 * m - 1, 1))
                  + _p_mix(m) * (6 * m * (4 * m + 1)))
        last = GammaPiExpr.constant(8 * (m - 2) * (6 * m - 7) * p + 12 * (2 * m - 5) * p2 + p4)
        return pre * (first + PI ** 4 * G ** 8 * middle * 256 + G ** 16 * last)
