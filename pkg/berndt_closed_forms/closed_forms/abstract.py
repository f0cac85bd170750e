import logging
from fractions import Fraction

from berndt_closed_forms.closed_forms.gamma_pi import GammaPiExpr, eval_at_half
from berndt_closed_forms.diffalg import DiffExpr, family_expr
from berndt_closed_forms.exceptions import IndexRangeError
from berndt_closed_forms.series import sd_poly, sinh_poly

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
G = GammaPiExpr.gamma()
PI = GammaPiExpr.pi()

ROUTES = ('theorem', 'pipeline')


def p_at_half(n: int, k: int = 0) -> Fraction:
    """k-th derivative of p_n at x = 1/2."""
    return sd_poly(n).derivative(k)(HALF)


def R_at_half(n: int, k: int = 0) -> Fraction:
    """k-th derivative of R_n at x = 1/2."""
    return sinh_poly(n).derivative(k)(HALF)


class AbstractHyperbolicSum:
    """A theorem-level family of hyperbolic sums at y = pi, indexed by m.

    Subclasses fix the summand (``family``), the exponent as a function of m and
    the closed form stated for the family. The pipeline route derives the same
    value from the symbolic expression of the family at x = 1/2.
    """

    family: str = None
    min_m: int = 1

    def __init__(self):
        self.name = None

    def exponent(self, m: int) -> int:
        raise NotImplementedError

    def index(self, m: int) -> int:
        """Family index p of the symbolic expression with the same exponent."""
        raise NotImplementedError

    def check_range(self, m: int) -> None:
        if m < self.min_m:
            raise IndexRangeError(f'{self.name} is defined for m >= {self.min_m}, got m={m}')

    def theorem(self, m: int) -> GammaPiExpr:
        raise NotImplementedError

    def expression(self, m: int) -> DiffExpr:
        self.check_range(m)
        return family_expr(self.family, self.index(m))

    def pipeline(self, m: int) -> GammaPiExpr:
        return eval_at_half(self.expression(m))

    def closed_sum(self, m: int, route: str = 'theorem') -> GammaPiExpr:
        """Exact value of the sum at y = pi.

        Args:
            m: family index.
            route: 'theorem' for the stated closed form, 'pipeline' for eval_at_half
                of the derived expression.

        Returns:
            GammaPiExpr of the sum.
        """
        self.check_range(m)
        if route == 'theorem':
            value = self.theorem(m)
        elif route == 'pipeline':
            value = self.pipeline(m)
        else:
            raise ValueError(f'unknown route {route!r}, expected one of {ROUTES}')
        logger.debug(f'{self.name}(m={m}) via {route}: {value.to_text()}')
        return value

    def describe(self, m: int) -> str:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f'{type(self).__name__}(name={self.name!r})'
