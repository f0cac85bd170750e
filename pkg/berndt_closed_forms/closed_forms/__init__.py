from berndt_closed_forms.closed_forms.abstract import ROUTES, AbstractHyperbolicSum, R_at_half, p_at_half
from berndt_closed_forms.closed_forms.cosh import Cosh3ShiftSum, Cosh3Sum, Cosh5Sum, SinhCosh4Sum
from berndt_closed_forms.closed_forms.gamma_pi import (GammaPiExpr, GPTerm, ZDerivValue, eval_at_half,
                                                       z_derivative_table, z_derivative_value)
from berndt_closed_forms.closed_forms.integrals import (INTEGRAL_ROUTES, SIGNS, berndt_integral_closed,
                                                        check_integral_range, conjecture_closed, integrand_exponent,
                                                        membership_pattern, membership_violations, sum_at_pi,
                                                        theorem1_membership_check)
from berndt_closed_forms.closed_forms.sinh import CoshSinh4Sum, Sinh3ShiftSum, Sinh3Sum, Sinh5Sum

HYPERBOLIC_SUMS = {s.name: s for s in (Cosh3Sum(), Cosh3ShiftSum(), SinhCosh4Sum(), Cosh5Sum(),
                                       Sinh3Sum(), Sinh3ShiftSum(), CoshSinh4Sum(), Sinh5Sum())}


def closed_sum(name: str, m: int, route: str = 'theorem') -> GammaPiExpr:
    try:
        family = HYPERBOLIC_SUMS[name]
    except KeyError:
        raise ValueError(f'unknown sum {name!r}, expected one of {sorted(HYPERBOLIC_SUMS)}') from None
    return family.closed_sum(m, route)
