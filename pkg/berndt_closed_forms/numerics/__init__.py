from berndt_closed_forms.numerics.context import DEFAULT_CONTEXT, NumericContext
from berndt_closed_forms.numerics.elliptic import (EllipticData, agm, dexpr_eval_numeric, elliptic_data, gamma_quarter,
                                                   gp_eval, hyp2f1_halfplus, jacobi_sn_sd, z_derivative_numeric,
                                                   z_derivatives)
from berndt_closed_forms.numerics.quadrature import (SANITY_KINDS, quad_berndt, quad_ismail, quad_ramanujan,
                                                     quad_sanity)
from berndt_closed_forms.numerics.series import SUMMANDS, SeriesSum, sum_hyperbolic, sum_hyperbolic_with_bound
from berndt_closed_forms.numerics.verify import (VerificationReport, agreement, compare, contour_identity_check,
                                                 contour_identity_general, default_tolerance, make_report)
