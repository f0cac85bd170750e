from .expr import DEFAULT_ORDER_CAP, DiffExpr, DiffTerm, d_dx, d_dy
from .families import (COSH_FAMILIES, SINH_FAMILIES, cosh3_via_y_second, cosh_family_expr, family_exponent,
                       family_expr, family_index, second_y_derivative, sinh3_via_y_second, sinh_family_expr)
