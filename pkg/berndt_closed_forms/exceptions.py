class BerndtError(Exception):
    """Root of all errors raised by berndt_closed_forms."""


class IndexRangeError(BerndtError, ValueError):
    """An index lies outside the range where a formula or pipeline is defined."""


class DegreeBoundError(BerndtError, ValueError):
    pass


class HalfPowerMismatchError(BerndtError, ValueError):
    pass


class DerivativeOrderError(BerndtError, ArithmeticError):
    """A z-derivative above the configured order cap was requested."""


class EvaluationPoleError(BerndtError, ZeroDivisionError):
    pass


class RadicalSurvivesError(BerndtError, ArithmeticError):
    pass


class PrecisionBudgetError(BerndtError, RuntimeError):
    """Series or quadrature could not reach the requested digits within budget."""


class CacheError(BerndtError, ValueError):
    pass
