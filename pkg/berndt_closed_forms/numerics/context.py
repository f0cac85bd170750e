import contextlib
import math
from dataclasses import dataclass, replace
from typing import Iterator

import mpmath


@dataclass(frozen=True)
class NumericContext:
    """Precision and budget settings shared by every numeric routine.

    Routines never touch mpmath's global precision outside ``workprec``.
    """

    target_digits: int = 40
    guard_bits: int = 50
    max_series_terms: int = 100000
    quad_max_degree: int = 10
    panel_width: int = 1
    tail_margin_digits: int = 5

    def __post_init__(self):
        if self.target_digits < 10:
            raise ValueError(f'target_digits must be at least 10, got {self.target_digits}')

    @property
    def prec_bits(self) -> int:
        return math.ceil(self.target_digits * math.log2(10)) + self.guard_bits

    @property
    def tail_epsilon(self) -> mpmath.mpf:
        """Tail bounds are pushed below this value."""
        return mpmath.mpf(10) ** -(self.target_digits + self.tail_margin_digits)

    def with_digits(self, digits: int) -> 'NumericContext':
        return replace(self, target_digits=digits)

    @contextlib.contextmanager
    def workprec(self) -> Iterator[None]:
        with mpmath.workprec(self.prec_bits):
            yield


DEFAULT_CONTEXT = NumericContext()
