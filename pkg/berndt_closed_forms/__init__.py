"""berndt_closed_forms is a package for exact closed forms of hyperbolic series and
Berndt-type integrals of order three at the lemniscatic point, together with their
arbitrary-precision numerical verification.

Every closed form is a rational combination of Gamma(1/4)^a * pi^(h/2).
"""

import sys

#: The release version
version = '1.0.0'
__version__ = version

MIN_PYTHON_VERSION = 3, 8
MIN_PYTHON_VERSION_STR = '.'.join([str(v) for v in MIN_PYTHON_VERSION])

if sys.version_info < MIN_PYTHON_VERSION:
    raise Exception(f"berndt_closed_forms {version} requires Python {MIN_PYTHON_VERSION_STR} or newer.")
