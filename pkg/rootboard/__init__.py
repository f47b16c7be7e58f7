"""
Rootboard - digit-by-digit square roots on a dust board
Exact integer square roots, historical fractional approximations,
sexagesimal output, casting out nines and a Newton comparison harness
"""

__version__ = "1.0.0"

import sys

# Decimal conversion of very large naturals is part of the job
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)
