"""disczeta: exact classes of discriminants in the Grothendieck ring.

Computes strata of configuration spaces of points and loci of singular
divisors in linear systems as truncated generating series and stable limits
in motivic zeta values, with independent finite-field brute-force checks.
"""

from .models import Specialization, UVPoly, XModel
from .motive import LaurentL, MotivicClass, TruncSeries
from .partitions import GenPartition, Part

__all__ = [
    "GenPartition",
    "LaurentL",
    "MotivicClass",
    "Part",
    "Specialization",
    "TruncSeries",
    "UVPoly",
    "XModel",
]

__version__ = "0.1.0"
