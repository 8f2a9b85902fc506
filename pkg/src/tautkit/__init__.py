"""Exact Hurwitz numbers, psi/Hodge intersections, kappa identities, stable
dual graphs and the r_l operator."""

from .errors import (
    DegreeBoundsError,
    InsufficientSamplesError,
    ResourceCapError,
    TautkitError,
    UnsupportedDecorationError,
)
from .exact import Partition, bernoulli, double_factorial, euler_char_mg, euler_char_mgn
from .hurwitz import hurwitz_bruteforce, hurwitz_genus0
from .intersections import CorrelatorKey, witten_correlator

__version__ = "0.1.0"

__all__ = [
    "CorrelatorKey",
    "DegreeBoundsError",
    "InsufficientSamplesError",
    "Partition",
    "ResourceCapError",
    "TautkitError",
    "UnsupportedDecorationError",
    "bernoulli",
    "double_factorial",
    "euler_char_mg",
    "euler_char_mgn",
    "hurwitz_bruteforce",
    "hurwitz_genus0",
    "witten_correlator",
]
