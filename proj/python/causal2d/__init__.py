"""Exact causal automorphisms of 1+1 Minkowski space and the Einstein cylinder.

Rationals are exchanged as ``fractions.Fraction``; ints and ``"p/q"`` strings
are accepted wherever a rational is expected.
"""

from ._core import *  # noqa: F401,F403
from ._core import Causal2dError

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
