"""Lexicographically minimal class representatives under cube symmetry.

The minimum is found by branch and bound: the smallest member of a class
always contains the origin, so the switch mask is pinned to one of the
vertices, and the search branches over which source coordinate feeds
each target position, most significant first.  Partial assignments are
pruned against the incumbent through a sorted-prefix lower bound.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .cube import Polytope

DEFAULT_BUDGET = 1 << 27


def representative(p: Polytope, budget: int = DEFAULT_BUDGET) -> Polytope:
    """The lex-least polytope equivalent to p under cube symmetries."""
    vals = np.asarray(p.vertices, dtype=np.int64)
    best = _kernels._representative(vals, p.d, budget)
    return Polytope(p.d, tuple(int(v) for v in best))


def is_representative(p: Polytope, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff p is already the minimal member of its class."""
    return representative(p, budget).vertices == p.vertices
