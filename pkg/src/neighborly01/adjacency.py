"""Edge tests between 0/1-vertices and the incremental 2-neighborliness test.

Adjacency of two vertices reduces, after switching one of them to the
origin, to a cone-membership question over the generators dominated by
the other (coordinatewise AND), decided exactly by ratlin.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .cube import Polytope
from .ratlin import cone_member


def no_edge_0y(y_set: Sequence[int], y: int, d: int) -> bool:
    """True iff {0, y} is NOT an edge of conv(Y ∪ {0}).

    The origin is implicit: it need not be listed in Y.
    """
    if y not in y_set:
        raise ValueError(f"y={y} is not a member of Y")
    z = [v for v in y_set if v != y and (v & y) == v]
    return cone_member(z, y, d)


def is_edge(p: Polytope, u: int, v: int) -> bool:
    """True iff [u, v] is a 1-face of conv(X)."""
    if u == v:
        raise ValueError("is_edge needs two distinct vertices")
    if u not in p.vertices or v not in p.vertices:
        raise ValueError("both endpoints must be vertices of the polytope")
    switched = [x ^ u for x in p.vertices if x != u]
    return not no_edge_0y(switched, v ^ u, p.d)


def extend_is_2neighborly(p: Polytope, v: int) -> bool:
    """Given 2-neighborly conv(X), is conv(X ∪ {v}) still 2-neighborly?

    Part (a) tests every edge {v, x}; part (b) re-tests only the pairs
    {x, y} of X whose dominated-generator set can gain the new point,
    i.e. those with (v ^ x) AND (y ^ x) = v ^ x.
    """
    if v in p.vertices:
        raise ValueError(f"v={v} is already a vertex")
    d = p.d
    xs = p.vertices
    switched = [x ^ v for x in xs]
    for y in switched:
        if no_edge_0y(switched, y, d):
            return False
    for x in xs:
        w = v ^ x
        others = [y ^ x for y in xs if y != x]
        for y in others:
            if (w & y) == w:
                if no_edge_0y(others + [w], y, d):
                    return False
    return True


def is_2neighborly_bruteforce(p: Polytope) -> bool:
    """Oracle: test every unordered vertex pair, no incrementality."""
    for u, v in combinations(p.vertices, 2):
        if not is_edge(p, u, v):
            return False
    return True
