"""Exact facet enumeration for full-dimensional 0/1-polytopes.

V-to-H conversion by incremental beneath-beyond insertion with integer
hyperplane normals; adequate for the target sizes (d <= 8, n <= 24ish)
and free of floating-point tolerance questions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .cube import Polytope, decode_point
from .ratlin import affine_rank


@dataclass(frozen=True)
class FacetInequality:
    """A facet-defining inequality a . x <= b with integer coefficients.

    Coefficients are primitive (gcd of all |a_i| and |b| is 1) and
    oriented so every vertex satisfies the inequality.
    """

    a: tuple[int, ...]
    b: int

    def evaluate(self, value: int) -> int:
        d = len(self.a)
        coords = decode_point(value, d)
        return sum(self.a[i] * coords[i] for i in range(d)) - self.b


@dataclass(frozen=True)
class IncidenceMatrix:
    """Facet x vertex incidence; row bitmasks with bit j = vertex j."""

    num_facets: int
    num_vertices: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.num_facets:
            raise ValueError("row count does not match num_facets")
        limit = 1 << self.num_vertices
        for r in self.rows:
            if not 0 <= r < limit:
                raise ValueError("row mask wider than num_vertices")

    def bit(self, facet: int, vertex: int) -> int:
        return (self.rows[facet] >> vertex) & 1

    def column_mask(self, vertex: int) -> int:
        """Facet bitmask of one vertex (bit i = facet i contains it)."""
        m = 0
        for i, r in enumerate(self.rows):
            if (r >> vertex) & 1:
                m |= 1 << i
        return m


def facets(p: Polytope) -> list[FacetInequality]:
    """All facet-defining inequalities of conv(X), sorted by (a, b)."""
    if affine_rank(p.vertices, p.d) != p.d:
        raise ValueError("polytope is not full-dimensional")
    vals = np.asarray(p.vertices, dtype=np.int64)
    fa, fb, nf = _kernels._hull(vals, p.d)
    return [FacetInequality(tuple(int(c) for c in fa[i]), int(fb[i]))
            for i in range(nf)]


def incidence_matrix(p: Polytope, ineqs: list[FacetInequality]) -> IncidenceMatrix:
    """Bit (i, j) = 1 iff facet i is tight at vertex j."""
    rows = []
    for f in ineqs:
        mask = 0
        for j, v in enumerate(p.vertices):
            val = f.evaluate(v)
            if val > 0:
                raise ValueError(f"vertex {v} violates facet {f.a} <= {f.b}")
            if val == 0:
                mask |= 1 << j
        rows.append(mask)
    return IncidenceMatrix(len(ineqs), len(p.vertices), tuple(rows))
