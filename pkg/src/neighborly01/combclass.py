"""Canonical certificates of incidence matrices under row/column permutations.

Two facet-vertex incidence matrices describe combinatorially equivalent
polytopes exactly when one arises from the other by permuting rows and
columns.  The certificate fixes the row permutation by sorting rows as
integers and minimizes over column permutations with the same branch
and bound used for class representatives, so equal certificates are
equivalent to row/column-permutation equality.
"""

from __future__ import annotations

import struct

import numpy as np

from . import _kernels
from .canon import DEFAULT_BUDGET
from .hull import IncidenceMatrix

Certificate = bytes


def canonical_rows(m: IncidenceMatrix, budget: int = DEFAULT_BUDGET) -> tuple[int, ...]:
    """Canonical row values (column j packed into bit n-1-j), ascending."""
    if m.num_facets == 0 or m.num_vertices == 0:
        raise ValueError("empty incidence matrix")
    n = m.num_vertices
    rows = np.empty(m.num_facets, dtype=np.int64)
    for i, r in enumerate(m.rows):
        v = 0
        for j in range(n):
            if (r >> j) & 1:
                v |= 1 << (n - 1 - j)
        rows[i] = v
    rows.sort()
    best = rows.copy()
    _kernels._colperm_min(rows, n, best, budget)
    return tuple(int(v) for v in best)


def canonical_incidence(m: IncidenceMatrix, budget: int = DEFAULT_BUDGET) -> Certificate:
    """Packed certificate: k, n (little-endian u16) then canonical rows.

    Each row occupies ceil(n/8) bytes, most significant bit first.
    """
    return pack_certificate(canonical_rows(m, budget), m.num_facets, m.num_vertices)


def pack_certificate(rows: tuple[int, ...], k: int, n: int) -> Certificate:
    width = (n + 7) // 8
    parts = [struct.pack("<HH", k, n)]
    for v in rows:
        parts.append(int(v << (width * 8 - n)).to_bytes(width, "big"))
    return b"".join(parts)


def same_combinatorial_type(m1: IncidenceMatrix, m2: IncidenceMatrix) -> bool:
    if (m1.num_facets, m1.num_vertices) != (m2.num_facets, m2.num_vertices):
        return False
    return canonical_incidence(m1) == canonical_incidence(m2)
