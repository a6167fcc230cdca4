"""Combinatorial types of d-polytopes with d+2 vertices via Gale tuples.

Such types correspond to triples (m0, {m1, m_minus1}) with m0 >= 0,
both m1 and m_minus1 at least 2 and total d+2; the polytope is
2-neighborly exactly when both m1 and m_minus1 are at least 3.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class GaleTuple:
    m0: int
    m1: int
    m_minus1: int

    def __post_init__(self):
        if self.m0 < 0 or self.m1 < 2 or self.m_minus1 < 2:
            raise ValueError("invalid Gale tuple")
        if self.m1 > self.m_minus1:
            raise ValueError("canonical order requires m1 <= m_minus1")

    @property
    def is_2neighborly(self) -> bool:
        return self.m1 >= 3


def enumerate_d_plus_2(d: int) -> list[GaleTuple]:
    """All tuples for dimension d, sorted by (m0, m1)."""
    if d < 2:
        raise ValueError("dimension must be at least 2")
    out = []
    for m0 in range(0, d - 1):
        rest = d + 2 - m0
        for m1 in range(2, rest // 2 + 1):
            out.append(GaleTuple(m0, m1, rest - m1))
    return out


def count_2neighborly_d_plus_2(d: int) -> int:
    return sum(1 for t in enumerate_d_plus_2(d) if t.is_2neighborly)
