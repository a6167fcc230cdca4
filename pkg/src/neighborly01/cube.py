"""Core 0/1-cube objects: points, polytopes, cube symmetries, lex order.

A point of the d-cube is stored as a plain unsigned integer whose d bits
are the coordinates, most significant bit first: the coordinate vector
read left to right is the binary numeral of the value.  A polytope is the
strictly increasing sequence of its vertex values together with d.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_DIM = 16


def encode_point(coords: Sequence[int], d: int | None = None) -> int:
    """Pack a 0/1 coordinate vector into its point value (x1 = MSB)."""
    if d is None:
        d = len(coords)
    if len(coords) != d:
        raise ValueError(f"expected {d} coordinates, got {len(coords)}")
    value = 0
    for c in coords:
        if c not in (0, 1):
            raise ValueError(f"coordinate {c!r} is not 0 or 1")
        value = (value << 1) | c
    return value


def decode_point(value: int, d: int) -> tuple[int, ...]:
    """Inverse of encode_point: value -> coordinate tuple of length d."""
    if not 0 <= value < (1 << d):
        raise ValueError(f"value {value} out of range for d={d}")
    return tuple((value >> (d - 1 - i)) & 1 for i in range(d))


def hamming(a: int, b: int) -> int:
    return (a ^ b).bit_count()


@dataclass(frozen=True)
class Polytope:
    """A 0/1-polytope given by its vertex candidate set.

    `vertices` is strictly increasing, nonempty, each value < 2^d.
    """

    d: int
    vertices: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.d <= MAX_DIM:
            raise ValueError(f"dimension {self.d} out of range 1..{MAX_DIM}")
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise ValueError("polytope needs at least one vertex")
        limit = 1 << self.d
        prev = -1
        for v in self.vertices:
            if not 0 <= v < limit:
                raise ValueError(f"vertex {v} out of range for d={self.d}")
            if v <= prev:
                raise ValueError("vertices must be strictly increasing")
            prev = v

    @classmethod
    def from_values(cls, d: int, values: Iterable[int]) -> "Polytope":
        """Build from unsorted, possibly duplicated values."""
        return cls(d, tuple(sorted(set(values))))

    @classmethod
    def from_coords(cls, rows: Sequence[Sequence[int]]) -> "Polytope":
        d = len(rows[0])
        return cls.from_values(d, (encode_point(r, d) for r in rows))

    def coords(self) -> list[tuple[int, ...]]:
        return [decode_point(v, self.d) for v in self.vertices]

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, value: int) -> bool:
        return value in self.vertices


@dataclass(frozen=True)
class CubeSymmetry:
    """A symmetry of the 0/1-cube: switch (XOR mask) then permute coordinates.

    `perm[i]` is the 0-based target position of source coordinate i, so a
    point x maps to y with y[perm[i]] = (x ^ switch)[i].
    """

    perm: tuple[int, ...]
    switch: int

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        d = len(self.perm)
        if sorted(self.perm) != list(range(d)):
            raise ValueError(f"perm {self.perm} is not a permutation of 0..{d - 1}")
        if not 0 <= self.switch < (1 << d):
            raise ValueError("switch mask out of range")

    @property
    def d(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, d: int) -> "CubeSymmetry":
        return cls(tuple(range(d)), 0)

    def apply_point(self, value: int) -> int:
        d = self.d
        t = value ^ self.switch
        out = 0
        for i in range(d):
            if (t >> (d - 1 - i)) & 1:
                out |= 1 << (d - 1 - self.perm[i])
        return out

    def inverse(self) -> "CubeSymmetry":
        # apply = permute(x ^ s), hence inverse = permute_inv(y) ^ s
        #       = permute_inv(y ^ permute(s))
        d = self.d
        inv = [0] * d
        for i, p in enumerate(self.perm):
            inv[p] = i
        switched = CubeSymmetry(self.perm, 0).apply_point(self.switch)
        return CubeSymmetry(tuple(inv), switched)

    def compose(self, other: "CubeSymmetry") -> "CubeSymmetry":
        """Symmetry applying `other` first, then self."""
        if self.d != other.d:
            raise ValueError("dimension mismatch")
        d = self.d
        perm = tuple(self.perm[other.perm[i]] for i in range(d))
        # self(other(x)) = (perm_s . perm_o)(x ^ s_o ^ perm_o^-1(s_s))
        unpermute = CubeSymmetry(other.perm, 0).inverse()
        switch = other.switch ^ unpermute.apply_point(self.switch)
        return CubeSymmetry(perm, switch)


def random_symmetry(d: int, rng: random.Random) -> CubeSymmetry:
    perm = list(range(d))
    rng.shuffle(perm)
    return CubeSymmetry(tuple(perm), rng.randrange(1 << d))


def apply_symmetry(p: Polytope, g: CubeSymmetry) -> Polytope:
    """Image of a polytope under a cube symmetry, re-sorted."""
    if g.d != p.d:
        raise ValueError(f"dimension mismatch: polytope d={p.d}, symmetry d={g.d}")
    return Polytope(p.d, tuple(sorted(g.apply_point(v) for v in p.vertices)))


def lex_compare(p: Polytope, q: Polytope) -> int:
    """-1/0/1 comparison of the sorted value sequences, shorter prefix first."""
    if p.d != q.d:
        raise ValueError("dimension mismatch")
    if p.vertices < q.vertices:
        return -1
    if p.vertices > q.vertices:
        return 1
    return 0
