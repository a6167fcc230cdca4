"""Enumeration and classification of 2-neighborly 0/1-polytopes.

The library enumerates all 0/1-polytopes of a given dimension in which
every pair of vertices forms an edge, one vertex count at a time, up to
the symmetries of the cube (coordinate permutations and switchings).
Classes are classified further into combinatorial types via canonical
facet-vertex incidence certificates and f-vectors, all in exact
arithmetic.
"""

from .cube import (
    CubeSymmetry,
    Polytope,
    apply_symmetry,
    decode_point,
    encode_point,
    hamming,
    lex_compare,
    random_symmetry,
)

__all__ = [
    "CubeSymmetry",
    "Polytope",
    "apply_symmetry",
    "decode_point",
    "encode_point",
    "hamming",
    "lex_compare",
    "random_symmetry",
]

__version__ = "0.1.0"
