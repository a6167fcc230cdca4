"""Face lattice, f-vectors, 2-simplicity, vertex figures.

Faces are generated breadth-first downward from the facets: intersecting
a known face's vertex mask with a facet row and closing (all vertices
lying on every facet that contains the intersection) reaches every
nonempty face.  Rows are bit-packed, so n is capped at 32.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cube import Polytope
from .hull import IncidenceMatrix
from .ratlin import affine_rank


@dataclass(frozen=True)
class Face:
    """A closed face: vertex bitmask, facet bitmask, affine dimension."""

    vertex_set: int
    facet_set: int
    dim: int


def enumerate_faces(m: IncidenceMatrix, p: Polytope) -> list[Face]:
    """All nonempty proper faces plus the full polytope.

    Ordered by (dim, vertex_set); the full polytope comes last.
    """
    n = len(p.vertices)
    if n > 32:
        raise ValueError("face enumeration is limited to 32 vertices")
    if m.num_vertices != n:
        raise ValueError("incidence matrix does not match the polytope")
    rows = m.rows
    full = (1 << n) - 1
    seen: dict[int, int] = {}  # vertex mask -> facet mask
    queue = []
    for i, r in enumerate(rows):
        if r == 0:
            raise ValueError("empty facet row in incidence matrix")
        if r not in seen:
            seen[r] = _facet_set(rows, r)
            queue.append(r)
    head = 0
    while head < len(queue):
        cur = queue[head]
        head += 1
        for r in rows:
            inter = cur & r
            if inter == 0 or inter == cur:
                continue
            fs = _facet_set(rows, inter)
            cl = full
            for i, rr in enumerate(rows):
                if (fs >> i) & 1:
                    cl &= rr
            if cl not in seen:
                seen[cl] = fs
                queue.append(cl)
    faces = []
    for vmask, fmask in seen.items():
        verts = [p.vertices[j] for j in range(n) if (vmask >> j) & 1]
        faces.append(Face(vmask, fmask, affine_rank(verts, p.d)))
    faces.sort(key=lambda f: (f.dim, f.vertex_set))
    faces.append(Face(full, 0, affine_rank(p.vertices, p.d)))
    return faces


def _facet_set(rows, vmask: int) -> int:
    fs = 0
    for i, r in enumerate(rows):
        if (r & vmask) == vmask:
            fs |= 1 << i
    return fs


def f_vector(m: IncidenceMatrix, p: Polytope) -> tuple[int, ...]:
    """(f_0, ..., f_{d-1}) of a full-dimensional polytope."""
    d = p.d
    faces = enumerate_faces(m, p)
    if faces[-1].dim != d:
        raise ValueError("polytope is not full-dimensional")
    f = [0] * d
    for face in faces[:-1]:
        f[face.dim] += 1
    return tuple(f)


def is_2simple(faces: list[Face], d: int) -> bool:
    """True iff every (d-3)-face lies on exactly three facets."""
    if d < 3:
        raise ValueError("2-simplicity needs dimension at least 3")
    for face in faces:
        if face.dim == d - 3 and face.facet_set.bit_count() != 3:
            return False
    return True


def vertex_figure_incidence(faces: list[Face], v: int) -> IncidenceMatrix:
    """Atom-coatom incidences of the interval above vertex index v.

    Columns are the edges through v (sorted by vertex mask), rows are
    the facets through v (in facet order); a bit is set when the edge
    lies in the facet.
    """
    vbit = 1 << v
    vertex_faces = [f for f in faces if f.dim == 0]
    if not any(f.vertex_set == vbit for f in vertex_faces):
        raise ValueError(f"no vertex with index {v}")
    edges = sorted(f.vertex_set for f in faces if f.dim == 1 and f.vertex_set & vbit)
    coatoms = []  # facet indices through v, ascending
    for f in faces:
        if f.vertex_set == vbit:
            fs = f.facet_set
            i = 0
            while fs:
                if fs & 1:
                    coatoms.append(i)
                fs >>= 1
                i += 1
            break
    # facet index -> its vertex mask, recovered from any face listing
    facet_masks: dict[int, int] = {}
    for f in faces:
        if f.facet_set.bit_count() == 1:
            facet_masks[f.facet_set.bit_length() - 1] = f.vertex_set
    rows = []
    for ci in coatoms:
        fmask = facet_masks[ci]
        mask = 0
        for j, e in enumerate(edges):
            if (e & fmask) == e:
                mask |= 1 << j
        rows.append(mask)
    return IncidenceMatrix(len(coatoms), len(edges), tuple(rows))
