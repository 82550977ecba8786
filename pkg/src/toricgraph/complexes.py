"""Simplicial complexes over small ground sets, and exact reduced homology.

A complex is stored by its facet antichain; the void complex (no faces at
all) and the complex {()} holding only the empty face are distinct. Ranks
of the boundary matrices run over GF(p) by default, or over Q exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .linalg import DEFAULT_PRIME, rank


class SimplicialComplex:
    """Facet-presented complex; downward closure is implied."""

    __slots__ = ("ground", "facets", "_faces")

    def __init__(self, ground, facets):
        self.ground = frozenset(ground)
        norm = {frozenset(f) for f in facets}
        for f in norm:
            if not f <= self.ground:
                raise ValueError("facet outside the ground set")
        self.facets = tuple(
            sorted(
                (f for f in norm if not any(f < g for g in norm)),
                key=lambda f: (len(f), sorted(f)),
            )
        )
        self._faces = None

    @classmethod
    def void(cls, ground=()) -> "SimplicialComplex":
        return cls(ground, [])

    @classmethod
    def empty_face_only(cls, ground=()) -> "SimplicialComplex":
        return cls(ground, [frozenset()])

    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        if self.is_void():
            raise ValueError("the void complex has no dimension")
        return max(len(f) for f in self.facets) - 1

    def faces(self) -> frozenset[frozenset]:
        """All faces, the empty face included (for a nonvoid complex)."""
        if self._faces is None:
            out = set()
            for f in self.facets:
                fl = sorted(f)
                for k in range(len(fl) + 1):
                    out.update(frozenset(c) for c in combinations(fl, k))
            self._faces = frozenset(out)
        return self._faces

    def cone_apex(self):
        """A vertex lying in every facet, if any (cones are acyclic)."""
        if self.is_void() or not self.facets[0]:
            return None
        common = set(self.facets[0])
        for f in self.facets[1:]:
            common &= f
            if not common:
                return None
        return min(common) if common else None

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.ground == other.ground
            and set(self.facets) == set(other.facets)
        )

    def __hash__(self):
        return hash((self.ground, frozenset(self.facets)))

    def __repr__(self):
        shown = [sorted(f) for f in self.facets]
        return f"SimplicialComplex(facets={shown})"


def cone(apex_set, cx: SimplicialComplex) -> SimplicialComplex:
    """Join with a nonempty set A: facets A | F; over the void complex, the A-simplex."""
    apex = frozenset(apex_set)
    if not apex:
        raise ValueError("cone apex set must be nonempty")
    ground = cx.ground | apex
    if cx.is_void():
        return SimplicialComplex(ground, [apex])
    return SimplicialComplex(ground, [apex | f for f in cx.facets])


def union(c1: SimplicialComplex, c2: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex(c1.ground | c2.ground, c1.facets + c2.facets)


def intersection(c1: SimplicialComplex, c2: SimplicialComplex) -> SimplicialComplex:
    if c1.is_void() or c2.is_void():
        return SimplicialComplex.void(c1.ground | c2.ground)
    faces1 = c1.faces()
    common = [f for f in c2.faces() if f in faces1]
    return SimplicialComplex(c1.ground | c2.ground, common)


@dataclass(frozen=True)
class HomologyProfile:
    """dim_K of each reduced homology group, indexed from -1 upward."""

    dims: dict = field(default_factory=dict)
    field_char: int | None = DEFAULT_PRIME

    def __getitem__(self, i: int) -> int:
        return self.dims.get(i, 0)

    def is_trivial(self) -> bool:
        return not any(self.dims.values())

    def support(self):
        return sorted(i for i, d in self.dims.items() if d)


def homology_dims(faces_by_dim, field: int | None = DEFAULT_PRIME) -> dict:
    """Reduced homology dims from explicit face lists.

    ``faces_by_dim[k]`` lists the k-dimensional faces as sorted tuples,
    k = 0 .. top; the empty face is implicit. Returns {i: dim} with zero
    entries omitted.
    """
    if not faces_by_dim or not faces_by_dim[0]:
        # only the empty face
        return {-1: 1}
    top = len(faces_by_dim) - 1
    index = [{f: i for i, f in enumerate(level)} for level in faces_by_dim]

    def boundary_rank(k: int) -> int:
        # rank of d_k : C_k -> C_{k-1}
        cols = faces_by_dim[k]
        if k == 0:
            return 1 if cols else 0  # augmentation to the empty face
        rows = index[k - 1]
        mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
        for j, f in enumerate(cols):
            for t in range(len(f)):
                sub = f[:t] + f[t + 1 :]
                mat[rows[sub], j] = 1 if t % 2 == 0 else -1
        return rank(mat, field)

    ranks = [boundary_rank(k) for k in range(top + 1)] + [0]
    dims = {}
    h_minus1 = 1 - ranks[0]
    if h_minus1:
        dims[-1] = h_minus1
    for k in range(top + 1):
        h = len(faces_by_dim[k]) - ranks[k] - ranks[k + 1]
        if h:
            dims[k] = h
    return dims


def reduced_homology(cx: SimplicialComplex, field: int | None = DEFAULT_PRIME) -> HomologyProfile:
    """Reduced homology profile; the void complex is trivial in all degrees.

    Always computed from boundary ranks -- the cone shortcut is left to
    callers (``cone_apex``) so that acyclicity stays independently testable.
    """
    if cx.is_void():
        return HomologyProfile({}, field)
    by_dim = {}
    for f in cx.faces():
        if f:
            by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    if not by_dim:
        return HomologyProfile({-1: 1}, field)
    top = max(by_dim)
    faces_by_dim = [sorted(by_dim.get(k, [])) for k in range(top + 1)]
    return HomologyProfile(homology_dims(faces_by_dim, field), field)
