"""Multigraded Betti tables of edge rings.

The main route is the fiber-complex formula: beta_{j+1,s} equals the
reduced homology of the complex of edge subsets F with s - deg(F) still
in the degree semigroup. Candidate degrees come from the initial ideal
(upper-Koszul homology over its lcm lattice, a superset of the support by
semicontinuity); an exhaustive mode enumerates the whole semigroup up to
a degree bound instead. A Koszul-complex oracle built on standard
monomials of the Groebner basis recomputes any multidegree независимо.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field as dfield

from .binomials import (
    BinomialIdeal,
    TermOrder,
    initial_ideal,
    minimal_generators,
    mono_divides,
    toric_ideal,
)
from .complexes import SimplicialComplex, homology_dims
from .graphs import GraphError, SimpleGraph
from .linalg import DEFAULT_PRIME, rank

import numpy as np


# -- semigroup membership ----------------------------------------------


class SemigroupOracle:
    """Memoized membership test for the column semigroup of M_G."""

    def __init__(self, graph: SimpleGraph):
        self.graph = graph
        vpos = {v: i for i, v in enumerate(graph.vertices)}
        self.incident = {i: [] for i in range(graph.n_vertices)}
        for j, (a, b) in enumerate(graph.edges):
            ia, ib = vpos[a], vpos[b]
            self.incident[ia].append(ib)
            self.incident[ib].append(ia)
        self._memo = {}

    def member(self, t) -> bool:
        t = tuple(t)
        if any(x < 0 for x in t) or sum(t) % 2:
            return False
        return self._member(t)

    def _member(self, t) -> bool:
        cached = self._memo.get(t)
        if cached is not None:
            return cached
        i = next((k for k, x in enumerate(t) if x), None)
        if i is None:
            return True
        ok = False
        for o in self.incident[i]:
            if t[o] >= 1:
                t2 = list(t)
                t2[i] -= 1
                t2[o] -= 1
                if self._member(tuple(t2)):
                    ok = True
                    break
        self._memo[t] = ok
        return ok

    def clear(self):
        self._memo.clear()


def semigroup_member(graph: SimpleGraph, t) -> bool:
    """True iff t = M_G a for some nonnegative integer vector a."""
    return SemigroupOracle(graph).member(t)


# -- fiber complexes ----------------------------------------------------


@dataclass(frozen=True)
class FiberComplex:
    degree: tuple
    complex: SimplicialComplex


def _edge_degrees(graph: SimpleGraph) -> list:
    m = graph.incidence_matrix()
    return [tuple(int(x) for x in m[:, j]) for j in range(graph.n_edges)]


def fiber_faces(graph: SimpleGraph, s, oracle: SemigroupOracle | None = None):
    """All faces of the fiber complex at s, or None when s is outside Im.

    Faces are returned as ascending tuples of edge indices; the empty
    face is included, so this is the full augmented chain data.
    """
    oracle = oracle or SemigroupOracle(graph)
    s = tuple(s)
    if not oracle.member(s):
        return None
    cols = _edge_degrees(graph)
    n = graph.n_edges
    faces = [()]

    def extend(face, residual, start):
        for j in range(start, n):
            r2 = tuple(a - b for a, b in zip(residual, cols[j]))
            if min(r2) < 0 or not oracle.member(r2):
                continue
            f2 = face + (j,)
            faces.append(f2)
            extend(f2, r2, j + 1)

    extend((), s, 0)
    return faces


def fiber_complex(graph: SimpleGraph, s) -> FiberComplex:
    """The complex of edge sets F with s - deg(F) in the semigroup."""
    faces = fiber_faces(graph, s)
    if faces is None:
        return FiberComplex(tuple(s), SimplicialComplex.void(range(graph.n_edges)))
    return FiberComplex(
        tuple(s), SimplicialComplex(range(graph.n_edges), map(frozenset, faces))
    )


def _faces_by_dim(faces):
    by_dim = {}
    for f in faces:
        if f:
            by_dim.setdefault(len(f) - 1, []).append(f)
    if not by_dim:
        return []
    return [sorted(by_dim.get(k, [])) for k in range(max(by_dim) + 1)]


def _common_vertex(faces) -> bool:
    """True iff some edge index lies in every facet (complex is a cone)."""
    face_set = set(faces)
    universe = set()
    for f in faces:
        universe.update(f)
    for j in universe:
        if all((j in f) or (tuple(sorted(f + (j,))) in face_set) for f in faces):
            return True
    return False


# -- acyclicity shortcuts (degree-2 path patterns) -----------------------


def acyclicity_shortcut(graph: SimpleGraph, s) -> str | None:
    """Certify H~(fiber complex at s) = 0 from local path patterns.

    Two rules: a 2-path (a,c,b) with center degree 2 forces acyclicity
    when s[a] < s[c] or s[b] < s[c]; adjacent degree-2 vertices c,d on a
    3-path force it when s[c] != s[d]. No verdict returns None.
    """
    s = tuple(s)
    pos = {v: i for i, v in enumerate(graph.vertices)}
    deg2 = [v for v in graph.vertices if graph.degree(v) == 2]
    for c in deg2:
        a, b = sorted(graph.neighbors(c))
        if s[pos[a]] < s[pos[c]] or s[pos[b]] < s[pos[c]]:
            return "acyclic"
    for c in deg2:
        for d in graph.neighbors(c):
            if d <= c or graph.degree(d) != 2:
                continue
            a = next(x for x in graph.neighbors(c) if x != d)
            b = next(x for x in graph.neighbors(d) if x != c)
            if a != b and s[pos[c]] != s[pos[d]]:
                return "acyclic"
    return None


# -- Betti numbers of monomial quotients (candidate machinery) -----------


def minimal_monomials(monomials) -> list:
    out = []
    for m in sorted(set(monomials), key=lambda m: (sum(m), m)):
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return out


def lcm_lattice(gens) -> list:
    lattice = set(gens)
    frontier = set(gens)
    while frontier:
        fresh = set()
        for b in frontier:
            for g in gens:
                l = tuple(max(x, y) for x, y in zip(b, g))
                if l not in lattice:
                    fresh.add(l)
        lattice |= fresh
        frontier = fresh
    return sorted(lattice, key=lambda m: (sum(m), m))


def _nerve_faces(supports):
    """Faces of the nerve of a family of finite sets (downward closed)."""
    k = len(supports)
    faces = []

    def extend(face, inter, start):
        for j in range(start, k):
            inter2 = inter & supports[j] if face else supports[j]
            if inter2:
                f2 = face + (j,)
                faces.append(f2)
                extend(f2, inter2, j + 1)

    extend((), None, 0)
    return faces


def monomial_quotient_betti(gens, field: int | None = DEFAULT_PRIME) -> dict:
    """Multigraded Betti numbers {(i, b): dim} of K[E]/(monomial ideal).

    For each lcm-lattice degree b the upper-Koszul complex is a union of
    simplices (one per generator dividing b), so its homology is read off
    the nerve of that cover. beta_0 is the unit in degree zero.
    """
    gens = minimal_monomials(gens)
    if not gens:
        return {(0, ()): 1}
    zero = (0,) * len(gens[0])
    out = {(0, zero): 1}
    for b in lcm_lattice(gens):
        below = [g for g in gens if mono_divides(g, b)]
        supp = frozenset(j for j, x in enumerate(b) if x)
        supports = {
            supp - frozenset(j for j in supp if g[j] == b[j]) for g in below
        }
        supports.discard(frozenset())
        if not supports:
            out[(1, b)] = 1  # b is itself a minimal generator
            continue
        supports = [v for v in supports if not any(v < w for w in supports)]
        faces = _nerve_faces(supports)
        dims = homology_dims(_faces_by_dim(faces), field)
        for i, d in dims.items():
            if d and i >= 0:
                out[(i + 2, b)] = d
    return out


def monomial_quotient_totals(gens, field: int | None = DEFAULT_PRIME) -> tuple:
    betti = monomial_quotient_betti(gens, field)
    top = max(i for i, _ in betti)
    totals = [0] * (top + 1)
    for (i, _), d in betti.items():
        totals[i] += d
    return tuple(totals)


def candidate_degrees(
    graph: SimpleGraph,
    ideal: BinomialIdeal | None = None,
    field: int | None = DEFAULT_PRIME,
) -> set:
    """Vertex multidegrees that can carry a nonzero Betti number.

    Degrees of the initial ideal's Betti support, pushed through the
    incidence matrix (sound by upper semicontinuity under the Groebner
    degeneration), together with the minimal binomial generator degrees
    and zero.
    """
    ideal = ideal if ideal is not None else toric_ideal(graph)
    m = graph.incidence_matrix()
    zero = (0,) * graph.n_vertices
    cands = {zero}
    if ideal.is_zero():
        return cands
    leads = initial_ideal(ideal)
    for (i, b), d in monomial_quotient_betti(leads, field).items():
        if d and sum(b):
            cands.add(tuple(int(x) for x in m @ np.array(b, dtype=np.int64)))
    for g in minimal_generators(ideal):
        cands.add(tuple(int(x) for x in m @ np.array(g.plus, dtype=np.int64)))
    return cands


# -- the Betti table ------------------------------------------------------


@dataclass
class BettiTable:
    multigraded: dict  # (i, s) -> beta
    codim: int
    n_edges: int
    field_char: int | None = DEFAULT_PRIME
    mode: str = "guided"
    complete: bool = True
    meta: dict = dfield(default_factory=dict)

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.multigraded)

    @property
    def depth(self) -> int:
        return self.n_edges - self.pd

    @property
    def krull_dim(self) -> int:
        return self.n_edges - self.codim

    @property
    def cm(self) -> bool:
        return self.pd == self.codim

    @property
    def gorenstein(self) -> bool:
        return self.cm and self.total(self.pd) == 1

    def total(self, i: int) -> int:
        return sum(d for (k, _), d in self.multigraded.items() if k == i)

    @property
    def totals(self) -> tuple:
        return tuple(self.total(i) for i in range(self.pd + 1))

    @property
    def graded(self) -> dict:
        out = {}
        for (i, s), d in self.multigraded.items():
            j = sum(s) // 2
            out[(i, j)] = out.get((i, j), 0) + d
        return out

    def as_dict(self) -> dict:
        multi = {}
        for (i, s), d in sorted(self.multigraded.items()):
            multi.setdefault(str(i), []).append({"s": list(s), "beta": d})
        return {
            "totals": list(self.totals),
            "graded": {f"{i},{j}": v for (i, j), v in sorted(self.graded.items())},
            "multigraded": multi,
            "codim": self.codim,
            "pd": self.pd,
            "depth": self.depth,
            "krull_dim": self.krull_dim,
            "cm": self.cm,
            "gorenstein": self.gorenstein,
        }


def _semigroup_elements(graph: SimpleGraph, max_edge_degree: int) -> list:
    cols = _edge_degrees(graph)
    level = {(0,) * graph.n_vertices}
    seen = set(level)
    for _ in range(max_edge_degree):
        level = {
            tuple(a + b for a, b in zip(s, c)) for s in level for c in cols
        } - seen
        seen |= level
    return sorted(seen)


def betti_table(
    graph: SimpleGraph,
    field: int | None = DEFAULT_PRIME,
    mode: str = "guided",
    max_degree: int | None = None,
    use_shortcuts: bool = True,
    order: TermOrder | None = None,
) -> BettiTable:
    """Assemble the multigraded Betti table of the edge ring.

    mode="guided" visits only candidate degrees; mode="exhaustive" scans
    every semigroup element with at most ``max_degree`` edges and warns if
    that bound fails to cover the guided candidates.
    """
    if not graph.is_connected():
        raise GraphError("Betti table requires a connected graph")
    if mode not in ("guided", "exhaustive"):
        raise ValueError(f"unknown mode {mode!r}")
    ideal = toric_ideal(graph, order)
    cands = candidate_degrees(graph, ideal, field)
    complete = True
    if mode == "guided":
        degrees = sorted(cands)
    else:
        if max_degree is None:
            max_degree = max((sum(s) // 2 for s in cands), default=0)
        degrees = _semigroup_elements(graph, max_degree)
        needed = max((sum(s) // 2 for s in cands), default=0)
        if max_degree < needed:
            complete = False
            warnings.warn(
                f"exhaustive bound {max_degree} below candidate support {needed}",
                stacklevel=2,
            )
    zero = (0,) * graph.n_vertices
    multigraded = {(0, zero): 1}
    for s in degrees:
        if s == zero:
            continue
        if use_shortcuts and acyclicity_shortcut(graph, s):
            continue
        oracle = SemigroupOracle(graph)
        faces = fiber_faces(graph, s, oracle)
        if faces is None:
            continue
        if use_shortcuts and _common_vertex(faces):
            continue
        for j, d in homology_dims(_faces_by_dim(faces), field).items():
            if d and j >= 0:
                multigraded[(j + 1, s)] = d
    return BettiTable(
        multigraded,
        codim=graph.codim(),
        n_edges=graph.n_edges,
        field_char=field,
        mode=mode,
        complete=complete,
        meta={"ideal_gens": len(ideal.gens)},
    )


# -- Koszul oracle --------------------------------------------------------


def betti_via_koszul(
    graph: SimpleGraph,
    s,
    field: int | None = DEFAULT_PRIME,
    ideal: BinomialIdeal | None = None,
) -> list:
    """Multidegree-s Betti numbers from the Koszul complex on the edges.

    The graded pieces of the edge ring are spanned by standard monomials
    of the Groebner basis; the strand of the Koszul complex in degree s is
    assembled from them and its homology ranks are returned as a list
    indexed by homological degree.
    """
    ideal = ideal if ideal is not None else toric_ideal(graph)
    order = ideal.order
    basis_pairs = [g.oriented(order) for g in ideal.gens]
    leads = [p for p, _ in basis_pairs]
    cols = _edge_degrees(graph)
    n = graph.n_edges
    s = tuple(s)

    std_memo: dict = {}

    def std_monomial(t):
        """The standard monomial of multidegree t, or None."""
        t = tuple(t)
        if t in std_memo:
            return std_memo[t]
        if sum(t) % 2:
            std_memo[t] = None
            return None
        target = sum(t) // 2

        def search(j, residual, expo):
            if sum(expo) == target:
                if any(x for x in residual):
                    return None
                return tuple(expo)
            if j == n:
                return None
            cap = min(
                (residual[i] for i, c in enumerate(cols[j]) if c),
                default=0,
            )
            for e in range(cap, -1, -1):
                expo[j] = e
                if e and any(mono_divides(l, expo_t := tuple(expo)) for l in leads):
                    continue
                r2 = tuple(
                    x - e * c for x, c in zip(residual, cols[j])
                )
                if min(r2) < 0:
                    continue
                got = search(j + 1, r2, expo)
                if got is not None:
                    return got
            expo[j] = 0
            return None

        got = search(0, t, [0] * n)
        std_memo[t] = got
        return got

    def reduce_mono(m):
        changed = True
        while changed:
            changed = False
            for lead, trail in basis_pairs:
                if mono_divides(lead, m):
                    m = tuple(a - b + c for a, b, c in zip(m, lead, trail))
                    changed = True
        return m

    # strand basis: subsets F with a standard monomial at s - deg(F)
    strand = {0: [()]} if std_monomial(s) is not None else {}

    def extend(face, residual, start):
        for j in range(start, n):
            r2 = tuple(a - b for a, b in zip(residual, cols[j]))
            if min(r2) < 0 or std_monomial(r2) is None:
                continue
            f2 = face + (j,)
            strand.setdefault(len(f2), []).append(f2)
            extend(f2, r2, j + 1)

    if strand:
        extend((), s, 0)
    if not strand:
        return []
    top = max(strand)
    index = {i: {f: k for k, f in enumerate(sorted(strand[i]))} for i in strand}

    def boundary_rank(i):
        cols_i = sorted(strand.get(i, []))
        rows = index.get(i - 1, {})
        if not cols_i or (i > 0 and not rows):
            return 0
        if i == 0:
            return 0
        mat = np.zeros((len(rows), len(cols_i)), dtype=np.int64)
        for cj, f in enumerate(cols_i):
            res_f = tuple(
                a - sum(cols[j][k] for j in f) for k, a in enumerate(s)
            )
            m_f = std_monomial(res_f)
            for t, j in enumerate(f):
                sub = f[:t] + f[t + 1 :]
                prod = list(m_f)
                prod[j] += 1
                nf = reduce_mono(tuple(prod))
                expected = std_monomial(
                    tuple(a + c for a, c in zip(res_f, cols[j]))
                )
                if nf != expected:
                    raise AssertionError("normal form disagrees with strand basis")
                mat[rows[sub], cj] = 1 if t % 2 == 0 else -1
        return rank(mat, field)

    ranks = [boundary_rank(i) for i in range(top + 2)]
    out = []
    for i in range(top + 1):
        dim_i = len(strand.get(i, []))
        out.append(dim_i - ranks[i] - ranks[i + 1])
    while out and out[-1] == 0:
        out.pop()
    return out
