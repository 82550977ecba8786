"""Primitive even closed walks and их binomials.

The enumeration is a depth-first search over edge sequences: each edge is
used at most twice and, in a walk that can still be primitive, always at
positions of one parity (a split-parity edge gives the two monomials of
f_w a common factor, and binomials with a common factor are never
primitive). Duplicates are removed by a cyclic canonical form and
non-primitive walks by pairwise divisibility.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binomials import Binomial
from .graphs import ContractionResult, SimpleGraph, Walk


class WalkError(ValueError):
    pass


@dataclass(frozen=True)
class ClosedEvenWalk:
    """Closed walk of even length, stored as its vertex cycle x0..x2k=x0."""

    graph: SimpleGraph
    vertices: tuple

    def __post_init__(self):
        vs = self.vertices
        if len(vs) < 3 or vs[0] != vs[-1]:
            raise WalkError("not a closed walk")
        if (len(vs) - 1) % 2:
            raise WalkError("walk length must be even")
        for a, b in zip(vs, vs[1:]):
            if b not in self.graph.neighbors(a):
                raise WalkError(f"({a},{b}) is not an edge")

    def __len__(self) -> int:
        return len(self.vertices) - 1

    @property
    def edge_ids(self) -> tuple:
        g = self.graph
        return tuple(g.edge_index(p) for p in zip(self.vertices, self.vertices[1:]))

    def exponents(self) -> tuple[tuple, tuple]:
        """Exponent vectors (odd positions, even positions) over the edges."""
        n = self.graph.n_edges
        plus = [0] * n
        minus = [0] * n
        for pos, eid in enumerate(self.edge_ids, start=1):
            (plus if pos % 2 else minus)[eid] += 1
        return tuple(plus), tuple(minus)

    def canonical_vertices(self) -> tuple:
        return _canonical_cycle(self.vertices)

    def __eq__(self, other):
        return (
            isinstance(other, ClosedEvenWalk)
            and self.graph == other.graph
            and self.canonical_vertices() == other.canonical_vertices()
        )

    def __hash__(self):
        return hash(self.canonical_vertices())


def _canonical_cycle(closed_vertices) -> tuple:
    cyc = tuple(closed_vertices[:-1])
    k = len(cyc)
    best = None
    for seq in (cyc, cyc[::-1]):
        for r in range(k):
            cand = seq[r:] + seq[:r]
            if best is None or cand < best:
                best = cand
    return best + (best[0],)


def _all_pairs_dist(graph: SimpleGraph) -> dict:
    dist = {}
    for s in graph.vertices:
        d = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for v in frontier:
                for u in graph.neighbors(v):
                    if u not in d:
                        d[u] = d[v] + 1
                        nxt.append(u)
            frontier = nxt
        dist[s] = d
    return dist


def enumerate_closed_even_walks(graph: SimpleGraph, max_len: int | None = None) -> list:
    """All parity-consistent closed even walks using each edge at most twice.

    The result is deduplicated up to rotation and reflection and contains
    every primitive walk of the graph (the parity restriction only drops
    walks whose binomial has a common monomial factor).
    """
    n = graph.n_edges
    if max_len is None:
        max_len = 2 * n
    adj = {
        v: sorted((graph.edge_index((v, u)), u) for u in graph.neighbors(v))
        for v in graph.vertices
    }
    dist = _all_pairs_dist(graph)
    found = set()

    usage = [0] * n
    parity = [0] * n

    def dfs(start, e0, cur, length, seq):
        if cur == start and length % 2 == 0 and length >= 4:
            found.add(_canonical_cycle(tuple(seq)))
        if length >= max_len:
            return
        pos_par = (length + 1) % 2
        reach = dist[start]
        for eid, nxt in adj[cur]:
            if eid < e0 or usage[eid] == 2:
                continue
            if usage[eid] == 1 and parity[eid] != pos_par:
                continue
            if length + 1 + reach.get(nxt, max_len) > max_len:
                continue
            usage[eid] += 1
            if usage[eid] == 1:
                parity[eid] = pos_par
            seq.append(nxt)
            dfs(start, e0, nxt, length + 1, seq)
            seq.pop()
            usage[eid] -= 1

    for e0, (a, b) in enumerate(graph.edges):
        for s, t in ((a, b), (b, a)):
            usage[e0] = 1
            parity[e0] = 1
            dfs(s, e0, t, 1, [s, t])
            usage[e0] = 0

    walks = [ClosedEvenWalk(graph, vs) for vs in found]
    walks.sort(key=lambda w: (len(w), w.canonical_vertices()))
    return walks


def _divides_pair(v_plus, v_minus, w_plus, w_minus) -> bool:
    return all(a <= b for a, b in zip(v_plus, w_plus)) and all(
        a <= b for a, b in zip(v_minus, w_minus)
    )


def is_primitive(walk: ClosedEvenWalk, all_walks) -> bool:
    """No walk with a strictly smaller binomial divides both monomials.

    Divisibility is tested on the exponent pairs (in both orientations);
    walks presenting the same binomial do not disqualify each other.
    """
    wp, wm = walk.exponents()
    for other in all_walks:
        vp, vm = other.exponents()
        if vp == vm:  # zero binomial carries no divisibility information
            continue
        if (vp, vm) != (wp, wm) and _divides_pair(vp, vm, wp, wm):
            return False
        if (vm, vp) != (wp, wm) and _divides_pair(vm, vp, wp, wm):
            return False
    return True


def enumerate_primitive_walks(graph: SimpleGraph) -> list:
    """Primitive even closed walks, one representative per binomial."""
    walks = enumerate_closed_even_walks(graph)
    out = []
    seen = set()
    for w in walks:
        if not is_primitive(w, walks):
            continue
        plus, minus = w.exponents()
        key = min((plus, minus), (minus, plus))
        if key not in seen:
            seen.add(key)
            out.append(w)
    return out


def walk_binomial(walk: ClosedEvenWalk) -> Binomial:
    """f_w = e_{w+} - e_{w-}; checked to lie in the kernel of the edge map."""
    plus, minus = walk.exponents()
    if sum(plus) != sum(minus):
        raise WalkError("odd/even degree mismatch")
    if plus == minus:
        raise WalkError("walk binomial is zero")
    m = walk.graph.incidence_matrix()
    diff = [p - q for p, q in zip(plus, minus)]
    if any(sum(m[i, j] * diff[j] for j in range(len(diff))) for i in range(m.shape[0])):
        raise WalkError("binomial escapes the toric kernel")
    return Binomial(plus, minus)


def primitive_walk_binomials(graph: SimpleGraph) -> list:
    return [walk_binomial(w) for w in enumerate_primitive_walks(graph)]


# -- behaviour under path contraction -----------------------------------


def contract_walk_image(
    walk: ClosedEvenWalk, path: Walk, contraction: ContractionResult
) -> ClosedEvenWalk | None:
    """The image w/p of a walk under an even path contraction.

    Returns None when the image degenerates (length 0 or 2, zero
    binomial); raises WalkError if the image fails to be an even closed
    walk, which cannot happen for a primitive walk.
    """
    pv = path.vertices
    pvr = pv[::-1]
    pset = set(pv)
    span = len(pv)
    y = contraction.new_vertex
    chi = contraction.vertex_map

    cyc = list(walk.vertices[:-1])
    k = len(cyc)
    rot = next((i for i, v in enumerate(cyc) if v not in pset), None)
    if rot is None:
        return None  # walk lives inside the contracted path
    cyc = cyc[rot:] + cyc[:rot]

    image = []
    i = 0
    while i < k:
        v = cyc[i]
        if v not in pset:
            image.append(chi[v])
            i += 1
            continue
        run = tuple(cyc[i : i + span])
        if len(run) == span and (run == pv or run == pvr):
            image.append(y)
            i += span
        elif v == pv[0] or v == pv[-1]:
            image.append(y)
            i += 1
        else:
            raise WalkError("walk enters the path interior without traversing it")
    cleaned = [image[0]]
    for v in image[1:]:
        if v != cleaned[-1]:
            cleaned.append(v)
    while len(cleaned) > 1 and cleaned[-1] == cleaned[0]:
        cleaned.pop()
    if len(cleaned) <= 2:
        return None
    if len(cleaned) % 2:
        raise WalkError("contracted image has odd length")
    return ClosedEvenWalk(contraction.graph, tuple(cleaned) + (cleaned[0],))


def lift_walk(
    image: ClosedEvenWalk, path: Walk, contraction: ContractionResult, graph: SimpleGraph
) -> ClosedEvenWalk:
    """A walk w of the original graph with w/p equal to the given image.

    Constructive inverse of ``contract_walk_image``: every visit of the
    new vertex is replaced by an endpoint of the path or by a full
    traversal, backtracking over the finitely many consistent choices.
    """
    y = contraction.new_vertex
    pv = path.vertices
    x0, x1 = pv[0], pv[-1]
    n0 = graph.neighbors(x0)
    n1 = graph.neighbors(x1)

    cyc = list(image.vertices[:-1])
    if all(v == y for v in cyc):
        raise WalkError("image cycle cannot consist of the new vertex alone")
    while cyc[0] == y:
        cyc = cyc[1:] + cyc[:1]

    spots = [i for i, v in enumerate(cyc) if v == y]
    options = []
    for i in spots:
        a = cyc[i - 1]
        b = cyc[(i + 1) % len(cyc)]
        here = []
        if a in n0 and b in n0:
            here.append((x0,))
        if a in n1 and b in n1:
            here.append((x1,))
        if a in n0 and b in n1:
            here.append(pv)
        if a in n1 and b in n0:
            here.append(pv[::-1])
        if not here:
            raise WalkError("image vertex has no valid lift")
        options.append(here)

    def assemble(choice):
        out = []
        it = iter(choice)
        for v in cyc:
            out.extend(next(it) if v == y else (v,))
        return tuple(out) + (out[0],)

    def product(opts):
        if not opts:
            yield ()
            return
        for head in opts[0]:
            for rest in product(opts[1:]):
                yield (head,) + rest

    for choice in product(options):
        vs = assemble(choice)
        if (len(vs) - 1) % 2:
            continue
        try:
            lifted = ClosedEvenWalk(graph, vs)
        except WalkError:
            continue
        back = contract_walk_image(lifted, path, contraction)
        if back is not None and back.canonical_vertices() == image.canonical_vertices():
            return lifted
    raise WalkError("no lift found")
