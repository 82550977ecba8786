"""Simple graphs, walks/paths, and the contraction surgeries.

Vertices are positive integers; edges are unordered pairs kept in a
canonical sorted order so that every downstream object (incidence matrix,
monomials, complexes) indexes edges deterministically. All values are
immutable after construction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np


class GraphError(ValueError):
    pass


def _norm_edge(e) -> tuple[int, int]:
    a, b = e
    if a == b:
        raise GraphError(f"loop at vertex {a}")
    return (a, b) if a < b else (b, a)


class SimpleGraph:
    """Finite simple graph with canonically ordered vertex and edge sets."""

    __slots__ = ("vertices", "edges", "_adj", "_edge_index")

    def __init__(self, vertices, edges):
        vs = sorted(set(int(v) for v in vertices))
        if vs and vs[0] <= 0:
            raise GraphError("vertex ids must be positive integers")
        es = sorted(set(_norm_edge(e) for e in edges))
        vset = set(vs)
        for a, b in es:
            if a not in vset or b not in vset:
                raise GraphError(f"edge ({a},{b}) uses an undeclared vertex")
        self.vertices = tuple(vs)
        self.edges = tuple(es)
        adj = {v: set() for v in vs}
        for a, b in es:
            adj[a].add(b)
            adj[b].add(a)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._edge_index = {e: i for i, e in enumerate(es)}

    # -- basic queries ------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, x: int) -> frozenset[int]:
        if x not in self._adj:
            raise GraphError(f"unknown vertex {x}")
        return self._adj[x]

    def degree(self, x: int) -> int:
        return len(self.neighbors(x))

    def has_edge(self, e) -> bool:
        return _norm_edge(e) in self._edge_index

    def edge_index(self, e) -> int:
        return self._edge_index[_norm_edge(e)]

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for u in self._adj[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n_vertices

    def is_bipartite(self) -> bool:
        color = {}
        for start in self.vertices:
            if start in color:
                continue
            color[start] = 0
            queue = [start]
            while queue:
                v = queue.pop()
                for u in self._adj[v]:
                    if u not in color:
                        color[u] = 1 - color[v]
                        queue.append(u)
                    elif color[u] == color[v]:
                        return False
        return True

    def codim(self) -> int:
        """Codimension of the edge ring: |E|-|V|, plus one if bipartite."""
        if not self.is_connected():
            raise GraphError("codim requires a connected graph")
        base = self.n_edges - self.n_vertices
        return base + 1 if self.is_bipartite() else base

    def incidence_matrix(self) -> np.ndarray:
        """0/1 vertex-by-edge matrix; every column sums to 2."""
        vpos = {v: i for i, v in enumerate(self.vertices)}
        m = np.zeros((self.n_vertices, self.n_edges), dtype=np.int64)
        for j, (a, b) in enumerate(self.edges):
            m[vpos[a], j] = 1
            m[vpos[b], j] = 1
        return m

    # -- housekeeping -------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, SimpleGraph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"SimpleGraph({self.n_vertices} vertices, {self.n_edges} edges)"


class Walk:
    """Sequence of pairwise-adjacent vertices in a host graph."""

    __slots__ = ("graph", "vertices")

    def __init__(self, graph: SimpleGraph, vertices):
        vs = tuple(int(v) for v in vertices)
        if len(vs) < 1:
            raise GraphError("a walk needs at least one vertex")
        for a, b in zip(vs, vs[1:]):
            if b not in graph.neighbors(a):
                raise GraphError(f"({a},{b}) is not an edge of the host graph")
        self.graph = graph
        self.vertices = vs

    def __len__(self) -> int:
        return len(self.vertices) - 1

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(_norm_edge(p) for p in zip(self.vertices, self.vertices[1:]))

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(self.graph.edge_index(e) for e in self.edges)

    def is_closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    def is_even(self) -> bool:
        return len(self) % 2 == 0

    def reverse(self) -> Walk:
        return Walk(self.graph, self.vertices[::-1])

    def concat(self, other: Walk) -> Walk:
        if self.graph is not other.graph and self.graph != other.graph:
            raise GraphError("walks live in different graphs")
        if self.vertices[-1] != other.vertices[0]:
            raise GraphError("walks do not share an endpoint")
        return Walk(self.graph, self.vertices + other.vertices[1:])

    def __eq__(self, other):
        return (
            isinstance(other, Walk)
            and self.graph == other.graph
            and self.vertices == other.vertices
        )

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"Walk{self.vertices}"


@dataclass(frozen=True)
class ContractionResult:
    """Contracted graph plus the vertex map onto it."""

    graph: SimpleGraph
    vertex_map: dict  # old vertex id -> new vertex id
    new_vertex: int


def is_path(graph: SimpleGraph, walk: Walk) -> bool:
    """True iff the walk has distinct vertices and internal degrees all 2."""
    vs = walk.vertices
    if len(set(vs)) != len(vs):
        return False
    return all(graph.degree(v) == 2 for v in vs[1:-1])


def is_simple_path(graph: SimpleGraph, path: Walk) -> bool:
    """True iff the endpoints' common neighbors all lie on the path."""
    if not is_path(graph, path):
        raise GraphError("walk is not a path of the graph")
    x, y = path.vertices[0], path.vertices[-1]
    common = graph.neighbors(x) & graph.neighbors(y)
    return common <= set(path.vertices)


def contract_edge(graph: SimpleGraph, e) -> ContractionResult:
    """Identify the endpoints of ``e`` into a fresh vertex max(V)+1."""
    e = _norm_edge(e)
    if not graph.has_edge(e):
        raise GraphError(f"{e} is not an edge of the graph")
    a, b = e
    y = max(graph.vertices) + 1
    chi = {v: (y if v in e else v) for v in graph.vertices}
    new_vertices = [v for v in graph.vertices if v not in e] + [y]
    new_edges = set()
    for u, v in graph.edges:
        if (u, v) == e:
            continue
        cu, cv = chi[u], chi[v]
        if cu != cv:  # merged parallels collapse in the set, loops are dropped
            new_edges.add(_norm_edge((cu, cv)))
    return ContractionResult(SimpleGraph(new_vertices, new_edges), chi, y)


def _contract_vertex_sequence(graph: SimpleGraph, vs) -> ContractionResult:
    chi = {v: v for v in graph.vertices}
    current = graph
    for a, b in zip(vs, vs[1:]):
        step = contract_edge(current, (chi[a], chi[b]))
        chi = {v: step.vertex_map[img] for v, img in chi.items()}
        current = step.graph
    return ContractionResult(current, chi, chi[vs[0]])


def contract_path(graph: SimpleGraph, path: Walk) -> ContractionResult:
    """Contract all edges of a path (sequential edge contractions)."""
    if not is_path(graph, path):
        raise GraphError("walk is not a path of the graph")
    if len(path) == 0:
        return ContractionResult(graph, {v: v for v in graph.vertices}, path.vertices[0])
    return _contract_vertex_sequence(graph, path.vertices)


def contract_walk(graph: SimpleGraph, walk: Walk) -> ContractionResult:
    """Contract a walk with distinct vertices (internal degrees unrestricted)."""
    vs = walk.vertices
    if len(set(vs)) != len(vs):
        raise GraphError("walk contraction needs pairwise distinct vertices")
    if len(walk) == 0:
        return ContractionResult(graph, {v: v for v in graph.vertices}, vs[0])
    return _contract_vertex_sequence(graph, vs)


def connect_by_edge(g1: SimpleGraph, x: int, g2: SimpleGraph, y: int):
    """Join two disjoint connected graphs by the bridge {x, y}.

    Returns (graph, edge, edge_id) with the id of the connecting edge in
    the canonical order of the joined graph.
    """
    if set(g1.vertices) & set(g2.vertices):
        raise GraphError("vertex sets overlap")
    if x not in g1._adj or y not in g2._adj:
        raise GraphError("connecting vertices must belong to the two parts")
    if not (g1.is_connected() and g2.is_connected()):
        raise GraphError("both parts must be connected")
    e = _norm_edge((x, y))
    g = SimpleGraph(g1.vertices + g2.vertices, g1.edges + g2.edges + (e,))
    return g, e, g.edge_index(e)


def triangle_sequence(n: int) -> SimpleGraph:
    """Chain of n triangles sharing consecutive apex vertices."""
    if n <= 0:
        raise GraphError("need at least one triangle")
    edges = []
    for i in range(1, n + 1):
        edges += [(2 * i - 1, 2 * i), (2 * i, 2 * i + 1), (2 * i + 1, 2 * i - 1)]
    return SimpleGraph(range(1, 2 * n + 2), edges)


# -- serialization ----------------------------------------------------


def load_graph(path) -> SimpleGraph:
    with open(path) as fh:
        data = json.load(fh)
    return graph_from_dict(data)


def graph_from_dict(data) -> SimpleGraph:
    edges = [tuple(e) for e in data["edges"]]
    if len(set(_norm_edge(e) for e in edges)) != len(edges):
        raise GraphError("duplicate edges in input")
    return SimpleGraph(data["vertices"], edges)


def graph_to_dict(graph: SimpleGraph) -> dict:
    return {"vertices": list(graph.vertices), "edges": [list(e) for e in graph.edges]}


def save_graph(graph: SimpleGraph, path) -> None:
    with open(path, "w") as fh:
        json.dump(graph_to_dict(graph), fh)
        fh.write("\n")


# -- fixture helper ---------------------------------------------------


def graphs_isomorphic(g1: SimpleGraph, g2: SimpleGraph) -> bool:
    """Backtracking isomorphism test (degree-partition pruned, desk scale)."""
    if g1.n_vertices != g2.n_vertices or g1.n_edges != g2.n_edges:
        return False
    if sorted(g1.degree(v) for v in g1.vertices) != sorted(
        g2.degree(v) for v in g2.vertices
    ):
        return False
    order = sorted(g1.vertices, key=lambda v: (-g1.degree(v), v))
    candidates = {
        v: [u for u in g2.vertices if g2.degree(u) == g1.degree(v)] for v in order
    }

    def extend(i, mapping, used):
        if i == len(order):
            return True
        v = order[i]
        placed = [w for w in g1.neighbors(v) if w in mapping]
        for u in candidates[v]:
            if u in used:
                continue
            if all(u in g2.neighbors(mapping[w]) for w in placed):
                mapping[v] = u
                used.add(u)
                if extend(i + 1, mapping, used):
                    return True
                del mapping[v]
                used.remove(u)
        return False

    return extend(0, {}, set())
