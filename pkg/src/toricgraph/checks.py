"""Reproduction harness: worked examples, theorem checks, random search.

Every check validates its hypotheses first; a failed hypothesis is
reported as such and never counts as a counterexample. Random families
are Erdos-Renyi graphs conditioned on connectivity, with subdivisions or
bridge compositions supplying the substructure a statement needs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .betti import betti_table, fiber_faces, _faces_by_dim
from .binomials import (
    Binomial,
    BinomialIdeal,
    TermOrder,
    buchberger,
    initial_ideal,
    minimal_generators,
    reduces_to_zero,
    toric_ideal,
)
from .complexes import homology_dims
from .fixtures import (
    ERRATA,
    EX_2_8,
    EX_2_8_EDGE,
    EX_2_9,
    EX_2_9_PATH,
    EX_2_10,
    EX_2_10_PATH,
    EX_2_11,
    EX_2_11_WALK,
    FIG_10,
    FIG_11,
    FIG_12,
    FIG_EDGE,
    FIG_EDGE2,
    expected_tables,
)
from .graphs import (
    GraphError,
    SimpleGraph,
    Walk,
    connect_by_edge,
    contract_edge,
    contract_path,
    contract_walk,
    graph_to_dict,
    graphs_isomorphic,
    is_path,
    is_simple_path,
    triangle_sequence,
)


@dataclass
class CheckReport:
    check_id: str
    instance: str
    hypotheses_ok: bool
    conclusion_ok: bool | None  # None: hypotheses failed or purely exploratory
    details: dict = field(default_factory=dict)
    seed: int | None = None

    @property
    def counterexample(self) -> bool:
        return self.hypotheses_ok and self.conclusion_ok is False

    @property
    def passed(self) -> bool:
        return self.conclusion_ok is True or not self.hypotheses_ok

    def as_dict(self) -> dict:
        return {
            "check": self.check_id,
            "instance": self.instance,
            "hypotheses_ok": self.hypotheses_ok,
            "conclusion_ok": self.conclusion_ok,
            "counterexample": self.counterexample,
            "seed": self.seed,
            "details": self.details,
        }


def _totals_geq(a, b) -> bool:
    top = max(len(a), len(b))
    pad = lambda t: tuple(t) + (0,) * (top - len(t))
    return all(x >= y for x, y in zip(pad(a), pad(b)))


def _convolve(a, b) -> tuple:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def beta1_by_fibers(graph: SimpleGraph, ideal: BinomialIdeal | None = None):
    """(beta_1 from fiber homology, minimal generator count).

    beta_{1,s} is supported exactly on the minimal generator degrees, so
    only those fibers are visited.
    """
    ideal = ideal if ideal is not None else toric_ideal(graph)
    gens = minimal_generators(ideal)
    m = graph.incidence_matrix()
    degrees = {
        tuple(int(sum(m[i, j] * g.plus[j] for j in range(len(g.plus)))) for i in range(m.shape[0]))
        for g in gens
    }
    total = 0
    for s in degrees:
        faces = fiber_faces(graph, s)
        if faces is None:
            continue
        total += homology_dims(_faces_by_dim(faces)).get(0, 0)
    return total, len(gens)


# -- worked examples ----------------------------------------------------


def _row(label, graph, expect) -> dict:
    table = betti_table(graph)
    row = {
        "label": label,
        "expected": list(expect.totals),
        "computed": list(table.totals),
        "ok": tuple(table.totals) == tuple(expect.totals),
    }
    if expect.cm is not None:
        row["cm_expected"] = expect.cm
        row["cm"] = table.cm
        row["ok"] = row["ok"] and table.cm == expect.cm
    return row


def reproduce(example_id: str) -> CheckReport:
    """Recompute a worked example and compare with the published tables."""
    exp = expected_tables(example_id)
    rows = []
    details: dict = {}
    if example_id == "ex-2.8":
        contracted = contract_edge(EX_2_8, EX_2_8_EDGE).graph
        rows.append(_row("G", EX_2_8, exp[0]))
        rows.append(_row("G/e", contracted, exp[1]))
        details["erratum"] = ERRATA["ex-2.8/G'"]
    elif example_id == "ex-2.9":
        contracted = contract_path(EX_2_9, Walk(EX_2_9, EX_2_9_PATH)).graph
        rows.append(_row("G", EX_2_9, exp[0]))
        rows.append(_row("G/p", contracted, exp[1]))
        codims = (EX_2_9.codim(), contracted.codim())
        details["codims"] = codims
        if codims != (2, 2):
            rows.append({"label": "codim", "ok": False})
    elif example_id == "ex-2.10":
        contracted = contract_path(EX_2_10, Walk(EX_2_10, EX_2_10_PATH)).graph
        rows.append(_row("G'", EX_2_10, exp[0]))
        rows.append(_row("G'/p'", contracted, exp[1]))
        other = contract_edge(EX_2_9, (9, 10)).graph
        details["isomorphic_to_ex29_contraction"] = graphs_isomorphic(EX_2_10, other)
        if not details["isomorphic_to_ex29_contraction"]:
            rows.append({"label": "iso", "ok": False})
    elif example_id == "ex-2.11":
        contracted = contract_walk(EX_2_11, Walk(EX_2_11, EX_2_11_WALK)).graph
        rows.append(_row("G", EX_2_11, exp[0]))
        rows.append(_row("G/p", contracted, exp[1]))
    elif example_id in ("fig-10", "fig-11", "fig-12"):
        graph = {"fig-10": FIG_10, "fig-11": FIG_11, "fig-12": FIG_12}[example_id]
        first = contract_edge(graph, FIG_EDGE)
        second_edge = tuple(first.vertex_map[v] for v in FIG_EDGE2)
        second = contract_edge(first.graph, second_edge)
        rows.append(_row("G", graph, exp[0]))
        rows.append(_row("G/e", first.graph, exp[1]))
        rows.append(_row("G/(e,e')", second.graph, exp[2]))
    else:
        raise KeyError(f"unknown example {example_id!r}")
    ok = all(r["ok"] for r in rows)
    details["rows"] = rows
    return CheckReport(example_id, example_id, True, ok, details)


# -- theorem checks ------------------------------------------------------


def _walk_or_none(graph, vertices):
    try:
        return Walk(graph, vertices)
    except GraphError:
        return None


def check_theorem_2_5(graph: SimpleGraph, p_vertices, seed=None) -> CheckReport:
    """Even path contraction never raises a total Betti number."""
    notes = []
    p = _walk_or_none(graph, p_vertices)
    if p is None or not is_path(graph, p):
        notes.append("p is not a path")
    elif not p.is_even() or len(p) == 0:
        notes.append("p is not a nontrivial even path")
    if notes:
        return CheckReport("thm-2.5", str(p_vertices), False, None, {"notes": notes}, seed)
    t1 = betti_table(graph)
    t2 = betti_table(contract_path(graph, p).graph)
    ok = _totals_geq(t1.totals, t2.totals)
    return CheckReport(
        "thm-2.5",
        f"p={tuple(p_vertices)}",
        True,
        ok,
        {"graph": graph_to_dict(graph), "before": list(t1.totals), "after": list(t2.totals)},
        seed,
    )


def _contiguous_subpath(p, q) -> bool:
    p, q = tuple(p), tuple(q)
    for cand in (q, q[::-1]):
        for i in range(len(cand) - len(p) + 1):
            if cand[i : i + len(p)] == p:
                return True
    return False


def check_theorem_2_7(graph: SimpleGraph, p_vertices, q_vertices, seed=None) -> CheckReport:
    """Inside a path longer by two, an even simple contraction is exact."""
    notes = []
    p = _walk_or_none(graph, p_vertices)
    q = _walk_or_none(graph, q_vertices)
    if p is None or not is_path(graph, p):
        notes.append("p is not a path")
    elif not p.is_even() or len(p) == 0:
        notes.append("p is not a nontrivial even path")
    elif not is_simple_path(graph, p):
        notes.append("p is not simple")
    if q is None or not is_path(graph, q):
        notes.append("q is not a path")
    if not notes and not _contiguous_subpath(p_vertices, q_vertices):
        notes.append("p is not contained in q")
    if not notes and len(q) < len(p) + 2:
        notes.append("|q| < |p| + 2")
    if notes:
        return CheckReport(
            "thm-2.7", f"p={tuple(p_vertices)}", False, None, {"notes": notes}, seed
        )
    t1 = betti_table(graph)
    t2 = betti_table(contract_path(graph, p).graph)
    ok = (
        t1.totals == t2.totals
        and t1.cm == t2.cm
        and t1.gorenstein == t2.gorenstein
    )
    return CheckReport(
        "thm-2.7",
        f"p={tuple(p_vertices)} q={tuple(q_vertices)}",
        True,
        ok,
        {
            "graph": graph_to_dict(graph),
            "before": list(t1.totals),
            "after": list(t2.totals),
            "cm": [t1.cm, t2.cm],
            "gorenstein": [t1.gorenstein, t2.gorenstein],
        },
        seed,
    )


def check_lemma_2_3(graph: SimpleGraph, p_vertices, seed=None) -> CheckReport:
    """Even simple path contraction preserves the codimension.

    Adjacent path endpoints are rejected as a hypothesis failure: the
    contraction then drops a loop, the edge count shifts, and the
    codimension formula breaks down.
    """
    notes = []
    p = _walk_or_none(graph, p_vertices)
    if p is None or not is_path(graph, p):
        notes.append("p is not a path")
    elif not p.is_even() or len(p) == 0:
        notes.append("p is not a nontrivial even path")
    elif not is_simple_path(graph, p):
        notes.append("p is not simple")
    elif p.vertices[-1] in graph.neighbors(p.vertices[0]):
        notes.append("path endpoints are adjacent (degenerate contraction)")
    if not notes and not graph.is_connected():
        notes.append("graph is not connected")
    if notes:
        return CheckReport("lemma-2.3", str(p_vertices), False, None, {"notes": notes}, seed)
    contracted = contract_path(graph, p).graph
    pair = (graph.codim(), contracted.codim())
    return CheckReport(
        "lemma-2.3",
        f"p={tuple(p_vertices)}",
        True,
        pair[0] == pair[1],
        {"graph": graph_to_dict(graph), "codims": list(pair)},
        seed,
    )


def _bridge_parts(graph: SimpleGraph, edge):
    """Components of G - e, or None if e is not a bridge of a connected G."""
    e = tuple(sorted(edge))
    if not graph.has_edge(e) or not graph.is_connected():
        return None
    rest = [f for f in graph.edges if f != e]
    x, y = e
    comp = {x}
    stack = [x]
    adj = {v: set() for v in graph.vertices}
    for a, b in rest:
        adj[a].add(b)
        adj[b].add(a)
    while stack:
        for u in adj[stack.pop()]:
            if u not in comp:
                comp.add(u)
                stack.append(u)
    if y in comp:
        return None
    other = set(graph.vertices) - comp
    g1 = SimpleGraph(comp, [f for f in rest if f[0] in comp])
    g2 = SimpleGraph(other, [f for f in rest if f[0] in other])
    return g1, g2


def check_theorem_4_2(graph: SimpleGraph, edge, seed=None) -> CheckReport:
    """Contracting the bridge of a connected-by-edge graph fixes beta_1."""
    parts = _bridge_parts(graph, edge)
    if parts is None:
        return CheckReport(
            "thm-4.2", str(edge), False, None, {"notes": ["edge is not a bridge"]}, seed
        )
    ideal = toric_ideal(graph)
    contracted = contract_edge(graph, edge).graph
    ideal2 = toric_ideal(contracted)
    b1, ngens = beta1_by_fibers(graph, ideal)
    b1c, ngens2 = beta1_by_fibers(contracted, ideal2)
    ok = b1 == b1c and b1 == ngens and b1c == ngens2
    return CheckReport(
        "thm-4.2",
        f"e={tuple(sorted(edge))}",
        True,
        ok,
        {
            "graph": graph_to_dict(graph),
            "beta1": [b1, b1c],
            "minimal_generators": [ngens, ngens2],
        },
        seed,
    )


def _embed_binomials(part: SimpleGraph, whole: SimpleGraph):
    """Push the part's toric generators into the whole graph's variables."""
    idx = [whole.edge_index(e) for e in part.edges]
    n = whole.n_edges
    out = []
    for g in toric_ideal(part).gens:
        plus = [0] * n
        minus = [0] * n
        for j, e in enumerate(idx):
            plus[e] = g.plus[j]
            minus[e] = g.minus[j]
        out.append(Binomial(tuple(plus), tuple(minus)))
    return out


def check_prop_4_3(graph: SimpleGraph, edge, seed=None) -> CheckReport:
    """With one bipartite side, the bridge splits the ideal and the table.

    Checks I_G = I_{G1} + I_{G2} by mutual reduction, the Kunneth-style
    convolution of the total Betti numbers, and invariance under the
    bridge contraction.
    """
    parts = _bridge_parts(graph, edge)
    if parts is None:
        return CheckReport(
            "prop-4.3", str(edge), False, None, {"notes": ["edge is not a bridge"]}, seed
        )
    g1, g2 = parts
    if not (g1.is_bipartite() or g2.is_bipartite()):
        return CheckReport(
            "prop-4.3", str(edge), False, None, {"notes": ["neither side is bipartite"]}, seed
        )
    ideal = toric_ideal(graph)
    split_gens = _embed_binomials(g1, graph) + _embed_binomials(g2, graph)
    split_ideal = buchberger(BinomialIdeal(graph.n_edges, tuple(split_gens)))
    same_ideal = reduces_to_zero(split_gens, ideal) and reduces_to_zero(
        ideal.gens, split_ideal
    )
    t = betti_table(graph)
    t1 = betti_table(g1)
    t2 = betti_table(g2)
    conv = _convolve(t1.totals, t2.totals)
    t_contracted = betti_table(contract_edge(graph, edge).graph)
    ok = same_ideal and t.totals == conv and t.totals == t_contracted.totals
    return CheckReport(
        "prop-4.3",
        f"e={tuple(sorted(edge))}",
        True,
        ok,
        {
            "graph": graph_to_dict(graph),
            "ideal_splits": same_ideal,
            "totals": list(t.totals),
            "convolution": list(conv),
            "contracted": list(t_contracted.totals),
        },
        seed,
    )


def question_4_5(graph: SimpleGraph, edge, seed=None) -> CheckReport:
    """Exploratory: compare tables across a bridge contraction (no assertion)."""
    parts = _bridge_parts(graph, edge)
    if parts is None:
        return CheckReport(
            "question-4.5", str(edge), False, None, {"notes": ["edge is not a bridge"]}, seed
        )
    t1 = betti_table(graph)
    t2 = betti_table(contract_edge(graph, edge).graph)
    top = max(t1.pd, t2.pd) + 1
    deltas = [t1.total(i) - t2.total(i) for i in range(top)]
    return CheckReport(
        "question-4.5",
        f"e={tuple(sorted(edge))}",
        True,
        None,
        {
            "graph": graph_to_dict(graph),
            "before": list(t1.totals),
            "after": list(t2.totals),
            "deltas": deltas,
            "monotone_drop": all(d >= 0 for d in deltas),
            "cm": [t1.cm, t2.cm],
        },
        seed,
    )


def _lex_initial_totals(graph: SimpleGraph):
    from .betti import monomial_quotient_totals

    ideal = toric_ideal(graph, TermOrder("lex"))
    if ideal.is_zero():
        return (1,)
    return monomial_quotient_totals(initial_ideal(ideal))


def tn_connected_pair(n: int, m: int):
    """T_n and T_m joined end vertex to end vertex by a bridge."""
    tn = triangle_sequence(n)
    off = 2 * n + 1
    tm_shift = SimpleGraph(
        [v + off for v in triangle_sequence(m).vertices],
        [(a + off, b + off) for a, b in triangle_sequence(m).edges],
    )
    graph, e, _ = connect_by_edge(tn, 2 * n + 1, tm_shift, off + 1)
    return graph, e


def check_remark_4_6c(n: int, m: int, seed=None) -> CheckReport:
    """Triangle chains: bridge composition, contraction, T_{n+m}, and the
    lex initial ideal all share their total Betti numbers."""
    graph, e = tn_connected_pair(n, m)
    t_joined = betti_table(graph).totals
    t_contracted = betti_table(contract_edge(graph, e).graph).totals
    t_chain = betti_table(triangle_sequence(n + m)).totals
    t_initial = _lex_initial_totals(triangle_sequence(n + m))
    ok = t_joined == t_contracted == t_chain == t_initial
    return CheckReport(
        "remark-4.6c",
        f"n={n} m={m}",
        True,
        ok,
        {
            "joined": list(t_joined),
            "contracted": list(t_contracted),
            "chain": list(t_chain),
            "initial_ideal": list(t_initial),
        },
        seed,
    )


# -- random families -----------------------------------------------------


def random_connected_graph(
    rng: random.Random, n_lo=6, n_hi=10, p=0.35, max_edges=None, tries=400
) -> SimpleGraph:
    for _ in range(tries):
        n = rng.randint(n_lo, n_hi)
        edges = [
            (a, b)
            for a in range(1, n + 1)
            for b in range(a + 1, n + 1)
            if rng.random() < p
        ]
        g = SimpleGraph(range(1, n + 1), edges)
        if not g.is_connected():
            continue
        if max_edges is not None and g.n_edges > max_edges:
            continue
        return g
    raise RuntimeError("no connected graph found; adjust the family parameters")


def relabel(graph: SimpleGraph, offset: int) -> SimpleGraph:
    return SimpleGraph(
        [v + offset for v in graph.vertices],
        [(a + offset, b + offset) for a, b in graph.edges],
    )


def subdivide_edge(graph: SimpleGraph, edge, parts: int):
    """Replace an edge by a path through ``parts`` fresh vertices."""
    e = tuple(sorted(edge))
    if not graph.has_edge(e):
        raise GraphError(f"{e} is not an edge")
    fresh = [max(graph.vertices) + 1 + i for i in range(parts)]
    chain = [e[0], *fresh, e[1]]
    edges = [f for f in graph.edges if f != e]
    edges += list(zip(chain, chain[1:]))
    return SimpleGraph(list(graph.vertices) + fresh, edges), fresh


def even_paths(graph: SimpleGraph) -> list:
    """All length-2 paths (center of degree 2), as vertex triples."""
    out = []
    for c in graph.vertices:
        if graph.degree(c) == 2:
            a, b = sorted(graph.neighbors(c))
            out.append((a, c, b))
    return out


def random_even_path_instance(rng: random.Random, max_edges=12):
    """A connected graph of at most max_edges edges with a chosen even path."""
    g = random_connected_graph(rng, 5, 8, 0.4, max_edges=max_edges - 1)
    cands = even_paths(g)
    if cands and rng.random() < 0.7:
        return g, list(rng.choice(cands))
    e = rng.choice(g.edges)
    g2, (mid,) = subdivide_edge(g, e, 1)
    return g2, [e[0], mid, e[1]]


def random_simple_even_path_instance(rng: random.Random, max_edges=12, tries=60):
    """Like the above, but the path is simple with nonadjacent endpoints."""
    for _ in range(tries):
        g, p = random_even_path_instance(rng, max_edges)
        walk = Walk(g, p)
        if is_simple_path(g, walk) and p[-1] not in g.neighbors(p[0]):
            return g, p
    raise RuntimeError("no simple even path found")


def random_thm27_instance(rng: random.Random):
    """Graph with a subdivided edge giving q of length 4 and p inside it."""
    g = random_connected_graph(rng, 4, 7, 0.45, max_edges=9)
    e = rng.choice(g.edges)
    g2, mids = subdivide_edge(g, e, 3)
    q = [e[0], *mids, e[1]]
    p = rng.choice([q[0:3], q[1:4], q[2:5]])
    return g2, p, q


def random_bipartite_connected(rng: random.Random, tries=200) -> SimpleGraph:
    for _ in range(tries):
        left = rng.randint(2, 3)
        right = rng.randint(2, 3)
        edges = [
            (a, left + b)
            for a in range(1, left + 1)
            for b in range(1, right + 1)
            if rng.random() < 0.6
        ]
        g = SimpleGraph(range(1, left + right + 1), edges)
        if g.is_connected():
            return g
    raise RuntimeError("no connected bipartite graph found")


def random_connected_by_edge(rng: random.Random, bipartite_side=False, part_vertices=(4, 6), part_edges=8):
    if bipartite_side:
        g1 = random_bipartite_connected(rng)
    else:
        g1 = random_connected_graph(rng, *part_vertices, 0.5, max_edges=part_edges)
    g2 = random_connected_graph(rng, *part_vertices, 0.5, max_edges=part_edges)
    g2 = relabel(g2, max(g1.vertices))
    x = rng.choice(g1.vertices)
    y = rng.choice(g2.vertices)
    graph, e, _ = connect_by_edge(g1, x, g2, y)
    return graph, e


# -- seeded search --------------------------------------------------------


SEARCH_TARGETS = (
    "thm-2.5",
    "thm-2.7",
    "lemma-2.3",
    "thm-4.2",
    "prop-4.3",
    "question-4.5",
    "remark-4.6c",
)


def search(spec: dict, seed: int, budget: int) -> list[CheckReport]:
    """Run ``budget`` random instances of one target check, deterministically."""
    target = spec.get("target")
    if target not in SEARCH_TARGETS:
        raise ValueError(f"unknown search target {target!r}")
    fam = spec.get("family", {})
    rng = random.Random(seed)
    reports = []
    pairs_46 = [(n, m) for n in range(1, 4) for m in range(1, 4) if n + m <= 4]
    for k in range(budget):
        if target == "thm-2.5":
            g, p = random_even_path_instance(rng, fam.get("max_edges", 12))
            rep = check_theorem_2_5(g, p, seed=seed)
        elif target == "thm-2.7":
            g, p, q = random_thm27_instance(rng)
            rep = check_theorem_2_7(g, p, q, seed=seed)
        elif target == "lemma-2.3":
            g, p = random_simple_even_path_instance(rng, fam.get("max_edges", 12))
            rep = check_lemma_2_3(g, p, seed=seed)
        elif target == "thm-4.2":
            g, e = random_connected_by_edge(rng)
            rep = check_theorem_4_2(g, e, seed=seed)
        elif target == "prop-4.3":
            g, e = random_connected_by_edge(rng, bipartite_side=True)
            rep = check_prop_4_3(g, e, seed=seed)
        elif target == "question-4.5":
            g, e = random_connected_by_edge(
                rng, bipartite_side=rng.random() < 0.3, part_vertices=(3, 5), part_edges=6
            )
            rep = question_4_5(g, e, seed=seed)
        else:  # remark-4.6c
            n, m = pairs_46[k % len(pairs_46)]
            rep = check_remark_4_6c(n, m, seed=seed)
        rep.instance = f"#{k} {rep.instance}"
        reports.append(rep)
    return reports
