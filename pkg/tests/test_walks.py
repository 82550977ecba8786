"""Primitive walk enumeration against a definition-direct brute force."""

import random

import pytest

from toricgraph.binomials import Binomial
from toricgraph.fixtures import EX_2_9
from toricgraph.graphs import SimpleGraph, Walk, contract_path, triangle_sequence
from toricgraph.walks import (
    ClosedEvenWalk,
    WalkError,
    contract_walk_image,
    enumerate_primitive_walks,
    is_primitive,
    lift_walk,
    walk_binomial,
)

C4 = SimpleGraph([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4), (1, 4)])
K4 = SimpleGraph([1, 2, 3, 4], [(a, b) for a in range(1, 5) for b in range(a + 1, 5)])


def brute_force_primitive_binomials(graph, max_len=None):
    """Oracle: enumerate every closed even walk (edge cap 2, no pruning),
    then filter by the divisibility definition on exponent pairs."""
    n = graph.n_edges
    max_len = max_len or 2 * n
    eidx = graph.edge_index
    walks = []

    def dfs(start, cur, used, seq):
        if len(seq) > 1 and cur == start and (len(seq) - 1) % 2 == 0:
            walks.append(tuple(seq))
        if len(seq) - 1 >= max_len:
            return
        for nxt in sorted(graph.neighbors(cur)):
            e = eidx((cur, nxt))
            if used[e] == 2:
                continue
            used[e] += 1
            seq.append(nxt)
            dfs(start, cur=nxt, used=used, seq=seq)
            seq.pop()
            used[e] -= 1

    for start in graph.vertices:
        dfs(start, start, [0] * n, [start])

    def exponents(vs):
        plus = [0] * n
        minus = [0] * n
        for pos, pair in enumerate(zip(vs, vs[1:]), start=1):
            (plus if pos % 2 else minus)[eidx(pair)] += 1
        return tuple(plus), tuple(minus)

    pairs = {exponents(vs) for vs in walks}
    pairs = {p for p in pairs if p[0] != p[1]}

    def divides(a, b):
        return all(x <= y for x, y in zip(a, b))

    primitive = set()
    for wp, wm in pairs:
        killed = False
        for vp, vm in pairs:
            if (vp, vm) != (wp, wm) and divides(vp, wp) and divides(vm, wm):
                killed = True
                break
            if (vm, vp) != (wp, wm) and divides(vm, wp) and divides(vp, wm):
                killed = True
                break
        if not killed:
            primitive.add(min((wp, wm), (wm, wp)))
    return primitive


@pytest.mark.parametrize("graph", [triangle_sequence(1), triangle_sequence(2), C4, K4])
def test_enumeration_matches_brute_force(graph):
    got = set()
    for w in enumerate_primitive_walks(graph):
        plus, minus = w.exponents()
        got.add(min((plus, minus), (minus, plus)))
    assert got == brute_force_primitive_binomials(graph)


def test_c3_has_no_walks():
    assert enumerate_primitive_walks(triangle_sequence(1)) == []


def test_c4_single_walk():
    walks = enumerate_primitive_walks(C4)
    assert len(walks) == 1 and len(walks[0]) == 4
    binom = walk_binomial(walks[0])
    # alternating edges of the square
    assert sorted((binom.plus, binom.minus)) == sorted(
        ((1, 0, 0, 1), (0, 1, 1, 0))
    )


def test_bowtie_single_cubic_walk():
    walks = enumerate_primitive_walks(triangle_sequence(2))
    assert len(walks) == 1 and len(walks[0]) == 6
    binom = walk_binomial(walks[0])
    assert sum(binom.plus) == 3 and max(binom.plus + binom.minus) == 1


def test_k4_quadratic_walks_and_primitivity():
    walks = enumerate_primitive_walks(K4)
    assert sorted(len(w) for w in walks) == [4, 4, 4]
    all_walks = walks
    for w in walks:
        assert is_primitive(w, all_walks)


def test_doubled_cycle_is_not_primitive():
    doubled = ClosedEvenWalk(C4, (1, 2, 3, 4, 1, 2, 3, 4, 1))
    single = ClosedEvenWalk(C4, (1, 2, 3, 4, 1))
    assert not is_primitive(doubled, [single])


def test_walk_binomial_rejects_zero():
    with pytest.raises(WalkError):
        walk_binomial(ClosedEvenWalk(C4, (1, 2, 1)))


def test_primitive_walks_use_edges_at_most_twice():
    for graph in (EX_2_9, K4, triangle_sequence(3)):
        for w in enumerate_primitive_walks(graph):
            plus, minus = w.exponents()
            assert all(p + m <= 2 for p, m in zip(plus, minus))


def test_walk_binomial_in_kernel():
    m = EX_2_9.incidence_matrix()
    for w in enumerate_primitive_walks(EX_2_9):
        b = walk_binomial(w)
        diff = [p - q for p, q in zip(b.plus, b.minus)]
        assert not any(m @ diff)
        assert isinstance(b, Binomial)


# -- images under contraction -------------------------------------------


def test_image_disjoint_case():
    g = SimpleGraph([1, 2, 3, 4, 5, 6], [(1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (5, 6)])
    p = Walk(g, (1, 5, 6))
    res = contract_path(g, p)
    w = ClosedEvenWalk(g, (1, 2, 3, 4, 1))
    img = contract_walk_image(w, p, res)
    y = res.new_vertex
    assert img.vertices == (y, 2, 3, 4, y) or img.canonical_vertices() == ClosedEvenWalk(
        res.graph, (y, 2, 3, 4, y)
    ).canonical_vertices()


def test_image_prefix_case():
    g = SimpleGraph(range(1, 7), [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)])
    p = Walk(g, (1, 2, 3))
    res = contract_path(g, p)
    w = ClosedEvenWalk(g, (1, 2, 3, 4, 5, 6, 1))
    img = contract_walk_image(w, p, res)
    assert len(img) == 4
    assert set(img.vertices) == {res.new_vertex, 4, 5, 6}


def test_image_degenerate_square():
    p = Walk(C4, (1, 2, 3))
    res = contract_path(C4, p)
    w = ClosedEvenWalk(C4, (1, 2, 3, 4, 1))
    assert contract_walk_image(w, p, res) is None


def test_image_double_traversal_case():
    w = ClosedEvenWalk(EX_2_9, (1, 2, 3, 1, 9, 10, 4, 5, 6, 4, 10, 9, 1))
    p = Walk(EX_2_9, (1, 9, 10))
    res = contract_path(EX_2_9, p)
    img = contract_walk_image(w, p, res)
    assert len(img) == 8
    assert img.vertices.count(res.new_vertex) >= 2


def test_lifting_random_instances():
    rng = random.Random(97)
    done = 0
    while done < 12:
        n = rng.randint(5, 8)
        edges = [
            (a, b)
            for a in range(1, n + 1)
            for b in range(a + 1, n + 1)
            if rng.random() < 0.45
        ]
        g = SimpleGraph(range(1, n + 1), edges)
        if not g.is_connected() or g.n_edges > 11:
            continue
        cands = []
        for c in g.vertices:
            if g.degree(c) == 2:
                a, b = sorted(g.neighbors(c))
                if b not in g.neighbors(a):
                    cands.append((a, c, b))
        if not cands:
            continue
        p = Walk(g, rng.choice(cands))
        res = contract_path(g, p)
        for v in enumerate_primitive_walks(res.graph):
            lifted = lift_walk(v, p, res, g)
            back = contract_walk_image(lifted, p, res)
            assert back is not None
            assert back.canonical_vertices() == v.canonical_vertices()
        done += 1
