"""Betti engine: membership, fiber complexes, candidates, both oracles."""

import itertools
import warnings

import pytest

from toricgraph.betti import (
    SemigroupOracle,
    acyclicity_shortcut,
    betti_table,
    betti_via_koszul,
    candidate_degrees,
    fiber_complex,
    fiber_faces,
    lcm_lattice,
    minimal_monomials,
    monomial_quotient_betti,
    monomial_quotient_totals,
    semigroup_member,
    _faces_by_dim,
    _semigroup_elements,
)
from toricgraph.binomials import toric_ideal
from toricgraph.complexes import homology_dims
from toricgraph.fixtures import EX_2_9, EX_2_10
from toricgraph.graphs import GraphError, SimpleGraph, triangle_sequence

C4 = SimpleGraph([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4), (1, 4)])
C3 = triangle_sequence(1)


def test_semigroup_membership_c4():
    assert semigroup_member(C4, (0, 0, 0, 0))
    assert semigroup_member(C4, (1, 1, 0, 0))  # adjacent pair = one edge
    assert not semigroup_member(C4, (1, 0, 1, 0))  # opposite vertices
    assert not semigroup_member(C4, (1, 1, 1, 0))  # odd total
    assert semigroup_member(C4, (1, 1, 1, 1))


def test_semigroup_membership_odd_cycle():
    # C3 realizes the all-ones vector only with doubled total: (1,1,1) has odd sum
    assert not semigroup_member(C3, (1, 1, 1))
    assert semigroup_member(C3, (2, 2, 2))
    assert semigroup_member(C3, (1, 1, 2))


def test_fiber_complex_c4_top_degree():
    fc = fiber_complex(C4, (1, 1, 1, 1))
    # two opposite edge pairs, i.e. two disjoint segments
    # canonical edge order: e0=(1,2), e1=(1,4), e2=(2,3), e3=(3,4)
    assert {tuple(sorted(f)) for f in fc.complex.facets} == {(0, 3), (1, 2)}
    faces = fiber_faces(C4, (1, 1, 1, 1))
    assert homology_dims(_faces_by_dim(faces)) == {0: 1}


def test_fiber_complex_zero_and_void():
    fc = fiber_complex(C4, (0, 0, 0, 0))
    assert fc.complex.facets == (frozenset(),)
    assert fiber_faces(C4, (1, 0, 1, 0)) is None
    assert fiber_complex(C4, (1, 0, 1, 0)).complex.is_void()


def test_fiber_facets_have_positive_representations():
    # every facet supports the degree with all-positive coefficients
    for graph, s in [
        (C4, (1, 1, 1, 1)),
        (EX_2_9, (1, 0, 0, 1, 0, 0, 1, 1, 1, 1)),
        (triangle_sequence(2), (1, 1, 2, 1, 1)),
    ]:
        if fiber_faces(graph, s) is None:
            continue
        fc = fiber_complex(graph, s)
        m = graph.incidence_matrix()
        for facet in fc.complex.facets:
            cols = sorted(facet)
            top = max(s) or 1
            found = False
            for combo in itertools.product(range(1, top + 1), repeat=len(cols)):
                vec = [0] * graph.n_vertices
                for c, j in zip(combo, cols):
                    for i in range(graph.n_vertices):
                        vec[i] += c * m[i, j]
                if tuple(vec) == tuple(s):
                    found = True
                    break
            assert found, (s, facet)


def test_membership_memo_reuse():
    oracle = SemigroupOracle(C4)
    assert oracle.member((1, 1, 1, 1))
    assert oracle._memo  # warmed
    oracle.clear()
    assert not oracle._memo


def test_acyclicity_shortcut_agrees_with_homology():
    for graph in (C4, triangle_sequence(2), triangle_sequence(3), EX_2_10):
        for s in _semigroup_elements(graph, 3):
            verdict = acyclicity_shortcut(graph, s)
            if verdict is None:
                continue
            faces = fiber_faces(graph, s)
            if faces is None:
                continue
            assert homology_dims(_faces_by_dim(faces)) in ({}, {-1: 1}) or all(
                d == 0 for d in homology_dims(_faces_by_dim(faces)).values()
            ), (graph, s)


def test_shortcut_positive_example():
    # a 2-path with w1 < w2 certifies acyclicity
    g = triangle_sequence(2)
    # vertex 2 has degree 2 with neighbors 1 and 3
    s = (0, 1, 1, 1, 1)
    assert acyclicity_shortcut(g, s) == "acyclic"


def test_minimal_monomials_and_lattice():
    gens = minimal_monomials([(2, 0), (1, 1), (2, 1), (0, 2)])
    assert gens == [(1, 1), (0, 2), (2, 0)] or set(gens) == {(2, 0), (1, 1), (0, 2)}
    lat = lcm_lattice([(1, 1, 0), (0, 1, 1), (1, 0, 1)])
    assert (1, 1, 1) in lat and len(lat) == 4


def test_monomial_quotient_betti_known_cases():
    # principal ideal
    assert monomial_quotient_totals([(1, 1)]) == (1, 1)
    # triangle edge ideal: 1, 3, 2
    tri = [(1, 1, 0), (0, 1, 1), (1, 0, 1)]
    assert monomial_quotient_totals(tri) == (1, 3, 2)
    # (x^2, xy, y^2): 1, 3, 2 as well
    powers = [(2, 0), (1, 1), (0, 2)]
    assert monomial_quotient_totals(powers) == (1, 3, 2)
    # Koszul syzygy degree check for two coprime quadrics
    betti = monomial_quotient_betti([(2, 0), (0, 2)])
    assert betti[(1, (2, 0))] == 1 and betti[(2, (2, 2))] == 1


def test_candidate_degrees_c4():
    assert candidate_degrees(C4) == {(0, 0, 0, 0), (1, 1, 1, 1)}
    assert candidate_degrees(C3) == {(0, 0, 0)}


def test_betti_tables_small():
    assert betti_table(C3).totals == (1,)
    t = betti_table(C4)
    assert t.totals == (1, 1) and t.cm and t.gorenstein and t.codim == 1
    assert betti_table(triangle_sequence(2)).totals == (1, 1)
    t3 = betti_table(triangle_sequence(3))
    assert t3.totals == (1, 3, 2) and t3.cm and not t3.gorenstein
    with pytest.raises(GraphError):
        betti_table(SimpleGraph([1, 2, 3, 4], [(1, 2), (3, 4)]))


def test_betti_table_metadata():
    t = betti_table(EX_2_9)
    assert t.totals == (1, 4, 4, 1)
    assert t.pd == 3 and t.codim == 2 and not t.cm
    assert t.depth == t.n_edges - 3 and t.krull_dim == t.n_edges - 2
    d = t.as_dict()
    assert set(d) >= {"totals", "graded", "multigraded", "codim", "pd", "cm", "gorenstein"}
    assert sum(t.graded[(1, j)] for j in range(10) if (1, j) in t.graded) == 4


def test_guided_equals_exhaustive_small():
    for graph in (C4, triangle_sequence(2), triangle_sequence(3), EX_2_10):
        a = betti_table(graph, mode="guided")
        b = betti_table(graph, mode="exhaustive")
        assert a.multigraded == b.multigraded


def test_exhaustive_warns_when_bound_too_small():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        t = betti_table(EX_2_10, mode="exhaustive", max_degree=1)
        assert not t.complete
        assert any("bound" in str(w.message) for w in caught)


def test_field_independence_fixtures():
    for graph in (C4, triangle_sequence(3), EX_2_10):
        a = betti_table(graph, field=32003)
        b = betti_table(graph, field=None)
        assert a.multigraded == b.multigraded


def test_no_shortcut_mode_matches():
    for graph in (C4, triangle_sequence(3), EX_2_10):
        a = betti_table(graph, use_shortcuts=True)
        b = betti_table(graph, use_shortcuts=False)
        assert a.multigraded == b.multigraded


def test_koszul_oracle_c4():
    assert betti_via_koszul(C4, (1, 1, 1, 1)) == [0, 1]
    assert betti_via_koszul(C4, (1, 0, 1, 0)) == []
    assert betti_via_koszul(C4, (0, 0, 0, 0)) == [1]


def test_koszul_agrees_with_fiber_formula():
    for graph in (C4, triangle_sequence(3), EX_2_10):
        ideal = toric_ideal(graph)
        table = betti_table(graph)
        for s in sorted(candidate_degrees(graph, ideal)):
            kz = betti_via_koszul(graph, s, ideal=ideal)
            for i in range(graph.n_edges + 1):
                expected = table.multigraded.get((i, s), 0)
                got = kz[i] if i < len(kz) else 0
                assert got == expected, (s, i)
