"""Binomial Groebner engine and the toric ideal construction."""

import random

import pytest

from toricgraph.binomials import (
    Binomial,
    BinomialIdeal,
    TermOrder,
    buchberger,
    format_binomial,
    initial_ideal,
    minimal_generators,
    normal_form,
    reduces_to_zero,
    saturate_variable,
    toric_ideal,
)
from toricgraph.fixtures import EX_2_9
from toricgraph.graphs import SimpleGraph, triangle_sequence
from toricgraph.walks import primitive_walk_binomials

C4 = SimpleGraph([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4), (1, 4)])
K4 = SimpleGraph([1, 2, 3, 4], [(a, b) for a in range(1, 5) for b in range(a + 1, 5)])

# opposite-edge-pair products in K4's canonical edge order
M1 = (1, 0, 0, 0, 0, 1)  # e12*e34
M2 = (0, 1, 0, 0, 1, 0)  # e13*e24
M3 = (0, 0, 1, 1, 0, 0)  # e14*e23


def test_term_orders():
    lex = TermOrder("lex")
    drl = TermOrder("degrevlex")
    e13 = (1, 0, 1, 0)
    e24 = (0, 1, 0, 1)
    assert lex.greater(e13, e24)
    assert drl.greater(e13, e24)  # last differing exponent is smaller
    assert drl.greater((0, 2, 0, 0), (1, 0, 1, 0))  # y^2 > xz in degrevlex
    # permutation reverses priorities
    rev = TermOrder("lex", perm=(3, 2, 1, 0))
    assert rev.greater(e24, e13)
    with pytest.raises(ValueError):
        TermOrder("weird")


def test_binomial_validation():
    with pytest.raises(ValueError):
        Binomial((1, 0), (1, 0))
    b = Binomial((1, 0), (0, 2))
    assert not b.is_homogeneous()
    assert Binomial((1, 0, 1, 0), (0, 1, 0, 1)).is_homogeneous()


def test_normal_form_examples():
    gb = buchberger(
        BinomialIdeal(4, (Binomial((1, 0, 1, 0), (0, 1, 0, 1)),)), TermOrder("lex")
    )
    # reduce e1e3 by {e1e3 - e2e4}
    assert normal_form((1, 0, 1, 0), gb) == (0, 1, 0, 1)
    # a generator reduces to zero against its own basis
    assert normal_form(Binomial((1, 0, 1, 0), (0, 1, 0, 1)), gb) is None
    # e2e4 is already normal under degrevlex (leading term is e1e3)
    gb_drl = buchberger(
        BinomialIdeal(4, (Binomial((1, 0, 1, 0), (0, 1, 0, 1)),)), TermOrder("degrevlex")
    )
    assert normal_form((0, 1, 0, 1), gb_drl) == (0, 1, 0, 1)
    with pytest.raises(ValueError):
        normal_form((1, 0, 0, 0), BinomialIdeal(4, ()))


def test_buchberger_single_binomial_is_its_own_basis():
    ideal = BinomialIdeal(4, (Binomial((1, 0, 1, 0), (0, 1, 0, 1)),))
    gb = buchberger(ideal, TermOrder("lex"))
    assert len(gb.gens) == 1


def test_buchberger_k4_reduced_lex_basis():
    # from m1 - m2 and m2 - m3, tail reduction produces m1 - m3
    ideal = BinomialIdeal(6, (Binomial(M1, M2), Binomial(M2, M3)))
    gb = buchberger(ideal, TermOrder("lex"))
    got = {g.canonical() for g in gb.gens}
    assert Binomial(M1, M3).canonical() in got
    assert got == {Binomial(M1, M3).canonical(), Binomial(M2, M3).canonical()}


def test_initial_ideal_k4_lex():
    # the reduced lex basis has two elements, so in(I) has two generators;
    # e14*e23 leads no member (it is the smallest of the three products)
    ideal = toric_ideal(K4, TermOrder("lex"))
    leads = initial_ideal(ideal)
    assert leads == sorted([M1, M2], key=TermOrder("lex").key)


def test_saturation_examples():
    # (e1*e2 - e1*e3) : e1^oo = (e2 - e3)
    ideal = BinomialIdeal(3, (Binomial((1, 1, 0), (1, 0, 1)),))
    sat = saturate_variable(ideal, 0)
    assert [g.canonical() for g in sat.gens] == [Binomial((0, 1, 0), (0, 0, 1)).canonical()]
    # saturating a variable that never appears changes nothing
    sat2 = saturate_variable(ideal, 2 - 2)  # e1 appears; now a variable that doesn't:
    untouched = saturate_variable(BinomialIdeal(3, (Binomial((0, 1, 0), (0, 0, 1)),)), 0)
    assert [g.canonical() for g in untouched.gens] == [
        Binomial((0, 1, 0), (0, 0, 1)).canonical()
    ]
    # C4's lattice basis binomial has no variable factor
    c4_ideal = toric_ideal(C4)
    assert len(c4_ideal.gens) == 1
    g = c4_ideal.gens[0]
    assert sorted((sum(g.plus), sum(g.minus))) == [2, 2]


def test_toric_ideal_fixtures():
    assert toric_ideal(triangle_sequence(1)).is_zero()
    assert len(toric_ideal(C4).gens) == 1
    gens = minimal_generators(toric_ideal(EX_2_9))
    assert len(gens) == 4  # published beta_1


def test_minimal_generators_k4():
    gens = minimal_generators(toric_ideal(K4))
    assert len(gens) == 2  # complete intersection of two quadrics


def test_homogeneity_of_groebner_elements():
    for graph in (C4, K4, EX_2_9, triangle_sequence(3)):
        ideal = toric_ideal(graph)
        m = graph.incidence_matrix()
        for g in ideal.gens:
            assert g.is_homogeneous()
            diff = [p - q for p, q in zip(g.plus, g.minus)]
            assert not any(m @ diff)


def test_walk_binomials_generate_the_toric_ideal():
    for graph in (C4, K4, EX_2_9, triangle_sequence(2), triangle_sequence(3)):
        ideal = toric_ideal(graph)
        walks = primitive_walk_binomials(graph)
        assert reduces_to_zero(walks, ideal)
        walk_ideal = buchberger(BinomialIdeal(graph.n_edges, tuple(walks)))
        assert reduces_to_zero(ideal.gens, walk_ideal)


def test_universal_groebner_property():
    # reduced bases under a panel of orders consist of walk binomials
    rng = random.Random(4)
    for graph in (C4, K4, EX_2_9, triangle_sequence(3)):
        n = graph.n_edges
        walks = {b.canonical() for b in primitive_walk_binomials(graph)}
        perms = [None, tuple(reversed(range(n)))]
        for _ in range(3):
            p = list(range(n))
            rng.shuffle(p)
            perms.append(tuple(p))
        orders = [TermOrder("lex", perms[0]), TermOrder("lex", perms[1])] + [
            TermOrder("degrevlex", p) for p in perms[2:]
        ]
        for order in orders:
            gb = toric_ideal(graph, order)
            for g in gb.gens:
                assert g.canonical() in walks


def test_format_binomial():
    assert format_binomial(Binomial((1, 0, 1, 0), (0, 1, 0, 1))) == "e1*e3 - e2*e4"
    assert format_binomial(Binomial((2, 0), (0, 2))) == "e1^2 - e2^2"
