"""Toric ideals of graphs: Betti tables and contraction experiments."""

from .betti import (
    BettiTable,
    betti_table,
    betti_via_koszul,
    candidate_degrees,
    fiber_complex,
    semigroup_member,
)
from .binomials import (
    Binomial,
    BinomialIdeal,
    TermOrder,
    buchberger,
    initial_ideal,
    minimal_generators,
    normal_form,
    saturate_variable,
    toric_ideal,
)
from .complexes import SimplicialComplex, cone, intersection, reduced_homology, union
from .graphs import (
    ContractionResult,
    SimpleGraph,
    Walk,
    connect_by_edge,
    contract_edge,
    contract_path,
    contract_walk,
    is_path,
    is_simple_path,
    load_graph,
    save_graph,
    triangle_sequence,
)
from .walks import (
    ClosedEvenWalk,
    contract_walk_image,
    enumerate_primitive_walks,
    is_primitive,
    walk_binomial,
)

__version__ = "0.1.0"
