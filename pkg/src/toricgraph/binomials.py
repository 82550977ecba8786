"""Binomial-only Groebner machinery for toric ideals of graphs.

Everything here is a pure difference of monomials (exponent tuples), a
class closed under S-pairs and reduction, so all arithmetic is exact with
coefficients +-1 and no fractions ever appear. The toric ideal is built
from an integer kernel basis of the incidence matrix and repaired by
saturating every variable.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .graphs import SimpleGraph
from .linalg import integer_kernel_basis

Monomial = tuple  # exponent vector over the edge variables


@dataclass(frozen=True)
class TermOrder:
    """Total monomial order: lex or degrevlex with a variable priority."""

    kind: str = "degrevlex"
    perm: tuple | None = None  # variable indices, highest priority first

    def __post_init__(self):
        if self.kind not in ("lex", "degrevlex"):
            raise ValueError(f"unknown term order kind {self.kind!r}")

    def key(self, m: Monomial):
        if self.kind == "lex":
            if self.perm is None:
                return m
            return tuple(m[i] for i in self.perm)
        if self.perm is None:
            return (sum(m), tuple(-x for x in reversed(m)))
        return (sum(m), tuple(-m[i] for i in reversed(self.perm)))

    def greater(self, u: Monomial, v: Monomial) -> bool:
        return self.key(u) > self.key(v)


@dataclass(frozen=True)
class Binomial:
    """Pure difference plus - minus of two monomials (plus != minus)."""

    plus: Monomial
    minus: Monomial

    def __post_init__(self):
        if self.plus == self.minus:
            raise ValueError("zero binomial")
        if len(self.plus) != len(self.minus):
            raise ValueError("exponent vectors of different lengths")

    @property
    def degree(self) -> int:
        return sum(self.plus)

    def is_homogeneous(self) -> bool:
        return sum(self.plus) == sum(self.minus)

    def oriented(self, order: TermOrder) -> tuple[Monomial, Monomial]:
        if order.greater(self.plus, self.minus):
            return self.plus, self.minus
        return self.minus, self.plus

    def canonical(self) -> "Binomial":
        """Sign-normalized so plus <= minus lexicographically."""
        if self.plus <= self.minus:
            return self
        return Binomial(self.minus, self.plus)


@dataclass(frozen=True)
class BinomialIdeal:
    n_vars: int
    gens: tuple
    groebner: bool = False
    order: TermOrder | None = None

    def is_zero(self) -> bool:
        return not self.gens


# -- monomial helpers --------------------------------------------------


def mono_mul(u, v):
    return tuple(a + b for a, b in zip(u, v))


def mono_divides(u, v) -> bool:
    return all(a <= b for a, b in zip(u, v))


def mono_lcm(u, v):
    return tuple(max(a, b) for a, b in zip(u, v))


def mono_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def format_monomial(m, names=None) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 0:
            continue
        name = names[i] if names else f"e{i + 1}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_binomial(b: Binomial, names=None, order: TermOrder | None = None) -> str:
    hi, lo = b.oriented(order) if order else (b.plus, b.minus)
    return f"{format_monomial(hi, names)} - {format_monomial(lo, names)}"


# -- division ----------------------------------------------------------


def _reduce_monomial(m, leads_trails):
    changed = True
    while changed:
        changed = False
        for lead, trail in leads_trails:
            if mono_divides(lead, m):
                m = mono_mul(mono_sub(m, lead), trail)
                changed = True
    return m


def _reduce_pair(u, v, basis, order):
    """Fully reduce the binomial u - v; returns oriented pair or None if zero."""
    u = _reduce_monomial(u, basis)
    v = _reduce_monomial(v, basis)
    if u == v:
        return None
    return (u, v) if order.greater(u, v) else (v, u)


def normal_form(item, ideal: BinomialIdeal, order: TermOrder | None = None):
    """Remainder of a Binomial or bare monomial modulo a Groebner basis.

    Returns None for a binomial reducing to zero (ideal membership).
    """
    if not ideal.groebner:
        raise ValueError("normal form needs a Groebner basis")
    order = order or ideal.order
    basis = [g.oriented(order) for g in ideal.gens]
    if isinstance(item, Binomial):
        red = _reduce_pair(item.plus, item.minus, basis, order)
        return None if red is None else Binomial(*red)
    return _reduce_monomial(tuple(item), basis)


# -- Buchberger --------------------------------------------------------


def _interreduce(basis, order):
    # drop redundant leads, then put every trail in normal form
    basis = sorted(basis, key=lambda g: order.key(g[0]))
    kept = []
    for i, (lead, trail) in enumerate(basis):
        if any(mono_divides(l2, lead) for l2, _ in kept):
            continue
        kept.append((lead, trail))
    reduced = []
    for i, (lead, trail) in enumerate(kept):
        others = kept[:i] + kept[i + 1 :]
        trail = _reduce_monomial(trail, others)
        reduced.append((lead, trail))
    return reduced


def _buchberger_pairs(basis, order):
    work = list(basis)
    heap = []

    def push_pairs(k):
        lk = work[k][0]
        for i in range(k):
            li = work[i][0]
            lcm = mono_lcm(li, lk)
            if lcm == mono_mul(li, lk):  # coprime leads: S-pair reduces to zero
                continue
            heapq.heappush(heap, (order.key(lcm), i, k))

    for k in range(len(work)):
        push_pairs(k)
    while heap:
        _, i, j = heapq.heappop(heap)
        lf, tf = work[i]
        lg, tg = work[j]
        lcm = mono_lcm(lf, lg)
        u = mono_mul(tf, mono_sub(lcm, lf))
        v = mono_mul(tg, mono_sub(lcm, lg))
        red = _reduce_pair(u, v, work, order)
        if red is not None:
            work.append(red)
            push_pairs(len(work) - 1)
    return _interreduce(work, order)


def buchberger(ideal: BinomialIdeal, order: TermOrder | None = None) -> BinomialIdeal:
    """Reduced Groebner basis of a binomial ideal."""
    order = order or ideal.order or TermOrder()
    if not ideal.gens:
        return BinomialIdeal(ideal.n_vars, (), groebner=True, order=order)
    basis = [g.oriented(order) for g in ideal.gens]
    reduced = _buchberger_pairs(basis, order)
    gens = tuple(Binomial(lead, trail) for lead, trail in reduced)
    return BinomialIdeal(ideal.n_vars, gens, groebner=True, order=order)


# -- saturation and the toric ideal ------------------------------------


def saturate_variable(ideal: BinomialIdeal, j: int) -> BinomialIdeal:
    """Colon ideal I : e_j^infinity.

    Groebner basis in a degrevlex order with e_j cheapest, then each
    generator is divided by the largest power of e_j it carries (valid
    for the homogeneous binomials arising here).
    """
    if not ideal.gens:
        return ideal
    n = ideal.n_vars
    perm = tuple(i for i in range(n) if i != j) + (j,)
    gb = buchberger(ideal, TermOrder("degrevlex", perm))
    out = []
    for g in gb.gens:
        k = min(g.plus[j], g.minus[j])
        if k:
            plus = list(g.plus)
            minus = list(g.minus)
            plus[j] -= k
            minus[j] -= k
            g = Binomial(tuple(plus), tuple(minus))
        out.append(g)
    return BinomialIdeal(n, tuple(out))


def lattice_basis_ideal(graph: SimpleGraph) -> BinomialIdeal:
    """Binomials x^{v+} - x^{v-} over an integer kernel basis of M_G."""
    n = graph.n_edges
    gens = []
    for vec in integer_kernel_basis(graph.incidence_matrix()):
        plus = tuple(max(x, 0) for x in vec)
        minus = tuple(max(-x, 0) for x in vec)
        gens.append(Binomial(plus, minus))
    return BinomialIdeal(n, tuple(gens))


def toric_ideal(graph: SimpleGraph, order: TermOrder | None = None) -> BinomialIdeal:
    """I_G with a reduced Groebner basis attached (zero ideal allowed)."""
    order = order or TermOrder()
    ideal = lattice_basis_ideal(graph)
    for j in range(graph.n_edges):
        ideal = saturate_variable(ideal, j)
    return buchberger(BinomialIdeal(graph.n_edges, ideal.gens), order)


def initial_ideal(ideal: BinomialIdeal, order: TermOrder | None = None) -> list:
    """Minimal monomial generators of in(I) for the basis' own order."""
    order = order or ideal.order
    if not ideal.groebner or order != ideal.order:
        raise ValueError("initial ideal needs a Groebner basis for the given order")
    leads = [g.oriented(order)[0] for g in ideal.gens]
    return sorted(leads, key=order.key)


def minimal_generators(ideal: BinomialIdeal) -> list:
    """A minimal homogeneous generating set (its size is beta_1).

    Groebner elements are screened by ascending degree; one is kept iff it
    does not reduce to zero against the ideal of those already kept.
    """
    if not ideal.groebner:
        ideal = buchberger(ideal)
    order = ideal.order
    cands = sorted(ideal.gens, key=lambda g: (g.degree, order.key(g.oriented(order)[0])))
    kept: list[Binomial] = []
    kept_gb: list = []
    for g in cands:
        if kept_gb:
            if _reduce_pair(g.plus, g.minus, kept_gb, order) is None:
                continue
        kept.append(g)
        kept_gb = _buchberger_pairs([b.oriented(order) for b in kept], order)
    return kept


def reduces_to_zero(gens, against: BinomialIdeal) -> bool:
    """True iff every binomial in ``gens`` lies in the Groebner ideal."""
    return all(normal_form(g, against) is None for g in gens)
