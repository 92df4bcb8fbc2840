"""Deciding whether every relevant (k+1)-subcomplex has a vertex of degree <= 2k+1."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from .complex import CliqueComplex, Graph, degrees_in, vsupp
from .relevant import RelevantSubcomplex, adjacency_components, facet_adjacency_components

SATISFIED = "satisfied"
VIOLATED = "violated"
INCONCLUSIVE = "inconclusive"

BRUTE_FORCE_MAX_FACETS = 12
BRUTE_FORCE_MAX_VERTICES = 16


@dataclass
class ConditionReport:
    status: str
    k: int
    witness: RelevantSubcomplex | None = None
    peel_order: list[tuple[int, int]] | None = None

    @property
    def satisfied(self) -> bool:
        return self.status == SATISFIED

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "k": self.k,
            "witness": None if self.witness is None else [list(f) for f in self.witness.sorted_facets()],
            "peel_order": None if self.peel_order is None else [list(p) for p in self.peel_order],
        }


def check_condition(c: CliqueComplex, k: int) -> ConditionReport:
    """Exact decision by peeling.

    Repeatedly split the remaining (k+1)-faces into facet-adjacency
    components and, in each, delete every face through the least vertex of
    minimum degree. A component whose minimum degree exceeds 2k+1 is a
    counterexample; it can never be peeled because its vertices keep degree
    >= 2k+2 inside any component containing it.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    bound = 2 * k + 1
    faces = set(c.faces_of_dim(k + 1))
    peel: list[tuple[int, int]] = []
    comp_id = 0
    while faces:
        comps = facet_adjacency_components(faces, k + 1)
        degrees = [comp.degrees() for comp in comps]
        for comp, deg in zip(comps, degrees):
            if min(deg.values()) > bound:
                return ConditionReport(VIOLATED, k, witness=comp, peel_order=peel)
        for comp, deg in zip(comps, degrees):
            m = min(deg.values())
            v = min(u for u, du in deg.items() if du == m)
            faces -= {f for f in comp.facets if v in f}
            peel.append((v, comp_id))
            comp_id += 1
    return ConditionReport(SATISFIED, k, peel_order=peel)


def core_prefilter(g: Graph, d: int) -> frozenset[int]:
    """Vertices of the ``d``-core of ``g``.

    A counterexample at parameter k lives on a subgraph of minimum degree
    2k+2, so an empty (2k+2)-core means the condition holds.
    """
    if d < 1:
        raise ValueError("degree bound must be at least 1")
    return frozenset(nx.k_core(to_networkx(g), d).nodes)


def prefilter_condition(c: CliqueComplex, k: int) -> ConditionReport:
    """Sound shortcut: satisfied when the (2k+2)-core is empty, else inconclusive."""
    h = to_networkx(c.graph).subgraph(c.vertices)
    if nx.k_core(h, 2 * k + 2).number_of_nodes():
        return ConditionReport(INCONCLUSIVE, k)
    return ConditionReport(SATISFIED, k)


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def _violates(facets, bound: int) -> bool:
    return min(degrees_in(facets).values()) > bound


def brute_force_condition(c: CliqueComplex, k: int, method: str = "auto") -> ConditionReport:
    """Exhaustive test oracle for :func:`check_condition`.

    ``facets``: every nonempty subset of (k+1)-faces that is strongly
    connected is checked directly (at most 12 faces). ``vertices``: for every
    vertex subset U, each facet-adjacency component of the faces inside U is
    checked; a violating subcomplex T shows up at U = vsupp(T), inside a
    component whose degrees dominate those of T. ``auto`` picks ``facets``
    when small enough.
    """
    faces = sorted(c.faces_of_dim(k + 1))
    bound = 2 * k + 1
    if method == "auto":
        method = "facets" if len(faces) <= BRUTE_FORCE_MAX_FACETS else "vertices"
    if method == "facets":
        if len(faces) > BRUTE_FORCE_MAX_FACETS:
            raise ValueError(f"{len(faces)} facets exceed the oracle bound {BRUTE_FORCE_MAX_FACETS}")
        for mask in range(1, 1 << len(faces)):
            sub = [f for i, f in enumerate(faces) if mask >> i & 1]
            if _violates(sub, bound) and len(adjacency_components(sub)) == 1:
                return ConditionReport(VIOLATED, k, witness=RelevantSubcomplex.from_facets(k + 1, sub))
        return ConditionReport(SATISFIED, k)
    if method == "vertices":
        support = sorted(vsupp(faces))
        if len(support) > BRUTE_FORCE_MAX_VERTICES:
            raise ValueError(f"{len(support)} vertices exceed the oracle bound {BRUTE_FORCE_MAX_VERTICES}")
        for r in range(k + 2, len(support) + 1):
            for u in combinations(support, r):
                inside = set(u)
                sub = [f for f in faces if inside.issuperset(f)]
                for comp in adjacency_components(sub):
                    if vsupp(comp) == inside and _violates(comp, bound):
                        return ConditionReport(VIOLATED, k, witness=RelevantSubcomplex.from_facets(k + 1, comp))
        return ConditionReport(SATISFIED, k)
    raise ValueError(f"unknown method {method!r}")

