"""Maximal strongly connected pure subcomplexes and their flag closures."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from scipy.cluster.hierarchy import DisjointSet

from .complex import (
    DEFAULT_FACE_BUDGET,
    CliqueComplex,
    Simplex,
    degrees_in,
    edges_of,
    facets_of,
    flag_closure,
    vsupp,
)


@dataclass(frozen=True)
class RelevantSubcomplex:
    """A pure ``d``-dimensional, strongly connected subcomplex, stored by its facets."""

    d: int
    facets: frozenset[Simplex]
    support: frozenset[int]

    @classmethod
    def from_facets(cls, d: int, facets: Iterable[Simplex]) -> RelevantSubcomplex:
        facets = frozenset(facets)
        if not facets:
            raise ValueError("a relevant subcomplex needs at least one facet")
        if any(len(f) != d + 1 for f in facets):
            raise ValueError(f"all facets must have dimension {d}")
        return cls(d, facets, vsupp(facets))

    def sorted_facets(self) -> list[Simplex]:
        return sorted(self.facets)

    def edges(self) -> set[Simplex]:
        return edges_of(self.facets)

    def degrees(self) -> dict[int, int]:
        return degrees_in(self.facets)

    def min_degree(self) -> int:
        return min(self.degrees().values())

    def is_strongly_connected(self) -> bool:
        return len(adjacency_components(self.facets)) == 1

    def to_json(self) -> dict:
        return {"d": self.d, "facets": [list(f) for f in self.sorted_facets()], "support": sorted(self.support)}


def adjacency_components(facets: Iterable[Simplex]) -> list[list[Simplex]]:
    """Group equal-dimension faces into classes of the "share a codim-1 face" relation.

    Each class comes back sorted; classes are ordered by their least facet.
    """
    facets = sorted(set(facets))
    if not facets:
        return []
    if len(facets[0]) == 1:
        # vertices share no (-1)-face: every vertex is its own component
        return [[f] for f in facets]
    ds = DisjointSet(facets)
    first_owner: dict[Simplex, Simplex] = {}
    for f in facets:
        for ridge in facets_of(f):
            owner = first_owner.setdefault(ridge, f)
            if owner != f:
                ds.merge(owner, f)
    groups: dict[Simplex, list[Simplex]] = defaultdict(list)
    for f in facets:
        groups[ds[f]].append(f)
    return sorted(groups.values(), key=lambda g: g[0])


def facet_adjacency_components(c, d: int) -> list[RelevantSubcomplex]:
    """Maximal relevant ``d``-subcomplexes of ``c``.

    ``c`` is a complex (anything with ``faces_of_dim``) or a plain collection
    of ``d``-simplices.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    faces = c.faces_of_dim(d) if hasattr(c, "faces_of_dim") else c
    return [RelevantSubcomplex.from_facets(d, comp) for comp in adjacency_components(faces)]


def closure_partition(
    c: CliqueComplex, d: int, budget: int = DEFAULT_FACE_BUDGET
) -> list[tuple[RelevantSubcomplex, CliqueComplex]]:
    """Pair every maximal relevant ``d``-subcomplex with its flag closure."""
    n = c.graph.n
    return [(s, flag_closure(s.facets, n, budget=budget)) for s in facet_adjacency_components(c, d)]


@dataclass
class IntersectionReport:
    passed: bool
    violations: list[tuple[tuple[int, int], Simplex]]

    def to_json(self) -> dict:
        return {
            "pass": self.passed,
            "violations": [{"pair": list(pair), "face": list(face)} for pair, face in self.violations],
        }


def check_intersection_bound(pairs, d: int) -> IntersectionReport:
    """Check pairwise intersections of the closures in a closure partition.

    Two distinct closures may share no face of dimension ``d``, and a shared
    ``(d-1)``-face must be maximal in at least one of them.
    """
    closures = [cl for _, cl in pairs]
    owners_top: dict[Simplex, list[int]] = defaultdict(list)
    owners_ridge: dict[Simplex, list[int]] = defaultdict(list)
    covered_ridges: list[set[Simplex]] = []
    for i, cl in enumerate(closures):
        for s in cl.faces_of_dim(d):
            owners_top[s].append(i)
        covered = {r for s in cl.faces_of_dim(d) for r in facets_of(s)}
        covered_ridges.append(covered)
        for r in cl.faces_of_dim(d - 1):
            owners_ridge[r].append(i)

    violations = []
    for s, owners in sorted(owners_top.items()):
        for i, j in combinations(owners, 2):
            violations.append(((i, j), s))
    for r, owners in sorted(owners_ridge.items()):
        for i, j in combinations(owners, 2):
            if r in covered_ridges[i] and r in covered_ridges[j]:
                violations.append(((i, j), r))
    return IntersectionReport(not violations, violations)
