"""Graphs, clique complexes and the structural operations on them.

Simplices are strictly increasing tuples of vertex ids. A clique complex is
determined by a graph together with the vertex set it is induced on; links
and flag closures keep the original vertex ids so that collapses found in a
link can be lifted back into the ambient complex.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

Simplex = tuple[int, ...]

DEFAULT_FACE_BUDGET = 5_000_000


class FaceBudgetExceeded(RuntimeError):
    """Clique enumeration produced more faces than the configured budget."""


def simplex(vertices: Iterable[int]) -> Simplex:
    s = tuple(sorted(set(vertices)))
    if not s:
        raise ValueError("empty simplex")
    return s


def dim(s: Simplex) -> int:
    return len(s) - 1


def facets_of(s: Simplex) -> Iterator[Simplex]:
    """Codimension-1 faces of ``s`` (nothing for a vertex)."""
    if len(s) > 1:
        for i in range(len(s)):
            yield s[:i] + s[i + 1:]


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency must have one list per vertex")
        for v, nbrs in enumerate(self.adjacency):
            if any(a >= b for a, b in zip(nbrs, nbrs[1:])):
                raise ValueError(f"neighbors of {v} not strictly sorted")
            for u in nbrs:
                if u == v:
                    raise ValueError(f"self-loop at {v}")
                if not 0 <= u < self.n or v not in self.neighbor_sets[u]:
                    raise ValueError(f"asymmetric adjacency at ({v}, {u})")

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(map(len, self.adjacency)) // 2


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple undirected graph on vertices ``0..n-1``.

    Duplicate pairs (in either orientation) are merged. Raises ``ValueError``
    on self-loops or out-of-range ids.
    """
    if n < 0:
        raise ValueError("negative vertex count")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"vertex id out of range in edge ({u}, {v}) for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(tuple(sorted(a)) for a in adj))


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


@dataclass(frozen=True, eq=False)
class CliqueComplex:
    """Clique complex of ``graph`` induced on ``vertices``.

    ``faces[d]`` holds every ``d``-dimensional clique. When ``complete`` is
    false the enumeration stopped at ``dim_cap`` while larger cliques exist.
    """

    graph: Graph
    vertices: frozenset[int]
    faces: tuple[frozenset[Simplex], ...]
    dim_cap: int | None = None
    complete: bool = True

    @property
    def dim(self) -> int:
        """Dimension of the complex; -1 when empty."""
        return len(self.faces) - 1

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(f) for f in self.faces)

    @property
    def num_faces(self) -> int:
        return sum(self.f_vector)

    def faces_of_dim(self, d: int) -> frozenset[Simplex]:
        if 0 <= d < len(self.faces):
            return self.faces[d]
        return frozenset()

    def __contains__(self, s) -> bool:
        return tuple(s) in self.faces_of_dim(len(s) - 1)

    def __iter__(self) -> Iterator[Simplex]:
        for layer in self.faces:
            yield from layer

    def __len__(self) -> int:
        return self.num_faces

    def face_lists(self) -> list[set[Simplex]]:
        return [set(f) for f in self.faces]

    def maximal_faces(self) -> list[Simplex]:
        return maximal_faces(self.faces)

    def edges(self) -> list[Simplex]:
        return sorted(self.faces_of_dim(1))

    def induced(self, vertices: Iterable[int], budget: int = DEFAULT_FACE_BUDGET) -> CliqueComplex:
        """Full subcomplex on a subset of this complex's vertices."""
        vs = frozenset(vertices)
        if not vs <= self.vertices:
            raise ValueError("induced vertex set not contained in complex")
        return clique_complex(self.graph, self.dim_cap, vertices=vs, budget=budget)

    def __repr__(self):
        return f"CliqueComplex(n_vertices={len(self.vertices)}, f={self.f_vector})"


def clique_complex(
    g: Graph,
    dim_cap: int | None = None,
    vertices: Iterable[int] | None = None,
    budget: int = DEFAULT_FACE_BUDGET,
) -> CliqueComplex:
    """Enumerate all cliques of ``g`` (restricted to ``vertices``) as faces.

    ``dim_cap=None`` enumerates every clique. Exceeding ``budget`` faces
    raises :class:`FaceBudgetExceeded` rather than truncating.
    """
    if dim_cap is not None and dim_cap < 1:
        raise ValueError("dim_cap must be at least 1")
    vs = frozenset(range(g.n)) if vertices is None else frozenset(vertices)
    if any(not 0 <= v < g.n for v in vs):
        raise ValueError("vertex outside graph")
    up = {v: frozenset(u for u in g.adjacency[v] if u > v and u in vs) for v in vs}
    max_size = None if dim_cap is None else dim_cap + 1
    layers: list[list[Simplex]] = []
    count = 0
    complete = True

    # depth-first extension by larger common neighbours: every clique once
    stack: list[tuple[Simplex, frozenset[int]]] = [((v,), up[v]) for v in sorted(vs, reverse=True)]
    while stack:
        s, cand = stack.pop()
        count += 1
        if count > budget:
            raise FaceBudgetExceeded(f"more than {budget} faces; instance too dense")
        d = len(s) - 1
        if d == len(layers):
            layers.append([])
        layers[d].append(s)
        if not cand:
            continue
        if max_size is not None and len(s) >= max_size:
            complete = False
            continue
        for w in sorted(cand, reverse=True):
            stack.append((s + (w,), cand & up[w]))

    return CliqueComplex(
        graph=g,
        vertices=vs,
        faces=tuple(frozenset(layer) for layer in layers),
        dim_cap=dim_cap,
        complete=complete,
    )


def maximal_faces(faces: Iterable[Iterable[Simplex]]) -> list[Simplex]:
    """Faces of a downward-closed face list that lie in no larger face."""
    layers = [set(layer) for layer in faces]
    covered: set[Simplex] = set()
    for layer in layers[1:]:
        for s in layer:
            covered.update(facets_of(s))
    return sorted((s for layer in layers for s in layer if s not in covered), key=lambda s: (len(s), s))


def vsupp(faces: Iterable[Simplex]) -> frozenset[int]:
    """Vertex support: every vertex appearing in some face."""
    return frozenset(v for s in faces for v in s)


def edges_of(faces: Iterable[Simplex]) -> set[Simplex]:
    """1-faces of the complex generated by ``faces``."""
    out: set[Simplex] = set()
    for s in faces:
        if len(s) == 2:
            out.add(s)
        elif len(s) > 2:
            out.update(combinations(s, 2))
    return out


def degrees_in(faces: Iterable[Simplex]) -> dict[int, int]:
    """Vertex degrees in the 1-skeleton of the complex generated by ``faces``."""
    faces = list(faces)
    deg = dict.fromkeys(vsupp(faces), 0)
    for u, v in edges_of(faces):
        deg[u] += 1
        deg[v] += 1
    return deg


def vertex_degree_in(s, v: int) -> int:
    """Number of edges of ``s`` containing ``v``.

    ``s`` may be a :class:`CliqueComplex` or any collection of simplices,
    read as the complex they generate.
    """
    faces = list(s)
    if v not in vsupp(faces):
        raise ValueError(f"vertex {v} not in the support")
    return sum(1 for e in edges_of(faces) if v in e)


def star(c: CliqueComplex, v: int) -> frozenset[Simplex]:
    """All faces of ``c`` containing ``v``; not closed under taking faces."""
    if v not in c.vertices:
        raise ValueError(f"vertex {v} not in complex")
    return frozenset(s for s in c if v in s)


def link(c: CliqueComplex, v: int) -> CliqueComplex:
    """Link of a vertex, keeping the original vertex ids.

    For a clique complex this is the clique complex induced on the
    neighbours of ``v``.
    """
    if v not in c.vertices:
        raise ValueError(f"vertex {v} not in complex")
    nbrs = c.graph.neighbor_sets[v] & c.vertices
    cap = None if c.dim_cap is None else max(c.dim_cap - 1, 1)
    return clique_complex(c.graph, cap, vertices=nbrs)


def skeleton(c: CliqueComplex, i: int) -> CliqueComplex:
    if i < 0:
        raise ValueError("skeleton dimension must be non-negative")
    if i >= c.dim:
        return c
    return CliqueComplex(
        graph=c.graph,
        vertices=c.vertices,
        faces=c.faces[: i + 1],
        dim_cap=max(i, 1),
        complete=False,
    )


def flag_closure(faces: Iterable[Simplex], n: int | None = None, budget: int = DEFAULT_FACE_BUDGET) -> CliqueComplex:
    """Clique complex of the 1-skeleton of ``faces``.

    ``n`` is the size of the ambient vertex range; defaults to one more
    than the largest vertex id present.
    """
    if isinstance(faces, CliqueComplex):
        n = faces.graph.n if n is None else n
        faces = list(faces.faces_of_dim(0)) + list(faces.faces_of_dim(1))
    faces = list(faces)
    support = vsupp(faces)
    if n is None:
        n = max(support, default=-1) + 1
    g = build_graph(n, edges_of(faces))
    return clique_complex(g, vertices=support, budget=budget)


def downward_closure(faces: Iterable[Iterable[int]]) -> list[set[Simplex]]:
    """All nonempty subfaces of the given faces, grouped by dimension."""
    layers: list[set[Simplex]] = []
    frontier = {simplex(f) for f in faces}
    while frontier:
        for s in frontier:
            d = len(s) - 1
            while len(layers) <= d:
                layers.append(set())
            layers[d].add(s)
        frontier = {t for s in frontier for t in facets_of(s) if t not in layers[len(t) - 1]}
    return layers


def as_face_lists(obj) -> list[set[Simplex]]:
    """Normalise a complex-like object to per-dimension sets of simplices."""
    if isinstance(obj, CliqueComplex):
        return obj.face_lists()
    if hasattr(obj, "face_lists"):
        return obj.face_lists()
    obj = list(obj)
    if obj and all(isinstance(layer, (set, frozenset)) for layer in obj):
        # already grouped by dimension
        return [set(layer) for layer in obj]
    layers: list[set[Simplex]] = []
    for f in obj:
        s = simplex(f)
        while len(layers) < len(s):
            layers.append(set())
        layers[len(s) - 1].add(s)
    return layers


def is_downward_closed(layers: list[set[Simplex]]) -> bool:
    for d in range(1, len(layers)):
        below = layers[d - 1]
        for s in layers[d]:
            if any(t not in below for t in facets_of(s)):
                return False
    return True


def fingerprint(faces) -> str:
    """SHA-256 over the sorted maximal faces; identifies a complex independent of storage order."""
    payload = json.dumps([list(s) for s in maximal_faces(as_face_lists(faces))], separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()
