"""Edge-list and maximal-face JSON formats."""

from __future__ import annotations

import json
from pathlib import Path

from .complex import (
    DEFAULT_FACE_BUDGET,
    CliqueComplex,
    Graph,
    build_graph,
    clique_complex,
    downward_closure,
    edges_of,
    simplex,
)


def read_edge_list(path) -> Graph:
    """Header ``n m`` then ``m`` lines ``u v`` (0-based, whitespace separated)."""
    tokens = Path(path).read_text().split()
    if len(tokens) < 2:
        raise ValueError("edge list needs an 'n m' header")
    n, m = int(tokens[0]), int(tokens[1])
    body = tokens[2:]
    if len(body) != 2 * m:
        raise ValueError(f"header announces {m} edges, found {len(body) / 2:g}")
    edges = [(int(body[i]), int(body[i + 1])) for i in range(0, len(body), 2)]
    return build_graph(n, edges)


def write_edge_list(g: Graph, path) -> None:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    Path(path).write_text("\n".join(lines) + "\n")


def read_complex_json(path) -> tuple[int, list[tuple[int, ...]]]:
    """Return ``(n, maximal faces)`` from ``{"n": int, "faces": [[ints]]}``."""
    obj = json.loads(Path(path).read_text())
    n = int(obj["n"])
    faces = [simplex(f) for f in obj["faces"]]
    for f in faces:
        if f[0] < 0 or f[-1] >= n:
            raise ValueError(f"face {list(f)} has a vertex outside 0..{n - 1}")
    return n, faces


def write_complex_json(c: CliqueComplex, path) -> None:
    obj = {"n": c.graph.n, "faces": [list(f) for f in c.maximal_faces()]}
    Path(path).write_text(json.dumps(obj))


def _is_json(path) -> bool:
    text = Path(path).read_text().lstrip()
    return text.startswith("{")


def load_clique_complex(path, budget: int = DEFAULT_FACE_BUDGET) -> CliqueComplex:
    """Load either format as a clique complex on vertices ``0..n-1``.

    A JSON face list must already be a clique complex: its flag closure may
    not add faces.
    """
    if not _is_json(path):
        return clique_complex(read_edge_list(path), budget=budget)
    n, faces = read_complex_json(path)
    c = clique_complex(build_graph(n, edges_of(faces)), budget=budget)
    listed = downward_closure(faces)
    n_listed = sum(map(len, listed)) + n - len(listed[0] if listed else ())
    if c.num_faces != n_listed:
        raise ValueError("JSON complex is not a clique complex (its flag closure adds faces)")
    return c


def load_face_lists(path, budget: int = DEFAULT_FACE_BUDGET) -> list[set[tuple[int, ...]]]:
    """Load either format as plain face lists (JSON need not be a clique complex)."""
    if not _is_json(path):
        return clique_complex(read_edge_list(path), budget=budget).face_lists()
    n, faces = read_complex_json(path)
    return downward_closure(faces + [(v,) for v in range(n)])
