from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import strategies as st

from flagcollapse import build_graph, clique_complex, complete_graph

# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}

RP2_FACES = [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 2, 4), (2, 3, 5), (1, 3, 4), (1, 3, 5), (2, 4, 5),
]


def octahedron_graph():
    # K_{2,2,2}: antipodal pairs (0,1), (2,3), (4,5)
    return build_graph(6, [(u, v) for u, v in combinations(range(6), 2) if u // 2 != v // 2])


def overlap_example():
    """Clique complex where two flag closures of relevant 3-subcomplexes share a 3-face.

    The tetrahedron on {0,1,2,3} is a component of its own, but each of its
    edges sits in a strip of tetrahedra belonging to one large component, so
    the large component's flag closure contains it too.
    """
    nxt = iter(range(4, 100))
    u1, u2 = next(nxt), next(nxt)
    edges = set(combinations(range(4), 2))
    tets, pq = [], []
    for x, y in combinations(range(4), 2):
        p, q, w = next(nxt), next(nxt), next(nxt)
        pq.append((p, q))
        tets += [(x, y, p, q), (x, p, q, w), (p, q, w, u1), (p, q, u1, u2)]
    for (_, q), (p2, _) in zip(pq, pq[1:]):
        tets.append((q, u1, u2, p2))
    for t in tets:
        edges |= set(combinations(sorted(t), 2))
    return clique_complex(build_graph(1 + max(max(e) for e in edges), edges))


@pytest.fixture
def octahedron():
    return clique_complex(octahedron_graph())


@pytest.fixture
def c4():
    return clique_complex(build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))


@pytest.fixture
def k3():
    return clique_complex(complete_graph(3))


@pytest.fixture
def k4():
    return clique_complex(complete_graph(4))


@pytest.fixture
def bowtie():
    return clique_complex(build_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]))


@pytest.fixture
def path3():
    return clique_complex(build_graph(3, [(0, 1), (1, 2)]))


@st.composite
def graphs(draw, max_n: int = 9, min_n: int = 1):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def complexes(draw, max_n: int = 9, min_n: int = 1):
    return clique_complex(draw(graphs(max_n, min_n)))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'} ({detail})")
