"""Elementary collapses and the constructive collapse algorithm.

``collapse_to_dim(c, k)`` tries to remove every face of dimension ``> k``
using elementary collapses whose free face has dimension ``>= k``. The
``theorem`` strategy follows the vertex-by-vertex induction: inside the flag
closure of each maximal relevant ``(k+1)``-subcomplex pick a vertex of degree
at most ``2k+1``, collapse its link (cone shortcut or recursion on ``k-1``),
lift the steps back by joining the vertex, and continue on what remains.
"""

from __future__ import annotations

import heapq
import json
import logging
from dataclasses import dataclass
from itertools import chain, combinations
from pathlib import Path

from .complex import (
    DEFAULT_FACE_BUDGET,
    CliqueComplex,
    Simplex,
    as_face_lists,
    facets_of,
    fingerprint,
    is_downward_closed,
    link,
    simplex,
)
from .relevant import RelevantSubcomplex, closure_partition

log = logging.getLogger(__name__)

STRATEGIES = ("theorem", "greedy")


class CollapseError(ValueError):
    """A collapse step that cannot be applied to the current complex."""


@dataclass(frozen=True, order=True)
class CollapseStep:
    free_face: Simplex
    coface: Simplex

    def __post_init__(self):
        if len(self.coface) != len(self.free_face) + 1 or not set(self.free_face) < set(self.coface):
            raise ValueError(f"not an elementary pair: {self.free_face} < {self.coface}")

    @property
    def dim(self) -> int:
        """Dimension of the free face."""
        return len(self.free_face) - 1

    def to_json(self) -> dict:
        return {"free": list(self.free_face), "coface": list(self.coface)}

    @classmethod
    def from_json(cls, obj: dict) -> CollapseStep:
        return cls(tuple(obj["free"]), tuple(obj["coface"]))


@dataclass
class CollapseCertificate:
    """Replayable record of a collapse: ``final_dim <= k`` and every free face has dim ``>= k``."""

    k: int
    steps: list[CollapseStep]
    fingerprint: str
    final_dim: int

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "fingerprint": self.fingerprint,
            "steps": [s.to_json() for s in self.steps],
            "final_dim": self.final_dim,
        }

    @classmethod
    def from_json(cls, obj: dict) -> CollapseCertificate:
        return cls(
            k=int(obj["k"]),
            steps=[CollapseStep.from_json(s) for s in obj["steps"]],
            fingerprint=str(obj["fingerprint"]),
            final_dim=int(obj["final_dim"]),
        )

    def dump(self, path) -> None:
        Path(path).write_text(json.dumps(self.to_json()))

    @classmethod
    def load(cls, path) -> CollapseCertificate:
        return cls.from_json(json.loads(Path(path).read_text()))


@dataclass
class CollapseOutcome:
    strategy: str
    k: int
    certificate: CollapseCertificate | None = None
    witness: RelevantSubcomplex | None = None
    steps_tried: int = 0
    greedy_fallback: bool = False

    @property
    def success(self) -> bool:
        return self.certificate is not None

    @property
    def status(self) -> str:
        if self.success:
            return "success"
        # greedy failures say nothing about collapsibility
        return "failure" if self.witness is not None else "unknown"


class WorkingComplex:
    """Mutable face store with cofacet index, used while replaying collapses."""

    def __init__(self, layers):
        self.layers: list[set[Simplex]] = [set(layer) for layer in layers]
        if not is_downward_closed(self.layers):
            raise ValueError("working complex must be downward closed")
        self._cofacets: dict[Simplex, set[Simplex]] = {}
        for layer in self.layers[1:]:
            for s in layer:
                for t in facets_of(s):
                    self._cofacets.setdefault(t, set()).add(s)
        self._trim()

    @classmethod
    def from_complex(cls, c) -> WorkingComplex:
        return cls(as_face_lists(c))

    def copy(self) -> WorkingComplex:
        return WorkingComplex(self.layers)

    def _trim(self) -> None:
        while self.layers and not self.layers[-1]:
            self.layers.pop()

    @property
    def dim(self) -> int:
        return len(self.layers) - 1

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.layers)

    def euler(self) -> int:
        return sum((-1) ** d * n for d, n in enumerate(self.f_vector))

    def face_lists(self) -> list[set[Simplex]]:
        return [set(layer) for layer in self.layers]

    def __contains__(self, s) -> bool:
        s = tuple(s)
        d = len(s) - 1
        return 0 <= d < len(self.layers) and s in self.layers[d]

    def cofacets(self, s: Simplex) -> set[Simplex]:
        return self._cofacets.get(s, set())

    def free_coface(self, s: Simplex) -> Simplex | None:
        """The unique cofacet of ``s`` if ``s`` is a free face, else None.

        In a downward-closed complex a face with exactly one cofacet lies in a
        unique maximal face, namely that cofacet.
        """
        if s not in self:
            return None
        cof = self.cofacets(s)
        if len(cof) == 1:
            return next(iter(cof))
        return None

    def collapse(self, step: CollapseStep) -> None:
        s, t = step.free_face, step.coface
        if s not in self:
            raise CollapseError(f"free face {s} not present")
        if t not in self:
            raise CollapseError(f"coface {t} not present")
        if self.cofacets(s) != {t}:
            raise CollapseError(f"{s} is not a free face of {t}")
        self.layers[len(t) - 1].discard(t)
        self.layers[len(s) - 1].discard(s)
        for r in facets_of(t):
            self._cofacets[r].discard(t)
        for r in facets_of(s):
            self._cofacets[r].discard(s)
        self._cofacets.pop(s, None)
        self._cofacets.pop(t, None)
        self._trim()


def find_free_faces(c, min_dim: int) -> list[CollapseStep]:
    """Every elementary pair available in ``c`` with free face of dim ``>= min_dim``."""
    if min_dim < 0:
        raise ValueError("min_dim must be non-negative")
    w = c if isinstance(c, WorkingComplex) else WorkingComplex.from_complex(c)
    steps = []
    for d in range(min_dim, w.dim):
        for s in w.layers[d]:
            t = w.free_coface(s)
            if t is not None:
                steps.append(CollapseStep(s, t))
    return sorted(steps)


def elementary_collapse(c, step: CollapseStep) -> WorkingComplex:
    """Return a copy of ``c`` with one elementary collapse applied."""
    w = c.copy() if isinstance(c, WorkingComplex) else WorkingComplex.from_complex(c)
    w.collapse(step)
    return w


def expand_interval(sigma, tau) -> list[CollapseStep]:
    """Factor the collapse of the interval ``[sigma, tau]`` into elementary steps.

    With ``w`` the least vertex of ``tau - sigma``, every ``eta`` in the
    interval avoiding ``w`` is paired with ``eta + w``, largest first.
    """
    sigma, tau = simplex(sigma), simplex(tau)
    extra = sorted(set(tau) - set(sigma))
    if not set(sigma) < set(tau):
        raise ValueError(f"{sigma} is not a proper face of {tau}")
    w, rest = extra[0], extra[1:]
    steps = []
    for r in range(len(rest), -1, -1):
        for add in combinations(rest, r):
            eta = simplex(sigma + add)
            steps.append(CollapseStep(eta, simplex(eta + (w,))))
    return steps


def _universal_vertices(c: CliqueComplex) -> list[int]:
    nbrs = c.graph.neighbor_sets
    return [x for x in sorted(c.vertices) if c.vertices - {x} <= nbrs[x]]


def cone_collapse(c: CliqueComplex, apex: int, target_dim: int) -> list[CollapseStep]:
    """Collapse a cone from its apex down to dimension ``< target_dim``.

    Pairs each apex-free face of dim ``>= target_dim - 1`` with its join to
    the apex, largest faces first.
    """
    if target_dim < 1:
        raise ValueError("target_dim must be at least 1")
    if not c.complete:
        raise ValueError("cone collapse needs a fully enumerated complex")
    if apex not in _universal_vertices(c):
        raise ValueError(f"vertex {apex} is not adjacent to every other vertex")
    base = [s for s in c if apex not in s and len(s) >= target_dim]
    base.sort(key=lambda s: (-len(s), s))
    return [CollapseStep(s, simplex(s + (apex,))) for s in base]


def collapse_link_to_dim(lk: CliqueComplex, k: int, budget: int = DEFAULT_FACE_BUDGET) -> list[CollapseStep]:
    """Collapse a link on at most ``2k+1`` vertices to dimension ``<= k-1``.

    A universal vertex gives a cone; otherwise every relevant ``k``-subcomplex
    of the link has a vertex of degree ``<= 2k-1`` and the theorem strategy
    with parameter ``k-1`` applies.
    """
    if k < 1:
        raise ValueError("link collapse needs k >= 1")
    if len(lk.vertices) > 2 * k + 1:
        raise ValueError(f"link has {len(lk.vertices)} > {2 * k + 1} vertices")
    if lk.dim <= k - 1:
        return []
    universal = _universal_vertices(lk)
    if universal:
        return cone_collapse(lk, universal[0], k)
    out = collapse_to_dim(lk, k - 1, "theorem", budget)
    if not out.success:
        raise RuntimeError(f"link without universal vertex could not be collapsed: {out.status}")
    return out.certificate.steps


def lift_steps(steps, v: int, k: int | None = None) -> list[CollapseStep]:
    """Join ``v`` to both faces of every step.

    With ``k`` given, free faces must have dim ``>= k-1`` so the lifted free
    faces have dim ``>= k``.
    """
    lifted = []
    for st in steps:
        if v in st.coface:
            raise ValueError(f"vertex {v} already in {st.coface}")
        if k is not None and st.dim < k - 1:
            raise ValueError(f"step {st} has free face below dimension {k - 1}")
        lifted.append(CollapseStep(simplex(st.free_face + (v,)), simplex(st.coface + (v,))))
    return lifted


def _pick_vertex(s: RelevantSubcomplex, k: int) -> int | None:
    cands = [(deg, v) for v, deg in s.degrees().items() if deg <= 2 * k + 1]
    return min(cands)[1] if cands else None


class _ClosureOverlap(Exception):
    """A lifted step met a face already removed while processing another closure.

    Distinct flag closures can share faces of dimension >= k+1 once k >= 2,
    so an earlier closure may have collapsed part of a later one.
    """


def _theorem_steps(c: CliqueComplex, k: int, budget: int, work: WorkingComplex, steps: list[CollapseStep]):
    """Run the induction on ``c``, applying steps to ``work`` and appending them to ``steps``.

    Returns the witness subcomplex on failure, else None.
    """

    def process(amb: CliqueComplex) -> RelevantSubcomplex | None:
        for s, closure in closure_partition(amb, k + 1, budget):
            v = _pick_vertex(s, k)
            if v is None:
                return s
            if k == 0:
                # leaf of a tree component: pair the vertex with its only edge
                (w,) = closure.graph.neighbor_sets[v] & closure.vertices
                lifted = [CollapseStep((v,), simplex((v, w)))]
            else:
                lifted = lift_steps(collapse_link_to_dim(link(closure, v), k, budget), v, k)
            for st in lifted:
                try:
                    work.collapse(st)
                except CollapseError as exc:
                    raise _ClosureOverlap(str(exc)) from exc
                steps.append(st)
            witness = process(closure.induced(closure.vertices - {v}, budget))
            if witness is not None:
                return witness
        return None

    return process(c)


def _greedy_steps(work: WorkingComplex, k: int) -> list[CollapseStep]:
    """Apply free faces of dim >= k to ``work``, highest dimension first."""
    heap = [(-len(s), s) for d in range(k, work.dim) for s in work.layers[d] if work.free_coface(s)]
    heapq.heapify(heap)
    steps = []
    while work.dim > k and heap:
        _, s = heapq.heappop(heap)
        t = work.free_coface(s)
        if t is None:
            continue
        step = CollapseStep(s, t)
        work.collapse(step)
        steps.append(step)
        for r in chain(facets_of(t), facets_of(s)):
            if len(r) - 1 >= k and work.free_coface(r) is not None:
                heapq.heappush(heap, (-len(r), r))
    return steps


def collapse_to_dim(c, k: int, strategy: str = "theorem", budget: int = DEFAULT_FACE_BUDGET) -> CollapseOutcome:
    """Try to collapse ``c`` to dimension ``<= k`` (i.e. show it is ``(k+1)``-collapsible).

    ``theorem`` fails only with a witness: a strongly connected pure
    ``(k+1)``-subcomplex of ``c`` whose vertices all have degree ``>= 2k+2``.
    ``greedy`` applies free faces highest dimension first and fails without
    a witness ("unknown").
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    fp = fingerprint(c)
    work = WorkingComplex.from_complex(c)
    steps: list[CollapseStep] = []
    fallback = False
    if strategy == "theorem":
        if not isinstance(c, CliqueComplex):
            raise TypeError("the theorem strategy needs a CliqueComplex")
        if not c.complete:
            raise ValueError("complex was truncated at dim_cap; enumerate it fully")
        try:
            witness = _theorem_steps(c, k, budget, work, steps)
        except _ClosureOverlap as exc:
            log.info("closure overlap at k=%d (%s); finishing greedily", k, exc)
            fallback = True
            steps += _greedy_steps(work, k)
        else:
            if witness is not None:
                return CollapseOutcome(strategy, k, witness=witness, steps_tried=len(steps))
            if work.dim > k:
                raise RuntimeError(f"theorem strategy left dimension {work.dim} > {k}")
    else:
        steps += _greedy_steps(work, k)
    if work.dim > k:
        return CollapseOutcome(strategy, k, steps_tried=len(steps), greedy_fallback=fallback)
    cert = CollapseCertificate(k, steps, fp, work.dim)
    return CollapseOutcome(strategy, k, certificate=cert, steps_tried=len(steps), greedy_fallback=fallback)

