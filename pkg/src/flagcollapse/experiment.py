"""Monte Carlo sweeps over X(n, n^-alpha)."""

from __future__ import annotations

import csv
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from statistics import mean

import networkx as nx

from .collapse import STRATEGIES, collapse_to_dim
from .complex import DEFAULT_FACE_BUDGET, FaceBudgetExceeded, Graph, clique_complex
from .condition import check_condition, to_networkx
from .homology import homology_profile
from .relevant import facet_adjacency_components
from .sampler import SamplerConfig, derive_seed, sample_gnp
from .verify import verify_certificate

log = logging.getLogger(__name__)

CSV_COLUMNS = (
    "n", "alpha", "p", "seed", "condition", "collapse", "final_dim",
    "max_support", "betti", "connected", "wall_time_ms", "reason",
)


@dataclass
class ExperimentConfig:
    k: int
    alphas: list[float]
    ns: list[int]
    trials: int
    master_seed: int = 0
    strategy: str = "theorem"
    measure_homology: bool = True
    dim_cap: int | None = None
    budget: int = DEFAULT_FACE_BUDGET

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be non-negative")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if not self.alphas or any(a <= 0 for a in self.alphas):
            raise ValueError("alphas must be a nonempty list of positive exponents")
        if not self.ns or any(n < 1 for n in self.ns):
            raise ValueError("ns must be a nonempty list of positive sizes")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")

    @classmethod
    def from_file(cls, path) -> ExperimentConfig:
        return cls(**json.loads(Path(path).read_text()))


@dataclass
class TrialRecord:
    n: int
    alpha: float
    p: float
    seed: int
    trial: int = 0
    condition: str = ""
    collapse: str = ""
    final_dim: int | None = None
    max_support: int = 0
    betti: list[int] | None = None
    connected: bool | None = None
    wall_time_ms: float = 0.0
    reason: str = ""

    def row(self) -> list:
        d = asdict(self)
        d["betti"] = "" if self.betti is None else " ".join(map(str, self.betti))
        d["final_dim"] = "" if self.final_dim is None else self.final_dim
        d["connected"] = "" if self.connected is None else int(self.connected)
        d["wall_time_ms"] = round(self.wall_time_ms, 3)
        return [d[c] for c in CSV_COLUMNS]


def connectivity_check(g: Graph) -> bool:
    """True iff the graph has at least one vertex and a single component."""
    return g.n > 0 and nx.is_connected(to_networkx(g))


def run_trial(
    n: int,
    alpha: float,
    k: int,
    seed: int,
    strategy: str = "theorem",
    measure_homology: bool = True,
    dim_cap: int | None = None,
    budget: int = DEFAULT_FACE_BUDGET,
    trial: int = 0,
) -> TrialRecord:
    """Sample X(n, n^-alpha), check the degree condition, collapse, verify.

    Budget breaches and internal inconsistencies end up in ``reason``
    instead of propagating.
    """
    t0 = time.perf_counter()
    cfg = SamplerConfig.from_alpha(n, alpha, seed)
    rec = TrialRecord(n=n, alpha=alpha, p=cfg.p, seed=seed, trial=trial)
    g = sample_gnp(cfg)
    rec.connected = connectivity_check(g)
    try:
        c = clique_complex(g, dim_cap, budget=budget)
        if not c.complete:
            rec.reason = f"truncated at dim_cap={dim_cap}"
            return rec
        rec.condition = check_condition(c, k).status
        rec.max_support = max((len(s.support) for s in facet_adjacency_components(c, k + 1)), default=0)
        out = collapse_to_dim(c, k, strategy, budget)
        rec.collapse = out.status
        if out.success:
            verdict = verify_certificate(c, out.certificate)
            if not verdict.ok:
                rec.reason = f"certificate rejected at step {verdict.failed_step}: {verdict.reason}"
                return rec
            rec.final_dim = verdict.final_dim
            if measure_homology:
                rec.betti = homology_profile(verdict.faces, max_dim=k).betti
        if rec.condition == "satisfied" and strategy == "theorem" and not out.success:
            rec.reason = "condition satisfied but theorem strategy failed"
    except FaceBudgetExceeded as exc:
        rec.reason = f"face budget: {exc}"
    except Exception as exc:  # recorded per trial; a sweep never aborts
        log.exception("trial n=%s alpha=%s seed=%s failed", n, alpha, seed)
        rec.reason = f"{type(exc).__name__}: {exc}"
    finally:
        rec.wall_time_ms = (time.perf_counter() - t0) * 1000
    return rec


def _trial_task(args) -> TrialRecord:
    return run_trial(**args)


def trial_tasks(cfg: ExperimentConfig) -> list[dict]:
    """One task per (n, alpha, trial); the seed depends on (n, trial) only, so
    different alphas see coupled samples."""
    tasks = []
    for n in cfg.ns:
        for alpha in cfg.alphas:
            for i in range(cfg.trials):
                tasks.append(dict(
                    n=n, alpha=alpha, k=cfg.k, seed=derive_seed(cfg.master_seed, n, i),
                    strategy=cfg.strategy, measure_homology=cfg.measure_homology,
                    dim_cap=cfg.dim_cap, budget=cfg.budget, trial=i,
                ))
    return tasks


def run_sweep(cfg: ExperimentConfig, workers: int = 1) -> list[TrialRecord]:
    tasks = trial_tasks(cfg)
    if workers <= 1:
        records = [_trial_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_trial_task, tasks, chunksize=4))
    order = {a: i for i, a in enumerate(cfg.alphas)}
    records.sort(key=lambda r: (cfg.ns.index(r.n), order[r.alpha], r.trial))
    return records


@dataclass
class CellSummary:
    n: int
    alpha: float
    p: float
    trials: int
    errors: int
    condition_satisfied: float
    collapse_success: float
    mean_final_dim: float | None
    mean_max_support: float
    max_max_support: int
    betti_k_nonzero: float | None
    connected: float | None
    bouquet_certified: float | None = None
    theorem_violations: int = 0


def _frac(xs) -> float | None:
    xs = list(xs)
    return sum(map(bool, xs)) / len(xs) if xs else None


def summarize(records: list[TrialRecord], k: int) -> list[CellSummary]:
    cells: dict[tuple[int, float], list[TrialRecord]] = {}
    for r in records:
        cells.setdefault((r.n, r.alpha), []).append(r)
    out = []
    for (n, alpha), rs in cells.items():
        ok = [r for r in rs if not r.reason]
        succ = [r for r in ok if r.collapse == "success"]
        with_betti = [r for r in succ if r.betti is not None and len(r.betti) > k]
        bouquet = None
        if k == 1:
            bouquet = _frac(
                r.connected and r.betti is not None and r.betti[0] == 1 and r.betti[1] > 0 for r in ok
                if r.collapse == "success"
            )
        out.append(CellSummary(
            n=n, alpha=alpha, p=rs[0].p, trials=len(rs), errors=len(rs) - len(ok),
            condition_satisfied=_frac(r.condition == "satisfied" for r in ok) or 0.0,
            collapse_success=_frac(r.collapse == "success" for r in ok) or 0.0,
            mean_final_dim=mean(r.final_dim for r in succ) if succ else None,
            mean_max_support=mean(r.max_support for r in ok) if ok else 0.0,
            max_max_support=max((r.max_support for r in ok), default=0),
            betti_k_nonzero=_frac(r.betti[k] > 0 for r in with_betti),
            connected=_frac(r.connected for r in ok),
            bouquet_certified=bouquet,
            theorem_violations=sum(r.reason.startswith("condition satisfied") for r in rs),
        ))
    return out


def write_results(records: list[TrialRecord], summary: list[CellSummary], out_dir, cfg: ExperimentConfig | None = None):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "results.csv", "a", newline="") as fh:
        w = csv.writer(fh)
        if fh.tell() == 0:
            w.writerow(CSV_COLUMNS)
        for r in records:
            w.writerow(r.row())
    payload = {"cells": [asdict(s) for s in summary]}
    if cfg is not None:
        payload["config"] = asdict(cfg)
    (out / "summary.json").write_text(json.dumps(payload, indent=2))
