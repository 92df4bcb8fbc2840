"""Seeded G(n, p) and X(n, p) samplers.

Randomness comes from numpy's counter-based Philox generator. Per-trial
seeds are derived from a master seed and a key with ``SeedSequence`` so that
results do not depend on scheduling order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complex import DEFAULT_FACE_BUDGET, CliqueComplex, Graph, build_graph, clique_complex


@dataclass(frozen=True)
class SamplerConfig:
    n: int
    p: float
    seed: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p={self.p} outside [0, 1]")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    @classmethod
    def from_alpha(cls, n: int, alpha: float, seed: int) -> SamplerConfig:
        return cls(n, p_from_alpha(n, alpha), seed)


def p_from_alpha(n: int, alpha: float) -> float:
    return min(1.0, float(n) ** -float(alpha))


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def derive_seed(master_seed: int, *key: int) -> int:
    """64-bit child seed for ``key`` under ``master_seed``."""
    ss = np.random.SeedSequence(master_seed, spawn_key=tuple(int(k) for k in key))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def sample_gnp(cfg: SamplerConfig) -> Graph:
    """One uniform draw per vertex pair, pairs in lexicographic order."""
    rng = make_rng(cfg.seed)
    iu, ju = np.triu_indices(cfg.n, k=1)
    keep = rng.random(iu.size) < cfg.p
    return build_graph(cfg.n, zip(iu[keep].tolist(), ju[keep].tolist()))


def sample_xnp(cfg: SamplerConfig, dim_cap: int | None = None, budget: int = DEFAULT_FACE_BUDGET) -> CliqueComplex:
    return clique_complex(sample_gnp(cfg), dim_cap, budget=budget)
