"""Stand-alone certificate checker.

Deliberately shares nothing with the collapse engine beyond the face-list
normalisation and fingerprint definition: it replays steps on plain sets and
recomputes cofaces by scanning the vertex set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complex import Simplex, as_face_lists, fingerprint


class FingerprintMismatch(ValueError):
    """The certificate was produced for a different complex."""


@dataclass
class Verdict:
    ok: bool
    final_dim: int
    failed_step: int | None = None
    reason: str = ""
    faces: list[set[Simplex]] = field(default_factory=list, repr=False)

    def to_json(self) -> dict:
        return {"pass": self.ok, "final_dim": self.final_dim, "failed_step": self.failed_step, "reason": self.reason}


def _fields(cert):
    if isinstance(cert, dict):
        steps = [(s["free"], s["coface"]) for s in cert["steps"]]
        return int(cert["k"]), str(cert["fingerprint"]), steps, int(cert["final_dim"])
    steps = [(s.free_face, s.coface) for s in cert.steps]
    return cert.k, cert.fingerprint, steps, cert.final_dim


def _top_dim(present: set[Simplex]) -> int:
    return max((len(s) for s in present), default=0) - 1


def verify_certificate(c, cert) -> Verdict:
    """Replay ``cert`` on ``c`` and check every step from scratch.

    ``cert`` is a :class:`~flagcollapse.collapse.CollapseCertificate` or its
    JSON dict. Raises :class:`FingerprintMismatch` when the certificate does
    not belong to ``c``; every other problem yields a failing verdict with
    the offending step index (``None`` for end-of-replay checks).
    """
    layers = as_face_lists(c)
    k, fp, steps, recorded_dim = _fields(cert)
    if fingerprint(layers) != fp:
        raise FingerprintMismatch("certificate fingerprint does not match the complex")
    present = {s for layer in layers for s in layer}
    vertices = sorted({v for s in present for v in s})

    def fail(i, reason):
        return Verdict(False, _top_dim(present), i, reason, _regroup(present))

    for i, (free, cof) in enumerate(steps):
        free, cof = tuple(free), tuple(cof)
        if list(free) != sorted(set(free)) or list(cof) != sorted(set(cof)) or not free:
            return fail(i, "faces must be nonempty and strictly increasing")
        if len(cof) != len(free) + 1 or not set(free) < set(cof):
            return fail(i, "not an elementary pair")
        if len(free) - 1 < k:
            return fail(i, f"free face has dimension below {k}")
        if free not in present:
            return fail(i, f"free face {list(free)} absent")
        if cof not in present:
            return fail(i, f"coface {list(cof)} absent")
        cofaces = [t for t in (tuple(sorted(free + (w,))) for w in vertices if w not in free) if t in present]
        if cofaces != [cof]:
            return fail(i, f"{list(free)} lies in {len(cofaces)} cofaces, not free")
        present.discard(free)
        present.discard(cof)

    final_dim = _top_dim(present)
    if final_dim > k:
        return fail(None, f"final dimension {final_dim} exceeds {k}")
    if final_dim != recorded_dim:
        return fail(None, f"recorded final_dim {recorded_dim} but replay gives {final_dim}")
    return Verdict(True, final_dim, None, "", _regroup(present))


def _regroup(present: set[Simplex]) -> list[set[Simplex]]:
    layers: list[set[Simplex]] = [set() for _ in range(_top_dim(present) + 1)]
    for s in present:
        layers[len(s) - 1].add(s)
    return layers
