"""Integer simplicial homology through boundary matrices and Smith normal form.

Works on any finite downward-closed face list, clique complex or not.
Python integers are unbounded, so intermediate growth in the elimination
never overflows.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complex import Simplex, as_face_lists, is_downward_closed


@dataclass
class BoundaryMatrix:
    rows: list[Simplex]
    cols: list[Simplex]
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * len(self.cols) for _ in self.rows]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out


def boundary_matrix(complex_, d: int) -> BoundaryMatrix:
    """Signed incidence matrix from ``d``-faces (columns) to ``(d-1)``-faces (rows).

    Removing the ``i``-th vertex of a face contributes sign ``(-1)**i``.
    Vertices have zero boundary (the empty face is not part of the model).
    """
    layers = as_face_lists(complex_)
    if not is_downward_closed(layers):
        raise ValueError("complex is not closed under taking faces")
    cols = sorted(layers[d]) if 0 <= d < len(layers) else []
    if d < 1:
        return BoundaryMatrix([], cols)
    rows = sorted(layers[d - 1]) if d - 1 < len(layers) else []
    index = {r: i for i, r in enumerate(rows)}
    entries = {}
    for j, s in enumerate(cols):
        for i in range(len(s)):
            entries[index[s[:i] + s[i + 1:]], j] = -1 if i % 2 else 1
    return BoundaryMatrix(rows, cols, entries)


@dataclass
class SmithForm:
    rank: int
    diagonal: list[int]  # nonzero invariant factors, each dividing the next

    @property
    def torsion(self) -> list[int]:
        return [x for x in self.diagonal if x > 1]


def _sparse_rows(m) -> dict[int, dict[int, int]]:
    if isinstance(m, BoundaryMatrix):
        rows: dict[int, dict[int, int]] = {}
        for (i, j), v in m.entries.items():
            if v:
                rows.setdefault(i, {})[j] = v
        return rows
    return {i: {j: int(v) for j, v in enumerate(row) if v} for i, row in enumerate(m) if any(row)}


def smith_normal_form(m) -> SmithForm:
    """Rank and invariant factors of an integer matrix.

    Unit pivots are eliminated first on a sparse representation (each one
    contributes a factor 1 and splits off as a direct summand); whatever is
    left, usually nothing, goes through a dense reduction.
    """
    rows = _sparse_rows(m)
    cols: dict[int, set[int]] = {}
    for i, row in rows.items():
        for j in row:
            cols.setdefault(j, set()).add(i)

    units = 0
    progress = True
    while progress:
        progress = False
        for j in sorted(cols):
            if j not in cols:
                continue
            pivots = [i for i in cols[j] if abs(rows[i][j]) == 1]
            if not pivots:
                continue
            p = min(pivots, key=lambda i: (len(rows[i]), i))
            prow = rows.pop(p)
            sign = prow[j]
            for j2 in prow:
                cols[j2].discard(p)
            for r in list(cols[j]):
                row = rows[r]
                factor = row[j] * sign
                for j2, v in prow.items():
                    nv = row.get(j2, 0) - factor * v
                    if nv:
                        if j2 not in row:
                            cols[j2].add(r)
                        row[j2] = nv
                    elif j2 in row:
                        del row[j2]
                        cols[j2].discard(r)
                if not row:
                    del rows[r]
            for j2 in prow:
                if j2 in cols and not cols[j2]:
                    del cols[j2]
            units += 1
            progress = True

    rest_rows = sorted(rows)
    rest_cols = sorted(cols)
    dense = [[rows[i].get(j, 0) for j in rest_cols] for i in rest_rows]
    diag = _dense_snf(dense)
    return SmithForm(units + len(diag), [1] * units + diag)


def _dense_snf(a: list[list[int]]) -> list[int]:
    a = [row[:] for row in a]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    diag = []
    t = 0
    while t < min(nrows, ncols):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, nrows) for j in range(t, ncols) if a[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            done = True
            for i in range(t + 1, nrows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        # remainder smaller than the pivot: promote it
                        a[t], a[i] = a[i], a[t]
                        done = False
            for j in range(t + 1, ncols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        done = False
            if not done:
                continue
            bad = next(
                (i for i in range(t + 1, nrows) for j in range(t + 1, ncols) if a[i][j] % a[t][t]),
                None,
            )
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


@dataclass
class HomologyProfile:
    betti: list[int]
    torsion: list[list[int]]
    euler: int

    def to_json(self) -> dict:
        return {"betti": self.betti, "torsion": self.torsion, "euler": self.euler}


def euler_characteristic(complex_) -> int:
    return sum((-1) ** d * len(layer) for d, layer in enumerate(as_face_lists(complex_)))


def homology_profile(complex_, max_dim: int | None = None) -> HomologyProfile:
    """Betti numbers and torsion coefficients of integer homology in dims ``0..max_dim``.

    ``max_dim`` defaults to the dimension of the complex.
    """
    layers = as_face_lists(complex_)
    while layers and not layers[-1]:
        layers.pop()
    if not is_downward_closed(layers):
        raise ValueError("complex is not closed under taking faces")
    top = len(layers) - 1 if max_dim is None else max_dim
    snf = {d: smith_normal_form(boundary_matrix(layers, d)) for d in range(1, top + 2)}
    betti, torsion = [], []
    for d in range(top + 1):
        f = len(layers[d]) if d < len(layers) else 0
        rank_d = snf[d].rank if d >= 1 else 0
        betti.append(f - rank_d - snf[d + 1].rank)
        torsion.append(snf[d + 1].torsion)
    return HomologyProfile(betti, torsion, euler_characteristic(layers))
