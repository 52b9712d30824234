"""Integer Smith normal form invariants for sparse boundary matrices.

Unit pivots are eliminated sparsely first; whatever survives (usually a
small block) goes through a dense fraction-free diagonalization.
"""

from __future__ import annotations

from math import gcd

__all__ = ["invariant_factors", "smith_diagonal"]


def _sparse_unit_phase(cols: list, nrows: int):
    """Eliminate ±1 pivots in place; return (unit count, remaining columns)."""
    rowsets = [set() for _ in range(nrows)]
    for j, col in enumerate(cols):
        for r in col:
            rowsets[r].add(j)
    alive = [bool(c) for c in cols]
    units = 0
    progress = True
    while progress:
        progress = False
        # cheapest columns first keeps fill-in down
        for c in sorted((j for j in range(len(cols)) if alive[j]), key=lambda j: len(cols[j])):
            col = cols[c]
            if not col:
                alive[c] = False
                continue
            piv = None
            for r, v in col.items():
                if (v == 1 or v == -1) and (piv is None or len(rowsets[r]) < len(rowsets[piv])):
                    piv = r
            if piv is None:
                continue
            a = col[piv]
            for j in list(rowsets[piv]):
                if j == c:
                    continue
                other = cols[j]
                factor = other[piv] * a
                for r, v in col.items():
                    nv = other.get(r, 0) - factor * v
                    if nv:
                        if r not in other:
                            rowsets[r].add(j)
                        other[r] = nv
                    elif r in other:
                        del other[r]
                        rowsets[r].discard(j)
            for r in col:
                rowsets[r].discard(c)
            cols[c] = {}
            alive[c] = False
            units += 1
            progress = True
    rest = [cols[j] for j in range(len(cols)) if cols[j]]
    return units, rest


def _dense_diagonal(rest: list) -> list:
    rows = sorted({r for col in rest for r in col})
    if not rows:
        return []
    index = {r: i for i, r in enumerate(rows)}
    m = [[0] * len(rest) for _ in rows]
    for j, col in enumerate(rest):
        for r, v in col.items():
            m[index[r]][j] = v
    diag = []
    nr, nc = len(m), len(rest)
    top = 0
    while top < min(nr, nc):
        # smallest nonzero entry in the trailing block
        best = None
        for i in range(top, nr):
            row = m[i]
            for j in range(top, nc):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, i, j = best
        m[top], m[i] = m[i], m[top]
        for row in m:
            row[top], row[j] = row[j], row[top]
        while True:
            p = m[top][top]
            done = True
            for i in range(top + 1, nr):
                if m[i][top]:
                    q = m[i][top] // p
                    if q:
                        ri, rt = m[i], m[top]
                        for j in range(top, nc):
                            ri[j] -= q * rt[j]
                    if m[i][top]:
                        done = False
            for j in range(top + 1, nc):
                if m[top][j]:
                    q = m[top][j] // p
                    if q:
                        for row in m:
                            row[j] -= q * row[top]
                    if m[top][j]:
                        done = False
            if done:
                break
            # move the smallest leftover in the pivot row/column onto the pivot
            best = (abs(p), top, top)
            for i in range(top + 1, nr):
                v = m[i][top]
                if v and abs(v) < best[0]:
                    best = (abs(v), i, top)
            for j in range(top + 1, nc):
                v = m[top][j]
                if v and abs(v) < best[0]:
                    best = (abs(v), top, j)
            _, i, j = best
            m[top], m[i] = m[i], m[top]
            for row in m:
                row[top], row[j] = row[j], row[top]
        diag.append(abs(m[top][top]))
        top += 1
    return diag


def smith_diagonal(diag: list) -> list:
    """Normalize a diagonal to Smith form (each entry divides the next)."""
    d = sorted(x for x in diag if x)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                g = gcd(d[i], d[j])
                if g != d[i]:
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
        d.sort()
    return d


def invariant_factors(cols: list, nrows: int) -> list:
    """Nonzero Smith invariants of a sparse integer matrix.

    ``cols`` is a list of ``{row: value}`` dicts; it is consumed.
    """
    units, rest = _sparse_unit_phase(cols, nrows)
    return [1] * units + smith_diagonal(_dense_diagonal(rest))
