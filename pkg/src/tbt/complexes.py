"""Finite simplicial complexes: matching complexes, VE_m and E_m, Morse data, homology.

E_m and VE_m are built for a finite color set and trivial G.  A vertex
``[f⁻¹g]`` is stored as the labeled partition it induces: every leaf cube
``i`` of ``C^S(m)`` is sent canonically onto one brick of an elementary
partition of ``C^S(q)``, and the coset only remembers the unordered set of
roots.  Simplices are chains in the coset order (all of them are elementary
below ``[id_m]``), so the complexes are order complexes, truncated at a
requested dimension.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import floor, log2

from .actions import Action, TrivialAction
from .cantor import (
    Brick,
    Partition,
    color_key,
    format_color,
    is_dyadic_partition,
    whole_cube,
)
from .elements import Element
from .homology import invariant_factors

__all__ = [
    "Complex",
    "ComplexTooLarge",
    "EmVertex",
    "nu",
    "matching_complex",
    "elementary_partitions",
    "em_vertices",
    "build_E",
    "build_VE",
    "morse_value",
    "sublevel",
    "homology",
    "reduced_betti",
    "e_bound",
    "ve_bound",
    "DEFAULT_VERTEX_CAP",
    "up_set",
    "vertex_leq",
    "ve_level",
]

DEFAULT_VERTEX_CAP = 200_000


class ComplexTooLarge(RuntimeError):
    pass


def nu(k: int) -> int:
    return floor((k - 2) / 3)


def ve_bound(m: int) -> int:
    """Degrees ``0..ve_bound(m)`` of reduced homology of VE_m must vanish."""
    return nu(m) - 1


def e_bound(m: int) -> int:
    """Degrees ``0..e_bound(m)`` of reduced homology of E_m must vanish (may be negative)."""
    half = m / 2
    return min(floor((half - 2) / 3) - 2, floor(log2(half)) - 2)


# --------------------------------------------------------------------------
# the container


@dataclass
class Complex:
    """Abstract simplicial complex on labeled vertices.

    ``simplices[d]`` lists the d-simplices as sorted index tuples.  When the
    complex was truncated, ``complete_through`` is the largest dimension that
    is known to be complete; otherwise it is None.
    """

    name: str
    vertices: list
    simplices: dict = field(default_factory=dict)
    complete_through: int | None = None

    @classmethod
    def from_faces(cls, name, vertices, faces, max_dim: int | None = None) -> "Complex":
        """Downward closure of ``faces`` (iterables of vertex indices)."""
        seen = {}
        for f in faces:
            f = tuple(sorted(set(f)))
            top = len(f) - 1 if max_dim is None else min(len(f) - 1, max_dim)
            for d in range(top + 1):
                bucket = seen.setdefault(d, set())
                for sub in itertools.combinations(f, d + 1):
                    bucket.add(sub)
        for i in range(len(vertices)):
            seen.setdefault(0, set()).add((i,))
        simp = {d: sorted(s) for d, s in seen.items() if s}
        return cls(name, list(vertices), simp, max_dim)

    @property
    def dim(self) -> int:
        return max(self.simplices, default=-1)

    def count(self, d: int) -> int:
        return len(self.simplices.get(d, ()))

    def f_vector(self) -> list:
        return [self.count(d) for d in range(self.dim + 1)]

    def facets(self) -> list:
        """Maximal simplices among those stored."""
        out = []
        for d in sorted(self.simplices, reverse=True):
            higher = set()
            for s in self.simplices.get(d + 1, ()):
                for i in range(len(s)):
                    higher.add(s[:i] + s[i + 1:])
            out.extend(s for s in self.simplices[d] if s not in higher)
        return out

    def induced(self, keep, name: str | None = None) -> "Complex":
        keep = sorted(set(keep))
        new = {old: i for i, old in enumerate(keep)}
        simp = {}
        for d, ss in self.simplices.items():
            sel = [tuple(new[v] for v in s) for s in ss if all(v in new for v in s)]
            if sel:
                simp[d] = sel
        return Complex(name or self.name, [self.vertices[i] for i in keep], simp, self.complete_through)

    def to_text(self) -> str:
        """Facet list, one simplex per line, vertices by label."""
        return "\n".join(" ; ".join(str(self.vertices[v]) for v in s) for s in self.facets())


def _boundary_columns(c: Complex, d: int) -> tuple:
    """Columns of ∂_d from d-simplices to (d-1)-simplices (augmented at d = 0)."""
    if d == 0:
        return [{0: 1} for _ in range(c.count(0))], 1
    index = {s: i for i, s in enumerate(c.simplices.get(d - 1, ()))}
    cols = []
    for s in c.simplices.get(d, ()):
        col = {}
        for i in range(len(s)):
            col[index[s[:i] + s[i + 1:]]] = -1 if i % 2 else 1
        cols.append(col)
    return cols, len(index)


def homology(c: Complex, top_dim: int) -> list:
    """Reduced integral homology in degrees ``0..top_dim``.

    Returns one ``(rank, torsion)`` pair per degree, torsion as a list of
    invariant factors greater than one.
    """
    if top_dim < 0:
        return []
    if c.complete_through is not None and top_dim + 1 > c.complete_through:
        raise ValueError(f"complex {c.name!r} is only built through dimension "
                         f"{c.complete_through}; degree {top_dim} needs {top_dim + 1}")
    ranks, factors = {}, {}
    for d in range(top_dim + 2):
        cols, nrows = _boundary_columns(c, d)
        inv = invariant_factors(cols, nrows) if cols else []
        ranks[d] = len(inv)
        factors[d] = [x for x in inv if x > 1]
    out = []
    for d in range(top_dim + 1):
        rank = c.count(d) - ranks[d] - ranks[d + 1]
        out.append((rank, factors[d + 1]))
    return out


def reduced_betti(c: Complex, top_dim: int) -> list:
    return [r for r, _ in homology(c, top_dim)]


# --------------------------------------------------------------------------
# matching complexes


def matching_complex(m: int, max_dim: int | None = None) -> Complex:
    """Matchings of the complete graph on ``1..m``; vertices are its edges."""
    if m < 2:
        raise ValueError("matching complex needs m >= 2")
    edges = list(itertools.combinations(range(1, m + 1), 2))
    simp = {}
    top = m // 2 - 1 if max_dim is None else min(m // 2 - 1, max_dim)

    def grow(start, used, chosen):
        d = len(chosen) - 1
        if d >= 0:
            simp.setdefault(d, []).append(tuple(chosen))
        if d == top:
            return
        for j in range(start, len(edges)):
            a, b = edges[j]
            if a in used or b in used:
                continue
            grow(j + 1, used | {a, b}, chosen + [j])

    grow(0, frozenset(), [])
    for d in simp:
        simp[d].sort()
    labels = [f"{a}-{b}" for a, b in edges]
    complete = None if max_dim is None or max_dim >= m // 2 - 1 else max_dim
    return Complex(f"matching({m})", labels, simp, complete)


# --------------------------------------------------------------------------
# vertices of E_m


def elementary_partitions(colors) -> list:
    """All elementary dyadic partitions of one cube, as sorted brick tuples."""
    colors = tuple(colors)
    out = set()

    def build(region: Brick):
        results = {(region,)}
        for c in colors:
            if region.word(c):
                continue
            for left in build(region.half(c, "0")):
                for right in build(region.half(c, "1")):
                    results.add(tuple(sorted(left + right, key=Brick.sort_key)))
        return results

    out = build(whole_cube(1))
    return sorted(out, key=lambda p: (len(p), [b.sort_key() for b in p]))


def _entries(b: Brick) -> tuple:
    return b.entries


@dataclass(frozen=True, order=True)
class EmVertex:
    """Coset ``[f⁻¹g]``: roots as sorted tuples of ``(leaf, brick entries)``."""

    m: int
    roots: tuple

    @classmethod
    def make(cls, m: int, roots) -> "EmVertex":
        canon = tuple(sorted(tuple(sorted(r)) for r in roots))
        return cls(m, canon)

    @property
    def rank(self) -> int:
        """φ(v): number of roots, which is the corank of f."""
        return len(self.roots)

    def weights(self) -> list:
        return [len(r) for r in self.roots]

    def is_very_elementary(self) -> bool:
        for r in self.roots:
            if len(r) == 2:
                if len(r[0][1]) != 1 or r[0][1][0][0] != r[1][1][0][0]:
                    return False
            elif len(r) != 1:
                return False
        return True

    def leaf_map(self) -> dict:
        """leaf → (root index, brick entries)."""
        return {leaf: (k, ent) for k, r in enumerate(self.roots) for leaf, ent in r}

    def element(self, action: Action) -> Element:
        """Representative ``C^S(m) → C^S(q)`` sending each leaf cube onto its brick."""
        e = action.identity()
        pieces = []
        for k, r in enumerate(self.roots, 1):
            for leaf, ent in r:
                pieces.append((whole_cube(leaf), Brick(k, ent), e))
        pieces.sort(key=lambda p: p[0].cube)
        return Element(action, self.m, len(self.roots), pieces, check=False)

    @classmethod
    def from_element(cls, h: Element) -> "EmVertex":
        """Canonical vertex of an untwisted ``h`` whose domain pieces are whole cubes."""
        roots = [[] for _ in range(h.rank)]
        for d, r, g in h.pieces:
            if not d.is_whole() or not h.action.is_identity(g):
                raise ValueError("not of the form f⁻¹g with G trivial")
            roots[r.cube - 1].append((d.cube, r.entries))
        return cls.make(h.corank, roots)

    def __str__(self) -> str:
        def ent(e):
            return "{" + ",".join(f"{format_color(c)}={w}" for c, w in e) + "}"

        return " | ".join(" ".join(f"{leaf}:{ent(e)}" for leaf, e in r) for r in self.roots)


def em_vertices(m: int, colors, very_elementary: bool = False,
                cap: int = DEFAULT_VERTEX_CAP) -> list:
    """All vertices of E_m (or VE_m) for the given finite colors."""
    parts = elementary_partitions(colors)
    if very_elementary:
        parts = [p for p in parts if len(p) <= 2]
    by_size = {}
    for p in parts:
        by_size.setdefault(len(p), []).append(tuple(b.entries for b in p))
    out = []

    def place(remaining: tuple, roots: list):
        if not remaining:
            if len(roots) < m:
                out.append(EmVertex.make(m, roots))
                if len(out) > cap:
                    raise ComplexTooLarge(f"more than {cap} vertices")
            return
        first, rest = remaining[0], remaining[1:]
        # the root containing the smallest unplaced leaf
        for size, plist in by_size.items():
            if size - 1 > len(rest):
                continue
            for others in itertools.combinations(rest, size - 1):
                leaves = (first,) + others
                left = tuple(x for x in rest if x not in others)
                for p in plist:
                    for perm in itertools.permutations(p):
                        place(left, roots + [tuple(zip(leaves, perm))])

    place(tuple(range(1, m + 1)), [])
    return sorted(set(out))


# --------------------------------------------------------------------------
# the coset order on vertices


def _strip(entries: tuple, prefix: tuple):
    """Remove the entries of brick ``prefix`` from ``entries``; None if not inside."""
    d = dict(entries)
    for c, w in prefix:
        if d.get(c) != w:
            return None
        del d[c]
    return tuple(sorted(d.items(), key=lambda kv: _ck(kv[0])))


def _ck(c):
    return color_key(c)


def _root_expansions(root: tuple, cparts: list) -> list:
    """Ways to write one root as a forest over finer roots.

    Each expansion is a list of new roots (tuples of (leaf, entries)).
    """
    out = []
    for cp in cparts:
        groups = []
        ok = True
        for c in cp:
            grp = []
            for leaf, ent in root:
                s = _strip(ent, c)
                if s is not None:
                    grp.append((leaf, s))
            if not grp:
                ok = False
                break
            groups.append(tuple(sorted(grp)))
        if not ok or sum(len(g) for g in groups) != len(root):
            continue
        if all(is_dyadic_partition(Partition(tuple(Brick(1, e) for _, e in g), 1)) for g in groups):
            out.append(groups)
    return out


def up_set(v: EmVertex, cparts: list, include_top: bool = False) -> list:
    """Vertices ``w`` with ``v < w`` (``[id_m]`` only when ``include_top``)."""
    options = [_root_expansions(r, cparts) for r in v.roots]
    out = []
    for combo in itertools.product(*options):
        roots = [g for groups in combo for g in groups]
        if len(roots) == len(v.roots):
            continue
        if len(roots) == v.m and not include_top:
            continue
        out.append(EmVertex.make(v.m, roots))
    return out


def vertex_leq(v: EmVertex, w: EmVertex, cparts: list) -> bool:
    return v == w or w in set(up_set(v, cparts, include_top=True))


# --------------------------------------------------------------------------
# builders


def _colors_of(action_or_k):
    if isinstance(action_or_k, int):
        return list(range(1, action_or_k + 1))
    if isinstance(action_or_k, TrivialAction) and action_or_k.size:
        return list(range(1, action_or_k.size + 1))
    raise ValueError("E_m is built only for a finite color set with trivial G")


def _order_complex(name, verts: list, cparts: list, max_dim: int | None) -> Complex:
    index = {v: i for i, v in enumerate(verts)}
    ups = []
    for v in verts:
        ups.append(sorted({index[w] for w in up_set(v, cparts) if w in index}))
    simp = {0: [(i,) for i in range(len(verts))]}

    def grow(chain):
        d = len(chain) - 1
        if max_dim is not None and d >= max_dim:
            return
        for j in ups[chain[-1]]:
            new = chain + (j,)
            simp.setdefault(d + 1, []).append(new)
            grow(new)

    for i in range(len(verts)):
        grow((i,))
    for d in simp:
        simp[d] = sorted(tuple(sorted(s)) for s in simp[d])
    longest = verts[0].m - 2 if verts else 0
    complete = None if max_dim is None or max_dim >= longest else max_dim
    return Complex(name, verts, simp, complete)


def build_E(m: int, action_or_k=1, max_dim: int | None = None,
            cap: int = DEFAULT_VERTEX_CAP) -> Complex:
    """E_m for trivial G on ``k`` colors; ``max_dim`` truncates the skeleton."""
    colors = _colors_of(action_or_k)
    cparts = [tuple(b.entries for b in p) for p in elementary_partitions(colors)]
    verts = em_vertices(m, colors, cap=cap)
    return _order_complex(f"E_{m}(|S|={len(colors)})", verts, cparts, max_dim)


def build_VE(m: int, action_or_k=1, max_dim: int | None = None,
             cap: int = DEFAULT_VERTEX_CAP) -> Complex:
    """VE_m: the subcomplex of E_m induced on very elementary vertices."""
    colors = _colors_of(action_or_k)
    cparts = [tuple(b.entries for b in p) for p in elementary_partitions(colors)]
    verts = em_vertices(m, colors, very_elementary=True, cap=cap)
    return _order_complex(f"VE_{m}(|S|={len(colors)})", verts, cparts, max_dim)


# --------------------------------------------------------------------------
# Morse data


def morse_value(v: EmVertex, m: int | None = None) -> tuple:
    """``(μ_m, …, μ_3, φ)`` where ``μ_k`` counts roots of weight k."""
    m = v.m if m is None else m
    w = v.weights()
    return tuple(w.count(k) for k in range(m, 2, -1)) + (v.rank,)


def sublevel(c: Complex, bound: tuple) -> Complex:
    keep = [i for i, v in enumerate(c.vertices) if morse_value(v) <= tuple(bound)]
    return c.induced(keep, f"{c.name}[mu<={bound}]")


def ve_level(m: int) -> tuple:
    return (0,) * (m - 2) + (m - 1,)



