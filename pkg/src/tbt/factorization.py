"""Embeddings of G, factorization over SV ∪ ι₁ˢ(G), the generating graph, and ρ."""

from __future__ import annotations

from dataclasses import dataclass

from .actions import Action
from .cantor import (
    Brick,
    Partition,
    PointPrefix,
    brick,
    complement_bricks,
    format_color,
)
from .elements import (
    Element,
    compose,
    compose_all,
    direct_sum,
    equal,
    germinal_twist,
    identity,
    invert,
    is_untwisted,
    simple_split,
    twist,
)
from .forests import reduce

__all__ = [
    "iota0",
    "iota1",
    "FactorAtom",
    "FactorWord",
    "factorize",
    "carry_brick",
    "GeneratingGraph",
    "generating_graph",
    "rho",
    "BASEPOINT",
]

BASEPOINT = PointPrefix(1, ())


def iota0(action: Action, g) -> Element:
    return twist(action, g)


def iota1(action: Action, s, g) -> Element:
    """``x_s⁻¹ (id₁ ⊕ τ_g) x_s``: twist by g on the half where color s starts with 1."""
    xs = simple_split(action, s)
    return compose_all(invert(xs), direct_sum(identity(action, 1), twist(action, g)), xs)


@dataclass(frozen=True)
class FactorAtom:
    kind: str  # "SV" or "iota1"
    value: object
    color: object = None

    def element(self, action: Action) -> Element:
        if self.kind == "SV":
            return self.value
        return iota1(action, self.color, self.value)


@dataclass(frozen=True)
class FactorWord:
    action: Action
    atoms: tuple

    def evaluate(self) -> Element:
        return compose_all(*(a.element(self.action) for a in self.atoms))

    def __len__(self):
        return len(self.atoms)

    def __str__(self):
        out = []
        for a in self.atoms:
            if a.kind == "SV":
                out.append(str(a.value))
            else:
                out.append(f"iota1[{self.action.format_color(a.color)},"
                           f"{self.action.format_element(a.value)}]")
        return " • ".join(out)


def carry_brick(action: Action, src: Brick, dst: Brick, split_color) -> Element:
    """Untwisted group element mapping proper brick ``src`` onto ``dst`` canonically.

    The complements are cut along each brick's splitting path, the shorter
    list is refined by halving along ``split_color``, and leftovers are paired
    in canonical order.
    """
    if src.is_whole() or dst.is_whole():
        raise ValueError("bricks must be proper")
    a = sorted(complement_bricks(src), key=Brick.sort_key)
    b = sorted(complement_bricks(dst), key=Brick.sort_key)
    while len(a) != len(b):
        short = a if len(a) < len(b) else b
        last = short.pop()
        short.extend([last.half(split_color, "0"), last.half(split_color, "1")])
    e = action.identity()
    pieces = [(src, dst, e)] + [(x, y, e) for x, y in zip(a, b)]
    return Element(action, 1, 1, pieces, check=False)


def factorize(h: Element, s) -> FactorWord:
    """Write a group element as ``v · ∏ a_i ι₁ˢ(γ_i) a_i⁻¹`` with ``v, a_i ∈ SV``."""
    if h.rank != 1 or h.corank != 1:
        raise ValueError("factorize needs a group element (rank = corank = 1)")
    a = h.action
    a.check_color(s)
    if is_untwisted(h):
        return FactorWord(a, (FactorAtom("SV", h),))
    h = reduce(h)
    if len(h.pieces) == 1:
        h = h._refined_domain(_halves(s))
    right = brick(1, {s: "1"})
    localized = []
    atoms = []
    for d, _, g in h.pieces:
        if a.is_identity(g):
            continue
        if d == right:
            conj = [FactorAtom("iota1", g, s)]
        else:
            c = carry_brick(a, right, d, s)
            conj = [FactorAtom("SV", c), FactorAtom("iota1", g, s), FactorAtom("SV", invert(c))]
        atoms.extend(conj)
        localized.append(compose_all(*(x.element(a) for x in conj)))
    u = compose_all(*localized)
    v = reduce(compose(h, invert(u)))
    assert is_untwisted(v)
    if not _is_identity(v):
        atoms.insert(0, FactorAtom("SV", v))
    return FactorWord(a, tuple(atoms))


def _halves(s):
    return Partition((brick(1, {s: "0"}), brick(1, {s: "1"})), 1)


def _is_identity(h: Element) -> bool:
    return equal(h, identity(h.action, h.corank)) if h.rank == h.corank else False


@dataclass(frozen=True)
class GeneratingGraph:
    vertices: tuple
    edges: tuple

    def __str__(self):
        return "\n".join(f"{{{format_color(a)}, {format_color(b)}}}" for a, b in self.edges)


def generating_graph(action: Action) -> GeneratingGraph:
    """Orbit-representative edges ``{s1, s_i}`` and ``{s1, γ_j s1}`` of the 2V-copies."""
    reps = action.orbit_representatives()
    gens = action.generators()
    if reps is None or gens is None:
        raise ValueError(f"{action.name} lacks orbit or generator metadata")
    s1 = reps[0]
    edges = [(s1, si) for si in reps[1:]]
    for g in gens:
        t = action.apply(g, s1)
        if t != s1 and (s1, t) not in edges:
            edges.append((s1, t))
    verts = []
    for e in edges:
        for x in e:
            if x not in verts:
                verts.append(x)
    if s1 not in verts:
        verts.insert(0, s1)
    return GeneratingGraph(tuple(verts), tuple(edges))


def rho(h: Element, basepoint: PointPrefix | None = None):
    """Germinal twist at a fixed basepoint (all zeros by default)."""
    if h.rank != 1 or h.corank != 1:
        raise ValueError("rho is defined on the group (rank = corank = 1)")
    return germinal_twist(h, basepoint or BASEPOINT)


