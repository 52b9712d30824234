"""Multicolored forests, spectra, cosets of twisted permutations, joins and cores."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .actions import Action
from .cantor import (
    Brick,
    Partition,
    brick,
    color_key,
    common_refinement,
    is_dyadic_partition,
    is_partition,
    whole_cube,
)
from .elements import (
    Element,
    compose,
    compose_all,
    equal,
    invert,
    is_untwisted,
    perm,
    twist_sum,
)

__all__ = [
    "Forest",
    "TwistedPermutation",
    "forest_part",
    "as_forest",
    "is_forest",
    "spectrum",
    "special_spectrum",
    "forest_twist_forest_form",
    "swap",
    "coset_leq",
    "coset_equal",
    "is_elementary_interval",
    "as_twisted_permutation",
    "stabilizes_vertex",
    "forest_join",
    "elementary_core",
    "weight_multiplicities",
    "reduce",
]


@dataclass(frozen=True)
class Forest:
    """Forest sending ``bricks[j]`` canonically onto cube ``j+1``.

    The bricks form an ordered dyadic partition of ``C^S(corank)``.
    """

    action: Action
    corank: int
    bricks: tuple

    def __post_init__(self):
        object.__setattr__(self, "bricks", tuple(self.bricks))

    @classmethod
    def make(cls, action, corank, bricks) -> "Forest":
        f = cls(action, corank, bricks)
        p = f.partition()
        if not is_partition(p) or not is_dyadic_partition(p):
            raise ValueError("forest bricks must form a dyadic partition")
        return f

    @property
    def rank(self) -> int:
        return len(self.bricks)

    def partition(self) -> Partition:
        return Partition(self.bricks, self.corank)

    def element(self) -> Element:
        e = self.action.identity()
        return Element(self.action, self.corank, self.rank,
                       [(b, whole_cube(j), e) for j, b in enumerate(self.bricks, 1)], check=False)

    def is_elementary(self) -> bool:
        return all(b.is_elementary() for b in self.bricks)

    def is_very_elementary(self) -> bool:
        for k in range(1, self.corank + 1):
            bs = [b for b in self.bricks if b.cube == k]
            if len(bs) == 1:
                continue
            if len(bs) != 2 or any(len(b.entries) != 1 for b in bs):
                return False
            if bs[0].colors != bs[1].colors:
                return False
        return True

    def is_trivial(self) -> bool:
        return self.rank == self.corank

    def roots(self) -> list:
        """Leaf indices (1-based) grouped by root cube."""
        out = [[] for _ in range(self.corank)]
        for j, b in enumerate(self.bricks, 1):
            out[b.cube - 1].append(j)
        return out

    def canonical(self) -> "Forest":
        return Forest(self.action, self.corank, tuple(sorted(self.bricks, key=Brick.sort_key)))

    def __str__(self):
        return "FOREST{" + ", ".join(str(b) for b in self.bricks) + "}"


@dataclass(frozen=True)
class TwistedPermutation:
    """``t ∘ p_σ``: cube i goes to cube ``perm[i-1]``, then twist ``twists[perm[i-1]-1]``."""

    action: Action
    perm: tuple
    twists: tuple

    def element(self) -> Element:
        return compose(twist_sum(self.action, self.twists), perm(self.action, self.perm))

    def is_pure_twist(self) -> bool:
        return self.perm == tuple(range(1, len(self.perm) + 1))

    def is_identity(self) -> bool:
        return self.is_pure_twist() and all(self.action.is_identity(g) for g in self.twists)


# --------------------------------------------------------------------------
# recognising g ∘ f


def _root_brick(d: Brick, r: Brick, g, action: Action):
    """Brick B with ``canon_cube ∘ τ_g ∘ canon_B⁻¹`` restricting to ``d -> r``."""
    ginv = action.invert(g)
    back = {}
    for c, w in r.entries:
        back[action.apply(ginv, c)] = w
    out = {}
    for c, w in d.entries:
        tail = back.pop(c, "")
        if not w.endswith(tail):
            return None
        out[c] = w[:len(w) - len(tail)]
    if back:
        return None
    return brick(d.cube, out)


def forest_part(u: Element, dyadic: bool = True):
    """Write ``u = g ∘ f`` with g a pure G-twist and f a forest, if possible.

    Returns ``(Forest, twists)`` or ``None``.
    """
    a = u.action
    roots: dict = {}
    for d, r, g in u.pieces:
        b = _root_brick(d, r, g, a)
        if b is None:
            return None
        j = r.cube
        if j in roots:
            b0, g0 = roots[j]
            if b0 != b or not a.equal(g0, g):
                return None
        else:
            roots[j] = (b, g)
    if sorted(roots) != list(range(1, u.rank + 1)):
        return None  # pragma: no cover
    bricks = tuple(roots[j][0] for j in range(1, u.rank + 1))
    if dyadic and not is_dyadic_partition(Partition(bricks, u.corank)):
        return None
    return Forest(a, u.corank, bricks), tuple(roots[j][1] for j in range(1, u.rank + 1))


def as_forest(h: Element) -> Forest:
    fp = forest_part(h)
    if fp is None or not all(h.action.is_identity(g) for g in fp[1]):
        raise ValueError("element is not a multicolored forest")
    return fp[0]


def is_forest(h: Element) -> bool:
    try:
        as_forest(h)
    except ValueError:
        return False
    return True


def as_twisted_permutation(u: Element) -> TwistedPermutation | None:
    fp = forest_part(u, dyadic=False)
    if fp is None:
        return None
    f, gs = fp
    if not all(b.is_whole() for b in f.bricks):
        return None
    img = [0] * u.corank
    for j, b in enumerate(f.bricks, 1):
        img[b.cube - 1] = j
    return TwistedPermutation(u.action, tuple(img), gs)


def stabilizes_vertex(a_elem: Element, h: Element) -> bool:
    """Does ``a`` fix the vertex ``[h]``, i.e. is ``h a h⁻¹`` a twisted permutation?"""
    return as_twisted_permutation(compose_all(h, a_elem, invert(h))) is not None


# --------------------------------------------------------------------------
# spectrum


def _strip_color(b: Brick, c) -> Brick:
    return brick(b.cube, {x: w for x, w in b.entries if x != c})


def _color_is_essential(h: Element, c) -> bool:
    if any(d.word(c) != r.word(c) for d, r, _ in h.pieces):
        return True
    depth = max(len(d.word(c)) for d, _, _ in h.pieces)
    slices: dict = {}
    for d, r, g in h.pieces:
        w = d.word(c)
        for ext in product("01", repeat=depth - len(w)):
            key = w + "".join(ext)
            slices.setdefault(key, []).append((_strip_color(d, c), _strip_color(r, c), g))
    elems = [Element(h.action, h.corank, h.rank, ps, check=False) for ps in slices.values()]
    return not all(equal(elems[0], e) for e in elems[1:])


def spectrum(h: Element) -> frozenset:
    """Colors an untwisted element uses essentially.

    A color ``c`` is inessential iff every piece leaves the c-word unchanged
    and, after cutting all pieces to a common c-depth, every c-slice carries
    the same map on the remaining colors.
    """
    if not is_untwisted(h):
        raise ValueError("spectrum is only defined for untwisted elements")
    colors = {c for d, r, _ in h.pieces for c in d.colors + r.colors}
    return frozenset(c for c in colors if _color_is_essential(h, c))


def special_spectrum(f: Forest | Element) -> frozenset:
    """Colors cut in every brick of a multicolored tree."""
    if isinstance(f, Element):
        f = as_forest(f)
    if f.corank != 1:
        raise ValueError("special spectrum needs a tree (corank 1)")
    cols = set(f.bricks[0].colors)
    for b in f.bricks[1:]:
        cols &= set(b.colors)
    return frozenset(cols)


# --------------------------------------------------------------------------
# normal forms and swaps


def forest_twist_forest_form(h: Element):
    """``(f2, t, f1)`` with ``h == f2⁻¹ ∘ t ∘ f1`` and t a pure G-twist."""
    a = h.action
    f1 = Forest(a, h.corank, tuple(d for d, _, _ in h.pieces))
    f2 = Forest(a, h.rank, tuple(r for _, r, _ in h.pieces))
    t = TwistedPermutation(a, tuple(range(1, len(h.pieces) + 1)), h.twists)
    return f2, t, f1


def swap(f: Forest, g: TwistedPermutation):
    """``f ∘ g == g' ∘ f'``; returns ``(g', f')`` with g' a pure twist."""
    if len(g.perm) != f.corank:
        raise ValueError("forest and twisted permutation are not composable")
    ge = g.element()
    # cube i of g's domain lands on cube perm[i-1]; pull each forest brick back
    piece_into = {r.cube: i for i, (_, r, _) in enumerate(ge.pieces)}
    new_bricks, new_twists = [], []
    for b in f.bricks:
        i = piece_into[b.cube]
        new_bricks.append(ge.pull_brick(i, b))
        new_twists.append(ge.pieces[i][2])
    n = f.rank
    return (TwistedPermutation(f.action, tuple(range(1, n + 1)), tuple(new_twists)),
            Forest(f.action, f.corank, tuple(new_bricks)))


# --------------------------------------------------------------------------
# the poset of cosets


def _check_coranks(v: Element, w: Element):
    if v.corank != w.corank:
        raise ValueError("coset comparison needs equal coranks")
    if v.action != w.action:
        raise ValueError("action mismatch")


def coset_leq(v: Element, w: Element) -> bool:
    """``[v] ≤ [w]``: ``w ∘ v⁻¹`` is a twisted permutation times a forest."""
    _check_coranks(v, w)
    if w.rank < v.rank:
        return False
    return forest_part(compose(w, invert(v))) is not None


def coset_equal(v: Element, w: Element) -> bool:
    _check_coranks(v, w)
    if v.rank != w.rank:
        return False
    return as_twisted_permutation(compose(w, invert(v))) is not None


def is_elementary_interval(v: Element, w: Element) -> bool:
    _check_coranks(v, w)
    if w.rank < v.rank:
        return False
    fp = forest_part(compose(w, invert(v)))
    return fp is not None and fp[0].is_elementary()


def forest_join(f1: Forest, f2: Forest) -> Forest:
    """Least upper bound of ``[f1]`` and ``[f2]``: the least common refinement."""
    if f1.corank != f2.corank:
        raise ValueError("forest join needs equal coranks")
    p = common_refinement(f1.partition(), f2.partition())
    out = Forest(f1.action, f1.corank, p.bricks)
    if f1.is_elementary() and f2.is_elementary():
        assert out.is_elementary()
    return out


def _core_partition(f: Forest, rng: random.Random | None = None) -> tuple:
    bricks = f.bricks
    done = []
    todo = [whole_cube(k) for k in range(1, f.corank + 1)]
    while todo:
        i = rng.randrange(len(todo)) if rng else 0
        e = todo.pop(i)
        inside = [b for b in bricks if b.cube == e.cube and all(
            b.word(c).startswith(w) for c, w in e.entries)]
        cols = sorted({c for b in inside for c in b.colors if not e.word(c)}, key=color_key)
        if rng:
            rng.shuffle(cols)
        for c in cols:
            if all(b.word(c) for b in inside):
                todo.extend([e.half(c, "0"), e.half(c, "1")])
                break
        else:
            done.append(e)
    return tuple(sorted(done, key=Brick.sort_key))


def elementary_core(v: Element, w: Element, rng: random.Random | None = None) -> Element:
    """Representative of the maximum elementary expansion of [v] inside [[v], [w]]."""
    _check_coranks(v, w)
    fp = forest_part(compose(w, invert(v))) if w.rank >= v.rank else None
    if fp is None:
        raise ValueError("need [v] <= [w]")
    f = fp[0]
    if f.is_trivial():
        raise ValueError("need [v] < [w]")
    core = Forest(v.action, f.corank, _core_partition(f, rng))
    return compose(core.element(), v)


def weight_multiplicities(f: Forest, kmax: int | None = None) -> list:
    """``[mu_1, ..., mu_kmax]``: number of roots whose image is k leaves."""
    if not f.is_elementary():
        raise ValueError("weight multiplicities need an elementary forest")
    weights = [len(r) for r in f.roots()]
    kmax = kmax if kmax is not None else max(weights, default=0)
    return [sum(1 for x in weights if x == k) for k in range(1, kmax + 1)]


# --------------------------------------------------------------------------


def reduce(h: Element) -> Element:
    """Merge sibling pieces carrying the same twist.

    The merged representation is kept only when both partitions stay dyadic.
    """
    a = h.action
    pieces = list(h.pieces)
    changed = True
    while changed:
        changed = False
        index = {d: k for k, (d, _, _) in enumerate(pieces)}
        for k, (d, r, g) in enumerate(pieces):
            for c, w in d.entries:
                if w[-1] != "0":
                    continue
                j = index.get(d.with_word(c, w[:-1] + "1"))
                if j is None:
                    continue
                d2, r2, g2 = pieces[j]
                if not a.equal(g, g2):
                    continue
                gc = a.apply(g, c)
                rw = r.word(gc)
                if not rw or rw[-1] != "0" or r2 != r.with_word(gc, rw[:-1] + "1"):
                    continue
                merged = (d.with_word(c, w[:-1]), r.with_word(gc, rw[:-1]), g)
                pieces = [p for i, p in enumerate(pieces) if i not in (k, j)] + [merged]
                changed = True
                break
            if changed:
                break
    out = Element(a, h.corank, h.rank, pieces, check=False)
    if len(pieces) < len(h.pieces) and not (
            is_dyadic_partition(out.domain_partition())
            and is_dyadic_partition(out.range_partition())):
        return h
    return out
