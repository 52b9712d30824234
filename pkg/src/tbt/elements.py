"""Elements of the groupoid of twisted homeomorphisms between Cantor cubes.

An :class:`Element` ``h: C^S(corank) -> C^S(rank)`` is a list of pieces
``(dom_i, ran_i, g_i)``: the brick ``dom_i`` is carried onto ``ran_i`` by
``canon_ran ∘ τ_g ∘ canon_dom⁻¹``, where ``τ_g`` moves the coordinate at
color ``s`` to color ``g·s``.  Both brick lists are dyadic partitions.
"""

from __future__ import annotations

from itertools import permutations as _perms

from .actions import Action
from .cantor import (
    Brick,
    Partition,
    PointPrefix,
    _split_top,
    brick,
    brick_intersection,
    brick_subset,
    is_dyadic_partition,
    is_partition,
    point_in_brick,
    refine_to_dyadic,
    whole_cube,
)

__all__ = [
    "Element",
    "CompositionError",
    "identity",
    "simple_split",
    "twist",
    "perm",
    "twist_sum",
    "compose",
    "compose_all",
    "invert",
    "direct_sum",
    "direct_sum_all",
    "equal",
    "germinal_twist",
    "germinal_twist_set",
    "image_point",
    "is_untwisted",
    "parse_cycles",
    "perm_from_cycles",
    "all_permutations",
]


class CompositionError(ValueError):
    """Rank/corank or action mismatch."""


def _push(dom: Brick, ran: Brick, g, action: Action, sub) -> dict:
    """Words of the image of ``sub ⊆ dom`` (a brick or point) under one piece."""
    out = dict(ran.entries)
    for c, w in sub.entries:
        rest = w[len(dom.word(c)):]
        if rest:
            gc = action.apply(g, c)
            out[gc] = out.get(gc, "") + rest
    return out


class Element:
    """A homeomorphism ``C^S(corank) -> C^S(rank)`` given by twisted pieces."""

    __slots__ = ("action", "corank", "rank", "pieces", "_inv")

    def __init__(self, action: Action, corank: int, rank: int, pieces, *, check: bool = True):
        self.action = action
        self.corank = corank
        self.rank = rank
        self.pieces = tuple(pieces)
        self._inv = {}
        if check:
            self._validate()

    # ---- construction ----------------------------------------------------

    def _validate(self):
        a = self.action
        for d, r, g in self.pieces:
            for c in d.colors:
                a.check_color(c)
            for c in r.colors:
                a.check_color(c)
        dom, ran = self.domain_partition(), self.range_partition()
        if not is_partition(dom) or not is_partition(ran):
            raise ValueError("pieces do not form partitions")
        for _ in range(32):
            dom_ok = is_dyadic_partition(self.domain_partition())
            ran_ok = is_dyadic_partition(self.range_partition())
            if dom_ok and ran_ok:
                return
            if not dom_ok:
                self.pieces = self._refined_domain(refine_to_dyadic(self.domain_partition())).pieces
            else:
                inv = invert(self)
                inv = inv._refined_domain(refine_to_dyadic(inv.domain_partition()))
                self.pieces = invert(inv).pieces
        raise ValueError("could not reach dyadic domain and range partitions")

    @classmethod
    def from_pieces(cls, action, corank, rank, pieces) -> "Element":
        return cls(action, corank, rank, pieces, check=True)

    def _refined_domain(self, fine: Partition) -> "Element":
        """Same map, re-expressed on a refinement of the domain partition."""
        pieces = []
        for b in fine.bricks:
            for d, r, g in self.pieces:
                if brick_subset(b, d):
                    pieces.append((b, brick(r.cube, _push(d, r, g, self.action, b)), g))
                    break
            else:
                raise ValueError("not a refinement of the domain partition")
        return Element(self.action, self.corank, self.rank, pieces, check=False)

    # ---- accessors -------------------------------------------------------

    @property
    def twists(self) -> tuple:
        return tuple(g for _, _, g in self.pieces)

    def domain_partition(self) -> Partition:
        return Partition(tuple(d for d, _, _ in self.pieces), self.corank)

    def range_partition(self) -> Partition:
        return Partition(tuple(r for _, r, _ in self.pieces), self.rank)

    def __len__(self):
        return len(self.pieces)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return equal(self, other)

    __hash__ = None

    def __matmul__(self, other: "Element") -> "Element":
        return compose(self, other)

    def __or__(self, other: "Element") -> "Element":
        return direct_sum(self, other)

    def inverse(self) -> "Element":
        return invert(self)

    def canonical(self) -> "Element":
        """Pieces sorted by domain brick (for display and serialization)."""
        pieces = sorted(self.pieces, key=lambda p: p[0].sort_key())
        return Element(self.action, self.corank, self.rank, pieces, check=False)

    def __str__(self) -> str:
        a = self.action
        items = ", ".join(f"({d} -> {r} : {a.format_element(g)})"
                          for d, r, g in self.canonical().pieces)
        return f"EL{{{self.rank};{self.corank}; {items}}}"

    __repr__ = __str__

    @classmethod
    def parse(cls, text: str, action: Action) -> "Element":
        t = text.strip()
        if not (t.startswith("EL{") and t.endswith("}")):
            raise ValueError(f"bad element literal {text!r}")
        head, _, body = t[3:-1].partition(";")
        corank_s, _, body = body.partition(";")
        rank, corank = int(head), int(corank_s)
        pieces = []
        for item in _split_top(body.strip(), ","):
            if not item:
                continue
            if not (item.startswith("(") and item.endswith(")")):
                raise ValueError(f"bad piece {item!r}")
            d_text, _, rest = item[1:-1].partition("->")
            idx = rest.index("}") + 1
            r_text, g_text = rest[:idx], rest[idx:].strip()
            if not g_text.startswith(":"):
                raise ValueError(f"bad piece {item!r}")
            g_text = g_text[1:]
            pieces.append((Brick.parse(d_text), Brick.parse(r_text),
                           action.parse_element(g_text.strip())))
        return cls(action, corank, rank, pieces)

    # ---- piecewise maps --------------------------------------------------

    def push_brick(self, i: int, sub: Brick) -> Brick:
        d, r, g = self.pieces[i]
        return brick(r.cube, _push(d, r, g, self.action, sub))

    def pull_brick(self, i: int, sub: Brick) -> Brick:
        d, r, g = self.pieces[i]
        gi = self._inv.get(i)
        if gi is None:
            gi = self._inv[i] = self.action.invert(g)
        return brick(d.cube, _push(r, d, gi, self.action, sub))

    def image_of_brick(self, b: Brick) -> list:
        """Image of an arbitrary brick as a list of bricks (one per piece met)."""
        out = []
        for i, (d, _, _) in enumerate(self.pieces):
            x = brick_intersection(b, d)
            if x is not None:
                out.append(self.push_brick(i, x))
        return out

    def piece_of_point(self, p: PointPrefix) -> int:
        for i, (d, _, _) in enumerate(self.pieces):
            if point_in_brick(p, d):
                return i
        raise ValueError("point outside the domain")  # pragma: no cover


# --------------------------------------------------------------------------
# basic elements


def identity(action: Action, n: int = 1) -> Element:
    e = action.identity()
    return Element(action, n, n, [(whole_cube(k), whole_cube(k), e) for k in range(1, n + 1)],
                   check=False)


def simple_split(action: Action, s) -> Element:
    """``x_s: C^S(1) -> C^S(2)``, halves along ``s`` onto the two cubes."""
    action.check_color(s)
    e = action.identity()
    return Element(action, 1, 2, [(brick(1, {s: "0"}), whole_cube(1), e),
                                  (brick(1, {s: "1"}), whole_cube(2), e)], check=False)


def twist(action: Action, g) -> Element:
    return Element(action, 1, 1, [(whole_cube(1), whole_cube(1), g)], check=False)


def twist_sum(action: Action, gs) -> Element:
    """The G-twist ``τ_{g1} ⊕ ... ⊕ τ_{gn}``."""
    gs = list(gs)
    return Element(action, len(gs), len(gs),
                   [(whole_cube(k), whole_cube(k), g) for k, g in enumerate(gs, 1)], check=False)


def perm(action: Action, sigma) -> Element:
    """``p_σ`` sending cube i onto cube ``sigma[i-1]`` (one-based images)."""
    sigma = tuple(sigma)
    n = len(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation: {sigma}")
    e = action.identity()
    return Element(action, n, n, [(whole_cube(k), whole_cube(sigma[k - 1]), e)
                                  for k in range(1, n + 1)], check=False)


def parse_cycles(text: str, n: int) -> tuple:
    """``"(2 3 5)(1 4)"`` (spaces or commas) -> image tuple on ``1..n``."""
    img = list(range(1, n + 1))
    t = text.replace(",", " ").strip()
    while t:
        if not t.startswith("("):
            raise ValueError(f"bad cycle notation {text!r}")
        close = t.index(")")
        cyc = [int(x) for x in t[1:close].split()]
        for x in cyc:
            if not 1 <= x <= n:
                raise ValueError(f"cycle entry {x} outside 1..{n}")
        if len(set(cyc)) != len(cyc):
            raise ValueError(f"repeated entry in cycle {cyc}")
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b
        t = t[close + 1:].strip()
    return tuple(img)


def perm_from_cycles(action: Action, text: str, n: int) -> Element:
    return perm(action, parse_cycles(text, n))


# --------------------------------------------------------------------------
# groupoid operations


def compose(h2: Element, h1: Element) -> Element:
    """``h2 ∘ h1`` by refining the middle space."""
    if h1.action != h2.action:
        raise CompositionError("action mismatch")
    if h1.rank != h2.corank:
        raise CompositionError(f"cannot compose: rank {h1.rank} != corank {h2.corank}")
    a = h1.action
    by_cube: dict = {}
    for j, (d2, _, _) in enumerate(h2.pieces):
        by_cube.setdefault(d2.cube, []).append(j)
    pieces = []
    for i, (_, r1, g1) in enumerate(h1.pieces):
        for j in by_cube.get(r1.cube, ()):
            x = brick_intersection(r1, h2.pieces[j][0])
            if x is None:
                continue
            pieces.append((h1.pull_brick(i, x), h2.push_brick(j, x),
                           a.multiply(h2.pieces[j][2], g1)))
    return Element(a, h1.corank, h2.rank, pieces, check=False)


def compose_all(*hs: Element) -> Element:
    """``hs[0] ∘ hs[1] ∘ ... ∘ hs[-1]``."""
    out = hs[-1]
    for h in reversed(hs[:-1]):
        out = compose(h, out)
    return out


def invert(h: Element) -> Element:
    a = h.action
    return Element(a, h.rank, h.corank, [(r, d, a.invert(g)) for d, r, g in h.pieces], check=False)


def direct_sum(h1: Element, h2: Element) -> Element:
    if h1.action != h2.action:
        raise CompositionError("action mismatch")
    pieces = list(h1.pieces)
    for d, r, g in h2.pieces:
        pieces.append((d.moved(d.cube + h1.corank), r.moved(r.cube + h1.rank), g))
    return Element(h1.action, h1.corank + h2.corank, h1.rank + h2.rank, pieces, check=False)


def direct_sum_all(*hs: Element) -> Element:
    out = hs[0]
    for h in hs[1:]:
        out = direct_sum(out, h)
    return out


def equal(h1: Element, h2: Element) -> bool:
    """Same homeomorphism: compare images and twists on the common refinement."""
    if h1.action != h2.action or h1.rank != h2.rank or h1.corank != h2.corank:
        return False
    a = h1.action
    by_cube: dict = {}
    for j, (d2, _, _) in enumerate(h2.pieces):
        by_cube.setdefault(d2.cube, []).append(j)
    for i, (d1, _, g1) in enumerate(h1.pieces):
        for j in by_cube.get(d1.cube, ()):
            d2, _, g2 = h2.pieces[j]
            x = brick_intersection(d1, d2)
            if x is None:
                continue
            if not a.equal(g1, g2):
                return False
            if h1.push_brick(i, x) != h2.push_brick(j, x):
                return False
    return True


def image_point(h: Element, p: PointPrefix) -> PointPrefix:
    """Exact image of the zero-padded point ``p``."""
    i = h.piece_of_point(p)
    d, r, g = h.pieces[i]
    deep = PointPrefix(p.cube, tuple((c, p.word(c, len(d.word(c)))) for c, _ in _merge(p, d)))
    return PointPrefix.make(r.cube, _push(d, r, g, h.action, deep))


def _merge(p: PointPrefix, d: Brick):
    cols = dict(p.entries)
    for c, w in d.entries:
        cols.setdefault(c, "")
    return sorted(cols.items(), key=lambda cw: (type(cw[0]).__name__, cw[0]))


def germinal_twist(h: Element, p: PointPrefix):
    """Twist label of the piece containing the (zero-padded) point ``p``."""
    return h.pieces[h.piece_of_point(p)][2]


def germinal_twist_set(h: Element) -> set:
    return set(h.twists)


def is_untwisted(h: Element) -> bool:
    a = h.action
    return all(a.is_identity(g) for g in h.twists)


def all_permutations(n: int):
    for p in _perms(range(1, n + 1)):
        yield tuple(p)
