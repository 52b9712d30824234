"""Binary words, dyadic bricks and partitions of multi-cube Cantor spaces.

A brick lives in one cube ``C^S_k`` of ``C^S(m)`` and constrains finitely
many colors to begin with a given binary word.  Words are plain ``str``
objects over ``"01"``; colors are any hashable, mutually comparable values
(ints, ``Fraction`` dyadics, ``(ray, index)`` tuples).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

Color = Hashable

__all__ = [
    "Brick",
    "Partition",
    "PointPrefix",
    "brick",
    "whole_cube",
    "brick_subset",
    "brick_intersection",
    "bricks_disjoint",
    "point_in_brick",
    "is_partition",
    "is_dyadic_partition",
    "greedy_merge",
    "refine_to_dyadic",
    "common_refinement",
    "is_refinement",
    "complement_bricks",
    "format_color",
    "parse_color",
    "color_key",
]


def color_key(c):
    """Total order on colors: by type name first, then natural order."""
    return (type(c).__name__, c)


def _check_word(w: str) -> str:
    if not isinstance(w, str) or w.strip("01"):
        raise ValueError(f"not a binary word: {w!r}")
    return w


@dataclass(frozen=True, order=False)
class Brick:
    """Dyadic brick ``B(psi)`` inside cube ``cube``.

    ``entries`` is the canonical sorted tuple of ``(color, word)`` with every
    word nonempty, so structural equality is brick equality.
    """

    cube: int
    entries: tuple = ()

    def word(self, c) -> str:
        for col, w in self.entries:
            if col == c:
                return w
        return ""

    def as_dict(self) -> dict:
        return dict(self.entries)

    @property
    def colors(self) -> tuple:
        return tuple(c for c, _ in self.entries)

    @property
    def depth(self) -> int:
        return sum(len(w) for _, w in self.entries)

    def is_whole(self) -> bool:
        return not self.entries

    def is_elementary(self) -> bool:
        return all(len(w) <= 1 for _, w in self.entries)

    def with_word(self, c, w: str) -> "Brick":
        d = self.as_dict()
        if w:
            d[c] = w
        else:
            d.pop(c, None)
        return brick(self.cube, d)

    def half(self, c, bit: str) -> "Brick":
        return self.with_word(c, self.word(c) + bit)

    def moved(self, cube: int) -> "Brick":
        return Brick(cube, self.entries)

    def sort_key(self):
        return (self.cube, tuple((color_key(c), w) for c, w in self.entries))

    def __str__(self) -> str:
        inner = ",".join(f"{format_color(c)}={w}" for c, w in self.entries)
        return f"B[{self.cube}]{{{inner}}}"

    @classmethod
    def parse(cls, text: str) -> "Brick":
        text = text.strip()
        if not text.startswith("B[") or not text.endswith("}"):
            raise ValueError(f"bad brick literal: {text!r}")
        close = text.index("]")
        cube = int(text[2:close])
        body = text[close + 1:]
        if not body.startswith("{"):
            raise ValueError(f"bad brick literal: {text!r}")
        body = body[1:-1].strip()
        d = {}
        if body:
            for part in _split_top(body, ","):
                col, _, w = part.rpartition("=")
                d[parse_color(col)] = _check_word(w.strip())
        return brick(cube, d)


def brick(cube: int, mapping: Mapping | Iterable = ()) -> Brick:
    """Build a canonical brick, dropping empty words."""
    items = mapping.items() if isinstance(mapping, Mapping) else mapping
    entries = tuple(sorted(((c, _check_word(w)) for c, w in items if w),
                           key=lambda cw: color_key(cw[0])))
    if cube < 1:
        raise ValueError("cube indices start at 1")
    return Brick(cube, entries)


def whole_cube(cube: int = 1) -> Brick:
    return Brick(cube, ())


def brick_subset(a: Brick, b: Brick) -> bool:
    """``B(a) ⊆ B(b)``: same cube and b's word is a prefix of a's at every color."""
    if a.cube != b.cube:
        return False
    return all(a.word(c).startswith(w) for c, w in b.entries)


def brick_intersection(a: Brick, b: Brick) -> Brick | None:
    if a.cube != b.cube:
        return None
    d = a.as_dict()
    for c, w in b.entries:
        u = d.get(c, "")
        if w.startswith(u):
            d[c] = w
        elif not u.startswith(w):
            return None
    return brick(a.cube, d)


def bricks_disjoint(a: Brick, b: Brick) -> bool:
    return brick_intersection(a, b) is None


@dataclass(frozen=True)
class Partition:
    """An ordered list of bricks meant to partition ``C^S(ambient)``."""

    bricks: tuple
    ambient: int = 1

    def __post_init__(self):
        object.__setattr__(self, "bricks", tuple(self.bricks))
        if self.ambient < 1:
            raise ValueError("ambient must be positive")

    def __len__(self):
        return len(self.bricks)

    def __iter__(self):
        return iter(self.bricks)

    def canonical(self) -> "Partition":
        return Partition(tuple(sorted(self.bricks, key=Brick.sort_key)), self.ambient)

    def same_bricks(self, other: "Partition") -> bool:
        return self.ambient == other.ambient and set(self.bricks) == set(other.bricks)

    def colors(self) -> list:
        cols = {c for b in self.bricks for c in b.colors}
        return sorted(cols, key=color_key)

    def is_elementary(self) -> bool:
        return all(b.is_elementary() for b in self.bricks)

    @classmethod
    def trivial(cls, m: int = 1) -> "Partition":
        return cls(tuple(whole_cube(k) for k in range(1, m + 1)), m)

    def __str__(self) -> str:
        return "{" + ", ".join(str(b) for b in self.bricks) + "}"


@dataclass(frozen=True)
class PointPrefix:
    """A point of ``C^S(m)`` given by finite prefixes, padded with zeros.

    Every color not listed, and every listed word, continues with ``000...``.
    The set of such eventually-zero points is preserved by all twist and
    canonical homeomorphisms, so images stay exact.
    """

    cube: int
    entries: tuple = ()

    @classmethod
    def make(cls, cube: int, mapping: Mapping | Iterable = ()) -> "PointPrefix":
        b = brick(cube, mapping)
        return cls(b.cube, b.entries)

    def word(self, c, length: int | None = None) -> str:
        w = ""
        for col, x in self.entries:
            if col == c:
                w = x
                break
        if length is not None and len(w) < length:
            w = w + "0" * (length - len(w))
        return w

    def as_brick(self) -> Brick:
        return Brick(self.cube, self.entries)

    @classmethod
    def parse(cls, text: str) -> "PointPrefix":
        """``P[k]{c=w,...}``; the ``B[...]`` brick spelling is accepted too."""
        t = text.strip()
        if t.startswith("P["):
            t = "B" + t[1:]
        b = Brick.parse(t)
        return cls(b.cube, b.entries)

    def normalized(self) -> "PointPrefix":
        """Strip trailing zeros: two prefixes denote the same point iff these agree."""
        return PointPrefix.make(self.cube, {c: w.rstrip("0") for c, w in self.entries})

    def __str__(self) -> str:
        inner = ",".join(f"{format_color(c)}={w}" for c, w in self.entries)
        return f"P[{self.cube}]{{{inner}}}"


def point_in_brick(p: PointPrefix, b: Brick) -> bool:
    """Membership of the zero-padded point in ``b``."""
    if p.cube != b.cube:
        return False
    return all(p.word(c, len(w)).startswith(w) for c, w in b.entries)


# --------------------------------------------------------------------------
# partitions


def _halving(region: Brick, bricks: Sequence[Brick], leaves: list | None):
    """Recursive halving of ``region`` against ``bricks``.

    Returns False on a gap or overlap.  When ``leaves`` is a list, every
    terminal region (contained in exactly one brick) is appended to it.
    """
    cands = [b for b in bricks if brick_intersection(region, b) is not None]
    if not cands:
        return False
    for b in cands:
        if brick_subset(region, b):
            if len(cands) != 1:
                return False
            if leaves is not None:
                leaves.append(region)
            return True
    # some candidate is longer than region at some color
    best = None
    for b in cands:
        for c, w in b.entries:
            if len(w) > len(region.word(c)):
                if best is None or color_key(c) < color_key(best):
                    best = c
    assert best is not None
    return (_halving(region.half(best, "0"), cands, leaves)
            and _halving(region.half(best, "1"), cands, leaves))


def _by_cube(p: Partition) -> dict:
    out = {k: [] for k in range(1, p.ambient + 1)}
    for b in p.bricks:
        if b.cube not in out:
            return {}
        out[b.cube].append(b)
    return out


def is_partition(p: Partition) -> bool:
    """Pairwise disjoint bricks covering every cube ``1..ambient``."""
    groups = _by_cube(p)
    if not groups:
        return False
    if len(set(p.bricks)) != len(p.bricks):
        return False
    for k, bs in groups.items():
        for i in range(len(bs)):
            for j in range(i + 1, len(bs)):
                if brick_intersection(bs[i], bs[j]) is not None:
                    return False
        if not _halving(whole_cube(k), bs, None):
            return False
    return True


def _guillotine(region: Brick, bricks: frozenset, memo: dict) -> bool:
    key = (region, bricks)
    if key in memo:
        return memo[key]
    if len(bricks) == 1:
        memo[key] = next(iter(bricks)) == region
        return memo[key]
    ok = False
    colors = sorted({c for b in bricks for c in b.colors}, key=color_key)
    for c in colors:
        n = len(region.word(c))
        if all(len(b.word(c)) > n for b in bricks):
            lo = frozenset(b for b in bricks if b.word(c)[n] == "0")
            hi = bricks - lo
            if (lo and hi and _guillotine(region.half(c, "0"), lo, memo)
                    and _guillotine(region.half(c, "1"), hi, memo)):
                ok = True
                break
    memo[key] = ok
    return ok


def is_dyadic_partition(p: Partition) -> bool:
    """Reachability from the trivial partition by very elementary expansions.

    Decided by guillotine search: a partition of a brick is dyadic iff it is
    the brick itself or some color cuts the brick in two halves with every
    piece on one side and both sides dyadic.
    """
    if not is_partition(p):
        raise ValueError("not a partition")
    memo: dict = {}
    for k, bs in _by_cube(p).items():
        if not _guillotine(whole_cube(k), frozenset(bs), memo):
            return False
    return True


def _sibling(b: Brick, c):
    w = b.word(c)
    if not w:
        return None
    flip = "1" if w[-1] == "0" else "0"
    return b.with_word(c, w[:-1] + flip)


def greedy_merge(p: Partition, rng: random.Random | None = None) -> Partition:
    """Merge sibling pairs until none remain (optionally in random order).

    Reaching the trivial partition certifies dyadicity.  For three or more
    colors the end state depends on merge order, so this is not a decision
    procedure; :func:`is_dyadic_partition` is.
    """
    current = set(p.bricks)
    while True:
        pairs = []
        for b in current:
            for c in b.colors:
                sib = _sibling(b, c)
                if sib in current and b.word(c)[-1] == "0":
                    pairs.append((b, sib, c))
        if not pairs:
            break
        if rng is None:
            pairs.sort(key=lambda t: (t[0].sort_key(), color_key(t[2])))
            b, sib, c = pairs[0]
        else:
            b, sib, c = rng.choice(pairs)
        current -= {b, sib}
        current.add(b.with_word(c, b.word(c)[:-1]))
    return Partition(tuple(sorted(current, key=Brick.sort_key)), p.ambient)


def refine_to_dyadic(p: Partition) -> Partition:
    """Dyadic refinement from the recursive-halving tree of ``p``.

    Every returned brick sits inside exactly one brick of ``p``.  A dyadic
    ``p`` comes back unchanged up to order.
    """
    if not is_partition(p):
        raise ValueError("not a partition")
    if is_dyadic_partition(p):
        return p.canonical()
    leaves: list = []
    for k, bs in _by_cube(p).items():
        _halving(whole_cube(k), bs, leaves)
    return Partition(tuple(leaves), p.ambient).canonical()


def common_refinement(p: Partition, q: Partition) -> Partition:
    if p.ambient != q.ambient:
        raise ValueError("ambient mismatch")
    out = []
    for a in p.bricks:
        for b in q.bricks:
            x = brick_intersection(a, b)
            if x is not None:
                out.append(x)
    return Partition(tuple(out), p.ambient).canonical()


def is_refinement(fine: Partition, coarse: Partition) -> bool:
    """Every brick of ``fine`` lies inside exactly one brick of ``coarse``."""
    return all(sum(brick_subset(b, c) for c in coarse.bricks) == 1 for b in fine.bricks)


def complement_bricks(b: Brick) -> list:
    """Bricks partitioning ``cube ∖ b`` along b's splitting path (dyadic)."""
    out = []
    prefix: dict = {}
    for c, w in b.entries:
        for j in range(len(w)):
            flip = "1" if w[j] == "0" else "0"
            d = dict(prefix)
            d[c] = w[:j] + flip
            out.append(brick(b.cube, d))
        prefix[c] = w
    return out


# --------------------------------------------------------------------------
# text forms


def format_color(c) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    if isinstance(c, tuple):
        return "(" + ",".join(format_color(x) for x in c) + ")"
    return str(c)


def parse_color(text: str):
    t = text.strip()
    if not t:
        raise ValueError("empty color")
    if t.startswith("(") and t.endswith(")"):
        return tuple(parse_color(x) for x in _split_top(t[1:-1], ","))
    if "/" in t:
        num, den = t.split("/")
        return Fraction(int(num), int(den))
    try:
        return int(t)
    except ValueError:
        return t


def _split_top(text: str, sep: str) -> list:
    """Split on ``sep`` outside any bracket pair."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [x.strip() for x in out]
