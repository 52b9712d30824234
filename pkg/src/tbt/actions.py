"""Groups acting faithfully on a color set, with exact element arithmetic.

Every bundled action uses hashable, canonical group elements, so ``==`` is
the word problem.  Products follow function composition:
``apply(multiply(a, b), s) == apply(a, apply(b, s))``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .cantor import _split_top, format_color, parse_color

__all__ = [
    "Action",
    "TrivialAction",
    "Cyclic2Action",
    "ThompsonFAction",
    "HoughtonAction",
    "TreePair",
    "HoughtonElement",
    "ColorError",
    "action_from_spec",
]


class ColorError(ValueError):
    """A color outside the set S of the action."""


class Action:
    """Interface for a group G acting on colors.

    Subclasses provide ``identity``, ``multiply``, ``invert``, ``apply``,
    ``contains`` and the text forms.  ``generators`` and
    ``orbit_representatives`` are optional metadata.
    """

    name = "abstract"

    def identity(self):
        raise NotImplementedError

    def multiply(self, a, b):
        raise NotImplementedError

    def invert(self, a):
        raise NotImplementedError

    def equal(self, a, b) -> bool:
        return a == b

    def is_identity(self, a) -> bool:
        return self.equal(a, self.identity())

    def apply(self, g, s):
        raise NotImplementedError

    def contains(self, s) -> bool:
        raise NotImplementedError

    def check_color(self, s):
        if not self.contains(s):
            raise ColorError(f"{s!r} is not a color of {self.name}")
        return s

    def format_element(self, g) -> str:
        raise NotImplementedError

    def parse_element(self, text: str):
        raise NotImplementedError

    def parse_color(self, text: str):
        return self.check_color(parse_color(text))

    def format_color(self, s) -> str:
        return format_color(s)

    def generators(self):
        return None

    def orbit_representatives(self):
        return None

    def product(self, *gs):
        out = self.identity()
        for g in gs:
            out = self.multiply(out, g)
        return out

    # sampling hooks used by tests and the CLI
    def sample_color(self, rng: random.Random):
        raise NotImplementedError

    def sample_element(self, rng: random.Random, length: int = 3):
        gens = self.generators() or []
        if not gens:
            return self.identity()
        g = self.identity()
        for _ in range(rng.randint(0, length)):
            h = rng.choice(gens)
            if rng.random() < 0.5:
                h = self.invert(h)
            g = self.multiply(g, h)
        return g

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(self.__dict__.items()))))

    def __repr__(self):
        return f"<{self.name}>"


class TrivialAction(Action):
    """Trivial group on colors ``1..size`` (``size=None``: all positive ints)."""

    def __init__(self, size: int | None = 2):
        if size is not None and size < 1:
            raise ValueError("need at least one color")
        self.size = size
        self.name = f"trivial:{size if size is not None else 'inf'}"

    def identity(self):
        return "e"

    def multiply(self, a, b):
        return "e"

    def invert(self, a):
        return "e"

    def apply(self, g, s):
        self.check_color(s)
        return s

    def contains(self, s) -> bool:
        return isinstance(s, int) and not isinstance(s, bool) and s >= 1 and (
            self.size is None or s <= self.size)

    def format_element(self, g) -> str:
        return "e"

    def parse_element(self, text: str):
        if text.strip() != "e":
            raise ValueError(f"unknown element {text!r} of the trivial group")
        return "e"

    def generators(self):
        return []

    def orbit_representatives(self):
        if self.size is None:
            return None
        return list(range(1, self.size + 1))

    def colors(self):
        return list(range(1, (self.size or 4) + 1))

    def sample_color(self, rng):
        return rng.randint(1, self.size or 6)


class Cyclic2Action(Action):
    """``S = {1, 2}`` with the swap ``s`` of order two."""

    name = "c2"

    def identity(self):
        return "e"

    def multiply(self, a, b):
        return "e" if a == b else "s"

    def invert(self, a):
        return a

    def apply(self, g, s):
        self.check_color(s)
        if g == "e":
            return s
        return 3 - s

    def contains(self, s) -> bool:
        return s in (1, 2) and isinstance(s, int)

    def format_element(self, g) -> str:
        return g

    def parse_element(self, text: str):
        t = text.strip()
        if t.startswith("c2:"):
            t = t[3:]
        if t not in ("e", "s"):
            raise ValueError(f"unknown element {text!r} of C2")
        return t

    def generators(self):
        return ["s"]

    def orbit_representatives(self):
        return [1]

    def colors(self):
        return [1, 2]

    def sample_color(self, rng):
        return rng.randint(1, 2)

    def sample_element(self, rng, length=3):
        return rng.choice(["e", "s"])


# --------------------------------------------------------------------------
# Thompson's group F on dyadic rationals


def _word_value(w: str) -> Fraction:
    return Fraction(int(w, 2), 2 ** len(w)) if w else Fraction(0)


def _tree_to_dyck(leaves) -> str:
    """Dyck encoding of a binary tree given by its leaf words (node = '(' L ')' R)."""
    leaves = set(leaves)

    def enc(prefix):
        if prefix in leaves:
            return ""
        return "(" + enc(prefix + "0") + ")" + enc(prefix + "1")

    return enc("")


def _dyck_to_leaves(text: str) -> tuple:
    pos = 0
    out = []

    def dec(prefix):
        nonlocal pos
        if pos < len(text) and text[pos] == "(":
            pos += 1
            dec(prefix + "0")
            if pos >= len(text) or text[pos] != ")":
                raise ValueError(f"unbalanced tree encoding {text!r}")
            pos += 1
            dec(prefix + "1")
        else:
            out.append(prefix)

    dec("")
    if pos != len(text):
        raise ValueError(f"trailing characters in tree encoding {text!r}")
    return tuple(out)


@dataclass(frozen=True)
class TreePair:
    """Reduced tree-pair diagram: leaf ``domain[i]`` maps affinely onto ``range[i]``."""

    domain: tuple
    range: tuple

    def __post_init__(self):
        if len(self.domain) != len(self.range):
            raise ValueError("trees need equal leaf counts")

    @staticmethod
    def reduced(domain, range_) -> "TreePair":
        d, r = list(domain), list(range_)
        changed = True
        while changed:
            changed = False
            for i in range(len(d) - 1):
                a, b, x, y = d[i], d[i + 1], r[i], r[i + 1]
                if (a and b and a[:-1] == b[:-1] and a[-1] == "0" and b[-1] == "1"
                        and x and y and x[:-1] == y[:-1] and x[-1] == "0" and y[-1] == "1"):
                    d[i:i + 2] = [a[:-1]]
                    r[i:i + 2] = [x[:-1]]
                    changed = True
                    break
        return TreePair(tuple(d), tuple(r))

    def __str__(self):
        return f"F:({_tree_to_dyck(self.domain)}|{_tree_to_dyck(self.range)})"


def _refine_leaves(a, b):
    """Common refinement of two complete prefix codes, in left-to-right order."""
    out = set()
    for u in a:
        for v in b:
            if u.startswith(v):
                out.add(u)
            elif v.startswith(u):
                out.add(v)
    return sorted(out)


def _tp_image(tp: TreePair, w: str) -> str:
    for d, r in zip(tp.domain, tp.range):
        if w.startswith(d):
            return r + w[len(d):]
    raise ValueError("leaf not covered")  # pragma: no cover


class ThompsonFAction(Action):
    """Thompson's group F acting on the dyadic rationals of (0, 1)."""

    name = "F"

    X0 = TreePair(("0", "10", "11"), ("00", "01", "1"))
    X1 = TreePair(("0", "10", "110", "111"), ("0", "100", "101", "11"))

    def identity(self):
        return TreePair(("",), ("",))

    def multiply(self, a: TreePair, b: TreePair) -> TreePair:
        # a ∘ b: refine b's range against a's domain
        mid = _refine_leaves(b.range, a.domain)
        inv_b = dict(zip(b.range, b.domain))
        dom, ran = [], []
        for u in mid:
            for r, d in inv_b.items():
                if u.startswith(r):
                    dom.append(d + u[len(r):])
                    break
            ran.append(_tp_image(a, u))
        # mid is ordered and both maps are order preserving
        return TreePair.reduced(dom, ran)

    def invert(self, a: TreePair) -> TreePair:
        return TreePair(a.range, a.domain)

    def apply(self, g: TreePair, s):
        self.check_color(s)
        for d, r in zip(g.domain, g.range):
            lo = _word_value(d)
            if lo <= s < lo + Fraction(1, 2 ** len(d)):
                return _word_value(r) + (s - lo) * Fraction(2 ** len(d), 2 ** len(r))
        raise ColorError(s)  # pragma: no cover

    def contains(self, s) -> bool:
        if isinstance(s, int) and not isinstance(s, bool):
            return False
        if not isinstance(s, Fraction):
            return False
        den = s.denominator
        return 0 < s < 1 and den & (den - 1) == 0

    def format_element(self, g: TreePair) -> str:
        return str(g)

    def parse_element(self, text: str) -> TreePair:
        t = text.strip()
        named = {"e": self.identity(), "x0": self.X0, "x1": self.X1}
        if t in named:
            return named[t]
        if t.endswith("^-1") and t[:-3] in named:
            return self.invert(named[t[:-3]])
        if not (t.startswith("F:(") and t.endswith(")")):
            raise ValueError(f"bad F element {text!r}")
        dom, sep, ran = t[3:-1].partition("|")
        if not sep:
            raise ValueError(f"bad F element {text!r}")
        d, r = _dyck_to_leaves(dom), _dyck_to_leaves(ran)
        return TreePair.reduced(d, r)

    def generators(self):
        return [self.X0, self.X1]

    def orbit_representatives(self):
        return [Fraction(1, 2)]

    def sample_color(self, rng):
        k = rng.randint(1, 4)
        return Fraction(2 * rng.randrange(2 ** (k - 1)) + 1, 2 ** k)

    def colors(self):
        return [Fraction(1, 2), Fraction(1, 4), Fraction(3, 4)]

    @staticmethod
    def localized_x0(w: str) -> TreePair:
        """Copy of x0 supported on the standard dyadic interval of ``w``."""
        comp = []
        for j in range(len(w)):
            comp.append(w[:j] + ("1" if w[j] == "0" else "0"))
        dom = sorted(comp + [w + "0", w + "10", w + "11"])
        ran = sorted(comp + [w + "00", w + "01", w + "1"])
        return TreePair.reduced(dom, ran)


# --------------------------------------------------------------------------
# Houghton groups


@dataclass(frozen=True)
class HoughtonElement:
    """Bijection of ``{1..n} × N``: translation by ``offsets[r-1]`` on ray r,
    except at the finitely many points listed in ``table``.

    ``table`` is canonical: exactly the points whose image differs from the
    translation rule, sorted.
    """

    n: int
    table: tuple
    offsets: tuple

    def __call__(self, p):
        for a, b in self.table:
            if a == p:
                return b
        r, k = p
        return (r, k + self.offsets[r - 1])

    def bound(self) -> int:
        m = 0
        for (r, k), (r2, k2) in self.table:
            m = max(m, k, k2)
        return m + max((abs(o) for o in self.offsets), default=0) + 1


class HoughtonAction(Action):
    """Houghton group ``H_n`` on ``{1..n} × {1, 2, ...}``."""

    def __init__(self, n: int = 3):
        if n < 1:
            raise ValueError("need at least one ray")
        self.n = n
        self.name = f"houghton:{n}"

    def make(self, mapping=None, offsets=None) -> HoughtonElement:
        """Build and validate an element from exceptional values and offsets."""
        offsets = tuple(offsets or (0,) * self.n)
        if len(offsets) != self.n:
            raise ValueError("one offset per ray")
        if sum(offsets) != 0:
            raise ValueError("offsets must sum to zero")
        mapping = dict(mapping or {})
        for p, q in mapping.items():
            self.check_color(p)
            self.check_color(q)
        raw = HoughtonElement(self.n, tuple(sorted(mapping.items())), offsets)
        m = raw.bound() + max((k for (_, k) in mapping), default=0)
        box = [(r, k) for r in range(1, self.n + 1) for k in range(1, m + 1)]
        images = [raw(p) for p in box]
        for q in images:
            if not self.contains(q):
                raise ValueError("data does not define a map into S")
        if len(set(images)) != len(images):
            raise ValueError("data does not define an injection")
        for (r, j) in images:
            if j > m + offsets[r - 1]:
                raise ValueError("data does not define a bijection")
        return self._canon(raw, m)

    def _canon(self, g: HoughtonElement, m: int) -> HoughtonElement:
        table = []
        for r in range(1, self.n + 1):
            for k in range(1, m + 1):
                q = g((r, k))
                if q != (r, k + g.offsets[r - 1]):
                    table.append(((r, k), q))
        return HoughtonElement(self.n, tuple(sorted(table)), g.offsets)

    def identity(self):
        return HoughtonElement(self.n, (), (0,) * self.n)

    def multiply(self, a, b):
        offs = tuple(x + y for x, y in zip(a.offsets, b.offsets))
        m = a.bound() + b.bound() + 1
        table = {}
        for r in range(1, self.n + 1):
            for k in range(1, m + 1):
                table[(r, k)] = a(b((r, k)))
        return self._canon(HoughtonElement(self.n, tuple(sorted(table.items())), offs), m)

    def invert(self, a):
        offs = tuple(-x for x in a.offsets)
        m = a.bound() + 1
        big = m + max((abs(o) for o in a.offsets), default=0) + 1
        inv = {}
        for r in range(1, self.n + 1):
            for k in range(1, big + 1):
                inv[a((r, k))] = (r, k)
        table = {(r, k): inv[(r, k)] for r in range(1, self.n + 1) for k in range(1, m + 1)}
        return self._canon(HoughtonElement(self.n, tuple(sorted(table.items())), offs), m)

    def apply(self, g, s):
        self.check_color(s)
        return g(s)

    def contains(self, s) -> bool:
        return (isinstance(s, tuple) and len(s) == 2 and all(isinstance(x, int) for x in s)
                and 1 <= s[0] <= self.n and s[1] >= 1)

    def format_element(self, g) -> str:
        table = ",".join(f"{format_color(p)}->{format_color(q)}" for p, q in g.table)
        offs = ",".join(str(o) for o in g.offsets)
        return f"H{{{self.n}; {table}; {offs}}}"

    def parse_element(self, text: str):
        t = text.strip()
        if t == "e":
            return self.identity()
        if not (t.startswith("H{") and t.endswith("}")):
            raise ValueError(f"bad Houghton element {text!r}")
        parts = [x.strip() for x in t[2:-1].split(";")]
        if len(parts) != 3 or int(parts[0]) != self.n:
            raise ValueError(f"bad Houghton element {text!r}")
        mapping = {}
        if parts[1]:
            for item in _split_top(parts[1], ","):
                a, _, b = item.partition("->")
                mapping[parse_color(a)] = parse_color(b)
        offsets = [int(x) for x in parts[2].split(",")] if parts[2] else []
        return self.make(mapping, offsets)

    def shift(self, i: int) -> HoughtonElement:
        """Generator pushing ray 1 into ray i: (1,1) -> (i,1)."""
        offs = [0] * self.n
        offs[0] -= 1
        offs[i - 1] += 1
        return self.make({(1, 1): (i, 1)}, offs)

    def transposition(self, p, q) -> HoughtonElement:
        return self.make({p: q, q: p})

    def generators(self):
        gens = [self.shift(i) for i in range(2, self.n + 1)]
        if self.n <= 2:
            gens.append(self.transposition((1, 1), (1, 2)))
        return gens

    def orbit_representatives(self):
        return [(1, 1)]

    def sample_color(self, rng):
        return (rng.randint(1, self.n), rng.randint(1, 4))

    def colors(self):
        return [(r, 1) for r in range(1, self.n + 1)]

    def sample_element(self, rng, length=3):
        g = super().sample_element(rng, length)
        if rng.random() < 0.5:
            p = self.sample_color(rng)
            q = self.sample_color(rng)
            if p != q:
                g = self.multiply(g, self.transposition(p, q))
        return g


def action_from_spec(text: str) -> Action:
    """``trivial:<k>``, ``c2``, ``F`` or ``houghton:<n>``."""
    t = text.strip()
    kind, _, arg = t.partition(":")
    if kind == "trivial":
        return TrivialAction(int(arg) if arg else 2)
    if kind == "c2":
        return Cyclic2Action()
    if kind == "F":
        return ThompsonFAction()
    if kind == "houghton":
        return HoughtonAction(int(arg) if arg else 3)
    raise ValueError(f"unknown action {text!r}")
