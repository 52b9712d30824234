"""Random generators for bricks, forests, elements and points.

Everything takes an explicit ``random.Random`` so runs are reproducible.
Random elements are built in forest-twist-forest form ``f2⁻¹ · t · f1``.
"""

from __future__ import annotations

import random

from .actions import Action
from .cantor import Brick, PointPrefix, whole_cube
from .elements import Element, compose, invert
from .forests import Forest, TwistedPermutation

__all__ = [
    "random_forest",
    "random_tree",
    "random_twisted_permutation",
    "random_element",
    "random_group_element",
    "random_untwisted",
    "random_point",
    "random_brick",
]


def _expand(action: Action, bricks: list, steps: int, rng: random.Random, max_depth: int):
    for _ in range(steps):
        i = rng.randrange(len(bricks))
        c = action.sample_color(rng)
        b = bricks[i]
        if len(b.word(c)) >= max_depth:
            continue
        bricks[i:i + 1] = [b.half(c, "0"), b.half(c, "1")]
    return bricks


def random_forest(action: Action, corank: int, rng: random.Random, steps: int = 3,
                  max_depth: int = 3, shuffle: bool = True) -> Forest:
    """Forest from ``steps`` random very elementary expansions of the trivial partition."""
    bricks = _expand(action, [whole_cube(k) for k in range(1, corank + 1)], steps, rng, max_depth)
    if shuffle:
        rng.shuffle(bricks)
    return Forest(action, corank, tuple(bricks))


def random_tree(action: Action, rng: random.Random, steps: int = 3, max_depth: int = 3) -> Forest:
    return random_forest(action, 1, rng, steps, max_depth)


def random_twisted_permutation(action: Action, n: int, rng: random.Random,
                               twisted: bool = True) -> TwistedPermutation:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    if twisted:
        twists = tuple(action.sample_element(rng) for _ in range(n))
    else:
        twists = tuple(action.identity() for _ in range(n))
    return TwistedPermutation(action, tuple(perm), twists)


def random_element(action: Action, corank: int, rank: int, rng: random.Random,
                   steps: int = 3, twisted: bool = True) -> Element:
    """Random element ``C^S(corank) → C^S(rank)``.

    Both forests are expanded until they have the same number of leaves.
    """
    f1 = random_forest(action, corank, rng, steps)
    f2 = random_forest(action, rank, rng, steps)
    while f1.rank != f2.rank:
        small, big = (f1, f2) if f1.rank < f2.rank else (f2, f1)
        bricks = _expand(action, list(small.bricks), big.rank - small.rank, rng, 6)
        grown = Forest(action, small.corank, tuple(bricks))
        if small is f1:
            f1 = grown
        else:
            f2 = grown
    t = random_twisted_permutation(action, f1.rank, rng, twisted)
    return compose(invert(f2.element()), compose(t.element(), f1.element()))


def random_group_element(action: Action, rng: random.Random, steps: int = 3,
                         twisted: bool = True) -> Element:
    return random_element(action, 1, 1, rng, steps, twisted)


def random_untwisted(action: Action, rng: random.Random, steps: int = 3) -> Element:
    return random_group_element(action, rng, steps, twisted=False)


def random_point(action: Action, rng: random.Random, cube: int = 1, colors=None,
                 max_len: int = 5) -> PointPrefix:
    """Random finite prefix; the point it denotes is zero-padded."""
    colors = list(colors) if colors is not None else []
    colors += [action.sample_color(rng) for _ in range(rng.randint(0, 3))]
    mapping = {}
    for c in colors:
        w = "".join(rng.choice("01") for _ in range(rng.randint(0, max_len)))
        if w:
            mapping[c] = w
    return PointPrefix.make(cube, mapping)


def random_brick(action: Action, rng: random.Random, cube: int = 1, max_len: int = 3) -> Brick:
    b = whole_cube(cube)
    for _ in range(rng.randint(0, 3)):
        c = action.sample_color(rng)
        if len(b.word(c)) < max_len:
            b = b.half(c, rng.choice("01"))
    return b
