"""The eight basic relations of the groupoid, checked on random instances."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .actions import Action
from .elements import (
    compose,
    compose_all,
    direct_sum,
    direct_sum_all,
    equal,
    perm,
    simple_split,
    twist,
)
from .sampling import random_element, random_group_element

__all__ = ["RELATIONS", "RelationReport", "check_relation", "check_relations"]


def _random_perm(n, rng):
    p = list(range(1, n + 1))
    rng.shuffle(p)
    return tuple(p)


def _perm_product(a, b):
    """Images of ``a ∘ b`` (apply b, then a)."""
    return tuple(a[b[i] - 1] for i in range(len(b)))


def _distinct_colors(action, rng):
    for _ in range(100):
        s, t = action.sample_color(rng), action.sample_color(rng)
        if s != t:
            return s, t
    raise ValueError(f"{action.name} has fewer than two colors")


def rel_perm_product(action: Action, rng: random.Random) -> bool:
    n = rng.randint(1, 5)
    a, b = _random_perm(n, rng), _random_perm(n, rng)
    return equal(compose(perm(action, a), perm(action, b)), perm(action, _perm_product(a, b)))


def rel_perm_sum(action, rng) -> bool:
    n, k = rng.randint(1, 4), rng.randint(1, 4)
    a, b = _random_perm(n, rng), _random_perm(k, rng)
    joined = a + tuple(n + x for x in b)
    return equal(direct_sum(perm(action, a), perm(action, b)), perm(action, joined))


def rel_twist_product(action, rng) -> bool:
    g, h = action.sample_element(rng), action.sample_element(rng)
    return equal(compose(twist(action, g), twist(action, h)), twist(action, action.multiply(g, h)))


def _small(action, rng, corank=None, rank=None):
    corank = corank or rng.randint(1, 2)
    rank = rank or rng.randint(1, 2)
    return random_element(action, corank, rank, rng, steps=2)


def rel_sum_associative(action, rng) -> bool:
    a, b, c = _small(action, rng), _small(action, rng), _small(action, rng)
    return equal(direct_sum(direct_sum(a, b), c), direct_sum(a, direct_sum(b, c)))


def rel_interchange(action, rng) -> bool:
    a, b, c = (rng.randint(1, 2) for _ in range(3))
    d, e, f = (rng.randint(1, 2) for _ in range(3))
    h1p, h1 = _small(action, rng, a, b), _small(action, rng, b, c)
    h2p, h2 = _small(action, rng, d, e), _small(action, rng, e, f)
    lhs = compose(direct_sum(h1, h2), direct_sum(h1p, h2p))
    return equal(lhs, direct_sum(compose(h1, h1p), compose(h2, h2p)))


def rel_sum_permutation(action, rng) -> bool:
    n = rng.randint(1, 4)
    hs = [random_group_element(action, rng, steps=2) for _ in range(n)]
    sigma = _random_perm(n, rng)
    p = perm(action, sigma)
    lhs = compose(direct_sum_all(*hs), p)
    rhs = compose(p, direct_sum_all(*(hs[sigma[i] - 1] for i in range(n))))
    return equal(lhs, rhs)


def rel_split_twist(action, rng) -> bool:
    s, g = action.sample_color(rng), action.sample_element(rng)
    tg = twist(action, g)
    lhs = compose(simple_split(action, action.apply(g, s)), tg)
    return equal(lhs, compose(direct_sum(tg, tg), simple_split(action, s)))


def rel_split_commute(action, rng) -> bool:
    s, t = _distinct_colors(action, rng)
    xs, xt = simple_split(action, s), simple_split(action, t)
    lhs = compose(direct_sum(xt, xt), xs)
    rhs = compose_all(perm(action, (1, 3, 2, 4)), direct_sum(xs, xs), xt)
    return equal(lhs, rhs)


RELATIONS = {
    "perm-product": rel_perm_product,
    "perm-sum": rel_perm_sum,
    "twist-product": rel_twist_product,
    "sum-associative": rel_sum_associative,
    "sum-interchange": rel_interchange,
    "sum-permutation": rel_sum_permutation,
    "split-twist": rel_split_twist,
    "split-commute": rel_split_commute,
}


@dataclass
class RelationReport:
    action: str
    counts: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(f == 0 for f in self.failures.values())


def check_relation(name: str, action: Action, rng: random.Random, count: int) -> int:
    """Number of failing instances out of ``count``."""
    fn = RELATIONS[name]
    return sum(not fn(action, rng) for _ in range(count))


def check_relations(action: Action, rng: random.Random, count: int = 500) -> RelationReport:
    rep = RelationReport(action.name)
    for name in RELATIONS:
        rep.counts[name] = count
        rep.failures[name] = check_relation(name, action, rng, count)
    return rep
