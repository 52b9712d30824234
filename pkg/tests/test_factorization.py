import random

import pytest

from tbt.actions import Cyclic2Action, HoughtonAction, ThompsonFAction, TrivialAction
from tbt.cantor import PointPrefix, brick, point_in_brick
from tbt.elements import (
    compose,
    equal,
    germinal_twist,
    germinal_twist_set,
    identity,
    image_point,
    is_untwisted,
    simple_split,
)
from tbt.factorization import (
    carry_brick,
    factorize,
    generating_graph,
    iota0,
    iota1,
    rho,
)
from tbt.sampling import random_brick, random_group_element, random_untwisted

ACTIONS = [TrivialAction(3), Cyclic2Action(), ThompsonFAction(), HoughtonAction(3)]


def test_iota1_twists_only_the_right_half():
    a = Cyclic2Action()
    h = iota1(a, 1, "s")
    assert germinal_twist(h, PointPrefix.make(1, {1: "0"})) == "e"
    assert germinal_twist(h, PointPrefix.make(1, {1: "1"})) == "s"
    assert germinal_twist_set(h) == {"e", "s"}


def test_iota_maps_are_homomorphisms():
    rng = random.Random(1)
    for a in ACTIONS:
        for _ in range(20):
            g, h = a.sample_element(rng), a.sample_element(rng)
            s = a.sample_color(rng)
            assert equal(compose(iota0(a, g), iota0(a, h)), iota0(a, a.multiply(g, h)))
            assert equal(compose(iota1(a, s, g), iota1(a, s, h)), iota1(a, s, a.multiply(g, h)))


def test_carry_brick_maps_src_onto_dst():
    rng = random.Random(2)
    for a in ACTIONS:
        s = a.orbit_representatives()[0]
        for _ in range(30):
            src, dst = random_brick(a, rng), random_brick(a, rng)
            if src.is_whole() or dst.is_whole():
                continue
            c = carry_brick(a, src, dst, s)
            assert is_untwisted(c)
            p = PointPrefix(1, src.entries)
            assert point_in_brick(image_point(c, p), dst)
    with pytest.raises(ValueError):
        carry_brick(TrivialAction(2), brick(1), brick(1, {1: "0"}), 1)


@pytest.mark.parametrize("a", ACTIONS, ids=lambda a: a.name)
def test_factorization_recomposes(a):
    rng = random.Random(3)
    s = a.orbit_representatives()[0]
    for _ in range(30):
        h = random_group_element(a, rng)
        fw = factorize(h, s)
        assert equal(fw.evaluate(), h)
        for at in fw.atoms:
            if at.kind == "SV":
                assert is_untwisted(at.value)
            else:
                assert at.color == s


def test_untwisted_input_is_a_single_atom():
    a = Cyclic2Action()
    u = random_untwisted(a, random.Random(4))
    fw = factorize(u, 1)
    assert len(fw) == 1 and fw.atoms[0].kind == "SV"


def test_factorize_rejects_non_group_elements():
    with pytest.raises(ValueError):
        factorize(simple_split(Cyclic2Action(), 1), 1)


def test_generating_graphs():
    assert generating_graph(Cyclic2Action()).edges == ((1, 2),)
    assert set(generating_graph(TrivialAction(4)).edges) == {(1, 2), (1, 3), (1, 4)}
    f = generating_graph(ThompsonFAction())
    assert len(f.edges) == 1 and set(f.edges[0]) == {ThompsonFAction().parse_color("1/2"),
                                                      ThompsonFAction().parse_color("1/4")}


@pytest.mark.parametrize("a", ACTIONS, ids=lambda a: a.name)
def test_rho_retracts_iota0(a):
    rng = random.Random(5)
    for _ in range(30):
        g = a.sample_element(rng)
        assert a.equal(rho(iota0(a, g)), g)


def test_rho_ignores_twists_away_from_the_basepoint():
    a = Cyclic2Action()
    assert rho(iota1(a, 1, "s")) == "e"
    assert rho(iota1(a, 1, "s"), PointPrefix.make(1, {1: "1"})) == "s"
    assert rho(identity(a)) == "e"
    with pytest.raises(ValueError):
        rho(simple_split(a, 1))


def test_iota_maps_are_injective():
    rng = random.Random(6)
    for a in ACTIONS:
        for _ in range(30):
            g = a.sample_element(rng)
            if a.is_identity(g):
                continue
            s = a.sample_color(rng)
            assert not equal(iota0(a, g), identity(a))
            assert not equal(iota1(a, s, g), identity(a))


def test_iota1_support_is_the_right_half():
    a = ThompsonFAction()
    g = a.generators()[0]
    s = a.orbit_representatives()[0]
    h = iota1(a, s, g)
    for d, _, t in h.pieces:
        assert (t == g) == (d.word(s).startswith("1"))
    assert equal(iota0(a, a.identity()), identity(a))


def test_factorizing_generators_is_short():
    rng = random.Random(7)
    for a in ACTIONS:
        s = a.orbit_representatives()[0]
        for _ in range(10):
            g = a.sample_element(rng)
            fw = factorize(iota1(a, s, g), s)
            assert len(fw) <= 3 and equal(fw.evaluate(), iota1(a, s, g))
            fw = factorize(iota0(a, g), s)
            assert equal(fw.evaluate(), iota0(a, g))


def test_rho_is_trivial_on_untwisted_elements():
    rng = random.Random(8)
    for a in ACTIONS:
        assert a.is_identity(rho(random_untwisted(a, rng)))
