import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tbt.actions import (
    ColorError,
    Cyclic2Action,
    HoughtonAction,
    ThompsonFAction,
    TrivialAction,
    action_from_spec,
)

ACTIONS = [TrivialAction(3), Cyclic2Action(), ThompsonFAction(), HoughtonAction(3), HoughtonAction(2)]


@pytest.mark.parametrize("a", ACTIONS, ids=lambda a: a.name)
def test_action_axioms(a):
    rng = random.Random(0)
    for _ in range(1000):
        g, h = a.sample_element(rng), a.sample_element(rng)
        s = a.sample_color(rng)
        assert a.apply(a.identity(), s) == s
        assert a.apply(a.multiply(g, h), s) == a.apply(g, a.apply(h, s))
        assert a.is_identity(a.multiply(g, a.invert(g)))
        assert a.apply(a.invert(g), a.apply(g, s)) == s


@pytest.mark.parametrize("a", ACTIONS, ids=lambda a: a.name)
def test_element_text_round_trip(a):
    rng = random.Random(1)
    for _ in range(100):
        g = a.sample_element(rng)
        assert a.parse_element(a.format_element(g)) == g


def x0_oracle(t):
    if t <= Fraction(1, 2):
        return t / 2
    if t <= Fraction(3, 4):
        return t - Fraction(1, 4)
    return 2 * t - 1


def x1_oracle(t):
    if t <= Fraction(1, 2):
        return t
    return Fraction(1, 2) + x0_oracle(2 * t - 1) / 2


dyadics = st.builds(lambda k, j: Fraction(2 * j + 1, 2 ** k), st.integers(1, 9), st.integers(0, 255)).filter(
    lambda t: 0 < t < 1)


@settings(max_examples=300)
@given(dyadics)
def test_F_generators_match_piecewise_affine_oracle(t):
    a = ThompsonFAction()
    x0, x1 = a.generators()
    assert a.apply(x0, t) == x0_oracle(t)
    assert a.apply(x1, t) == x1_oracle(t)


def test_F_text_forms():
    a = ThompsonFAction()
    x0, x1 = a.generators()
    assert a.format_element(x0) == "F:(()()|(()))"
    assert a.format_element(x1) == "F:(()()()|()(()))"


def test_localized_x0_is_supported_on_its_interval():
    a = ThompsonFAction()
    g = ThompsonFAction.localized_x0("01")
    for t in [Fraction(1, 8), Fraction(1, 2), Fraction(5, 8), Fraction(7, 8)]:
        assert a.apply(g, t) == t
    assert a.apply(g, Fraction(3, 8)) != Fraction(3, 8)
    assert a.localized_x0("") == a.generators()[0]


def test_cyclic_swap():
    a = Cyclic2Action()
    assert a.apply("s", 1) == 2 and a.multiply("s", "s") == "e"
    assert a.parse_element("c2:s") == "s"
    with pytest.raises(ValueError):
        a.parse_element("t")


def test_houghton_shift_and_translation():
    a = HoughtonAction(3)
    t = a.shift(2)
    assert a.apply(t, (1, 1)) == (2, 1)
    assert a.apply(t, (1, 5)) == (1, 4)
    assert a.apply(t, (2, 1)) == (2, 2)
    assert a.apply(t, (3, 7)) == (3, 7)
    assert a.format_element(a.make({(1, 1): (3, 2), (3, 2): (2, 1)}, [-1, 1, 0])) \
        == a.format_element(a.parse_element("H{3; (1,1)->(3,2),(3,2)->(2,1); -1,1,0}"))


def test_houghton_rejects_non_bijections():
    a = HoughtonAction(2)
    with pytest.raises(ValueError):
        a.make({}, [1, 0])
    with pytest.raises(ValueError):
        a.make({(1, 1): (1, 2)}, [0, 0])


def test_color_checks():
    with pytest.raises(ColorError):
        TrivialAction(2).check_color(3)
    with pytest.raises(ColorError):
        ThompsonFAction().check_color(Fraction(1, 3))
    with pytest.raises(ColorError):
        HoughtonAction(2).check_color((3, 1))


def test_action_from_spec():
    assert action_from_spec("trivial:4") == TrivialAction(4)
    assert action_from_spec("c2") == Cyclic2Action()
    assert action_from_spec("houghton:2") == HoughtonAction(2)
    with pytest.raises(ValueError):
        action_from_spec("nope")


def test_F_preserves_order_and_dyadics():
    a = ThompsonFAction()
    rng = random.Random(2)
    for _ in range(500):
        g = a.sample_element(rng)
        pair = sorted({a.sample_color(rng), a.sample_color(rng)})
        if len(pair) < 2:
            continue
        s, t = pair
        gs, gt = a.apply(g, s), a.apply(g, t)
        assert gs < gt
        assert a.contains(gs) and a.contains(gt)


def test_houghton_is_a_translation_off_a_finite_set():
    a = HoughtonAction(3)
    rng = random.Random(3)
    for _ in range(200):
        g = a.sample_element(rng)
        exceptional = {p for p, _ in g.table}
        bound = g.bound()
        for r in range(1, 4):
            for k in range(1, bound + 20):
                if (r, k) not in exceptional:
                    assert a.apply(g, (r, k)) == (r, k + g.offsets[r - 1])
