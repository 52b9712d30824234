import itertools
import random

import pytest

from tbt.actions import TrivialAction
from tbt.cantor import brick
from tbt.complexes import (
    EmVertex,
    build_E,
    build_VE,
    e_bound,
    elementary_partitions,
    em_vertices,
    homology,
    matching_complex,
    morse_value,
    nu,
    sublevel,
    up_set,
    ve_bound,
    ve_level,
    vertex_leq,
)
from tbt.elements import compose, direct_sum_all, invert, perm
from tbt.forests import Forest, coset_equal, coset_leq


def _cparts(k):
    return [tuple(b.entries for b in p) for p in elementary_partitions(range(1, k + 1))]


def test_bounds():
    assert [nu(k) for k in range(2, 12)] == [0, 0, 0, 1, 1, 1, 2, 2, 2, 3]
    assert ve_bound(5) == 0 and ve_bound(4) == -1
    assert all(e_bound(m) < 0 for m in range(2, 7))


def test_elementary_partitions():
    assert len(elementary_partitions([1])) == 2
    # whole cube, two halves, and the quarters cut in either order
    parts = elementary_partitions([1, 2])
    assert sorted(len(p) for p in parts) == [1, 2, 2, 3, 3, 3, 3, 4]


def test_vertex_counts_at_m2():
    assert len(em_vertices(2, [1])) == 2
    assert len(em_vertices(2, [1, 2])) == 4


@pytest.mark.parametrize("k,m", [(1, 2), (1, 3), (2, 2), (2, 3)])
def test_vertices_are_distinct_cosets(k, m):
    a = TrivialAction(k)
    verts = em_vertices(m, list(range(1, k + 1)))
    els = [v.element(a) for v in verts]
    for v, h in zip(verts, els):
        assert EmVertex.from_element(h) == v
    for i, j in itertools.combinations(range(len(els)), 2):
        if els[i].rank == els[j].rank:
            assert not coset_equal(els[i], els[j])


@pytest.mark.parametrize("k,m", [(1, 2), (1, 3), (2, 2), (2, 3)])
def test_vertex_order_matches_coset_order(k, m):
    a = TrivialAction(k)
    cparts = _cparts(k)
    verts = em_vertices(m, list(range(1, k + 1)))
    els = [v.element(a) for v in verts]
    for i, j in itertools.product(range(len(verts)), repeat=2):
        assert vertex_leq(verts[i], verts[j], cparts) == coset_leq(els[i], els[j])


def _random_elementary_forest(a, rng, q):
    parts = elementary_partitions(range(1, (a.size or 1) + 1))
    chosen = [rng.choice(parts) for _ in range(q)]
    return Forest(a, q, tuple(b.moved(k) for k, p in enumerate(chosen, 1) for b in p))


def test_every_f_inverse_p_lands_on_a_vertex():
    rng = random.Random(1)
    for k in (1, 2):
        a = TrivialAction(k)
        for _ in range(200):
            q = rng.randint(1, 3)
            f = _random_elementary_forest(a, rng, q)
            m = f.rank
            if m == q or m > 5:
                continue
            sigma = list(range(1, m + 1))
            rng.shuffle(sigma)
            h = compose(invert(f.element()), perm(a, sigma))
            v = EmVertex.from_element(h)
            assert v in set(em_vertices(m, list(range(1, k + 1))))
            assert coset_equal(v.element(a), h)


def test_up_set_is_upward():
    cparts = _cparts(2)
    for v in em_vertices(3, [1, 2]):
        for w in up_set(v, cparts):
            assert w.rank > v.rank


def test_single_color_E_equals_VE():
    for m in range(2, 6):
        e, ve = build_E(m, 1, max_dim=2), build_VE(m, 1, max_dim=2)
        assert e.f_vector() == ve.f_vector()


@pytest.mark.parametrize("m", [3, 4, 5])
def test_sublevel_at_ve_level_is_VE(m):
    e = build_E(m, 2, max_dim=2)
    ve = build_VE(m, 2, max_dim=2)
    sub = sublevel(e, ve_level(m))
    assert sorted(map(str, sub.vertices)) == sorted(map(str, ve.vertices))
    assert sub.f_vector() == ve.f_vector()


def test_morse_values_count_roots_by_weight():
    for v in em_vertices(5, [1, 2]):
        mv = morse_value(v)
        w = v.weights()
        mu = {k: w.count(k) for k in range(1, 6)}
        assert sum(k * n for k, n in mu.items()) == 5
        assert sum(mu.values()) == mv[-1] == v.rank
        assert mv[:-1] == tuple(mu[k] for k in range(5, 2, -1))


def test_morse_value_examples():
    one_root = EmVertex.make(4, [[(1, ((1, "00"),)), (2, ((1, "01"),)), (3, ((1, "10"),)), (4, ((1, "11"),))]])
    assert morse_value(one_root) == (1, 0, 1)
    pairs = EmVertex.make(4, [[(1, ((1, "0"),)), (2, ((1, "1"),))], [(3, ((2, "0"),)), (4, ((2, "1"),))]])
    assert morse_value(pairs) == (0, 0, 2)
    assert pairs.is_very_elementary() and not one_root.is_very_elementary()
    assert ve_level(4) == (0, 0, 3)


def test_vertex_text():
    v = EmVertex.make(2, [[(1, ((1, "0"),)), (2, ((1, "1"),))]])
    assert str(v) == "1:{1=0} 2:{1=1}"


@pytest.mark.parametrize("k", [1, 2])
def test_ve_connected_from_m5(k):
    for m in (5, 6):
        ve = build_VE(m, k, max_dim=1)
        assert homology(ve, 0) == [(0, [])]


def test_builders_need_trivial_finite_action():
    with pytest.raises(ValueError):
        build_E(3, TrivialAction(None))


def test_directsum_vertex_round_trip():
    a = TrivialAction(1)
    x = Forest(a, 1, (brick(1, {1: "0"}), brick(1, {1: "1"}))).element()
    h = invert(direct_sum_all(x, x))
    assert EmVertex.from_element(h).weights() == [2, 2]


def test_sublevels_are_nested():
    e = build_E(4, 2, max_dim=2)
    levels = sorted({morse_value(v) for v in e.vertices})
    prev = set()
    for lv in levels:
        cur = set(map(str, sublevel(e, lv).vertices))
        assert prev <= cur
        prev = cur
    assert prev == set(map(str, e.vertices))
    # the very elementary level is the smallest named sublevel that is nonempty
    assert sublevel(e, ve_level(4)).vertices


def test_small_matching_complexes():
    assert matching_complex(3).f_vector() == [3]
    m4 = matching_complex(4)
    assert m4.f_vector() == [6, 3]
    assert sorted(len(f) for f in m4.facets()) == [2, 2, 2]


def test_VE_is_an_induced_subcomplex_of_E():
    e, ve = build_E(4, 2, max_dim=3), build_VE(4, 2, max_dim=3)
    keep = [i for i, v in enumerate(e.vertices) if v.is_very_elementary()]
    induced = e.induced(keep)
    assert induced.f_vector() == ve.f_vector()


def test_fat_roots_are_exactly_the_counted_ones():
    for v in em_vertices(4, [1, 2]):
        fat = sum(w >= 3 for w in v.weights())
        assert fat == sum(morse_value(v)[:-1])
        assert v.is_very_elementary() == (fat == 0)


def test_sublevel_extremes():
    e = build_E(4, 2, max_dim=2)
    top = max(morse_value(v) for v in e.vertices)
    assert sublevel(e, top).f_vector() == e.f_vector()
    assert sublevel(e, (0, 0, 0)).vertices == []
