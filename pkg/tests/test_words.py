import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tbt.actions import Cyclic2Action, ThompsonFAction, TrivialAction
from tbt.elements import (
    compose,
    direct_sum,
    equal,
    identity,
    invert,
    perm,
    simple_split,
    twist,
)
from tbt.factorization import iota1
from tbt.words import (
    Atom,
    Compose,
    EvaluationError,
    Inverse,
    ParseError,
    Sum,
    evaluate,
    parse,
    to_text,
)

atoms = st.sampled_from([Atom("x", ("1",)), Atom("tau", ("s",)), Atom("id", ("2",)),
                         Atom("p", ("(1 2)", "2")), Atom("iota1", ("1", "s"))])


def _nodes(children):
    return st.one_of(
        st.builds(lambda xs: Compose(tuple(xs)), st.lists(children, min_size=2, max_size=3)),
        st.builds(lambda xs: Sum(tuple(xs)), st.lists(children, min_size=2, max_size=3)),
        st.builds(Inverse, children),
    )


trees = st.recursive(atoms, _nodes, max_leaves=8)


def _flatten(node):
    """Drop grouping that the grammar cannot see (nested sums and compositions)."""
    if isinstance(node, (Compose, Sum)):
        parts = []
        for p in map(_flatten, node.parts):
            parts.extend(p.parts if type(p) is type(node) else (p,))
        return type(node)(tuple(parts))
    if isinstance(node, Inverse):
        return Inverse(_flatten(node.inner))
    return node


@settings(max_examples=300)
@given(trees)
def test_print_parse_round_trip(node):
    assert _flatten(parse(to_text(node))) == _flatten(node)


def test_ascii_and_unicode_operators_agree():
    assert parse("x[1] * (id[1] + tau[s])") == parse("x[1] • (id[1] ⊕ tau[s])")


def test_sum_binds_tighter_than_composition():
    node = parse("x[1] • id[1] ⊕ tau[s]")
    assert isinstance(node, Compose) and isinstance(node.parts[1], Sum)


def test_iota1_from_its_definition():
    a = Cyclic2Action()
    h = evaluate("x[1]^-1 • (id[1] ⊕ tau[s]) • x[1]", a)
    assert equal(h, iota1(a, 1, "s"))
    assert equal(evaluate("iota1[1,s]", a), h)


def test_right_factor_applies_first():
    a = TrivialAction(2)
    h = evaluate("(x[2] ⊕ id[1]) • x[1]", a)
    assert equal(h, compose(direct_sum(simple_split(a, 2), identity(a)), simple_split(a, 1)))


def test_permutation_and_inverse_atoms():
    a = TrivialAction(2)
    assert equal(evaluate("p[(1 2),2]", a), perm(a, (2, 1)))
    assert equal(evaluate("x[1]^-1", a), invert(simple_split(a, 1)))
    assert equal(evaluate("x[1]^-1^-1", a), simple_split(a, 1))


def test_environment_and_F_colors():
    a = ThompsonFAction()
    x0 = a.generators()[0]
    assert equal(evaluate("tau[g]", a, {"g": x0}), twist(a, x0))
    assert equal(evaluate("x[3/4]", a), simple_split(a, a.parse_color("3/4")))


@pytest.mark.parametrize("text", ["x[1] • (", "x[1", "x[1] ⊕", "tau[s] ^ 2", "", "foo[1]", "x[1,2]"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse(text)


def test_parse_error_points_at_the_problem():
    with pytest.raises(ParseError) as exc:
        parse("x[1] • (")
    assert exc.value.pos == 8
    assert "^" in str(exc.value)


@pytest.mark.parametrize("text", ["x[3]", "tau[q]", "x[1] • x[1]", "p[(1 3),2]"])
def test_evaluation_errors(text):
    with pytest.raises(EvaluationError):
        evaluate(text, Cyclic2Action())


def test_twist_words_multiply():
    a = ThompsonFAction()
    x0, x1 = a.generators()
    env = {"g": x0, "h": x1}
    assert equal(evaluate("tau[g] • tau[h]", a, env), twist(a, a.multiply(x0, x1)))
    assert equal(evaluate("id[1]", a), identity(a))
