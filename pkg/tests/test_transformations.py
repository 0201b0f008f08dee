import pytest

from sconvex import (NotationError, ResourceCap, SizeMismatch, Semigroup,
                     Transformation, apply_to_set, closure, compose, identity,
                     parse_transformation, star_witness, syntactic_complexity,
                     transition_semigroup)

from oracles import naive_closure


def t(n, *image):
    return Transformation(n, tuple(image))


def test_identity_and_apply():
    e = identity(3)
    assert e.image == (0, 1, 2)
    assert e.is_identity()
    assert t(3, 1, 1, 2).apply(0) == 1
    assert not t(3, 1, 1, 2).is_identity()


def test_compose_applies_left_factor_first():
    first = t(3, 1, 2, 0)
    second = t(3, 0, 0, 2)
    assert compose(first, second).image == (0, 2, 0)
    with pytest.raises(SizeMismatch):
        compose(first, identity(4))


def test_apply_to_set():
    assert apply_to_set(t(4, 1, 1, 3, 3), {0, 2}) == frozenset({1, 3})


@pytest.mark.parametrize("text, image", [
    ("1", (0, 1, 2, 3)),
    ("(_0^2 q->q+1)", (1, 2, 3, 3)),
    ("(_1^3 q->q-1)", (0, 0, 1, 2)),
    ("(0,1,2)", (1, 2, 0, 3)),
    ("(2)", (0, 1, 2, 3)),
    ("(1,3)", (0, 3, 2, 1)),
    ("({1,2}->3)", (0, 3, 3, 3)),
    ("(Q->2)", (2, 2, 2, 2)),
    ("(Q_4->0)", (0, 0, 0, 0)),
    ("(Q\\{0}->2)", (0, 2, 2, 2)),
    ("(3->1)", (0, 1, 2, 1)),
    ("(0,1)(2->3)", (1, 0, 3, 3)),
])
def test_parse_single_forms(text, image):
    assert parse_transformation(text, 4).image == image


def test_parse_composes_left_to_right():
    # send 0 to 1, then swap 1 with 2: 0 lands on 2
    assert parse_transformation("(0->1)(1,2)", 3).image == (2, 2, 1)
    assert parse_transformation("(1,2)(0->1)", 3).image == (1, 2, 1)


def test_parse_ignores_whitespace_and_unicode_arrows():
    assert parse_transformation(" ( _0^2  q -> q+1 ) ", 4).image == (1, 2, 3, 3)
    assert parse_transformation("(1→3)", 4).image == (0, 3, 2, 3)
    assert parse_transformation("(Q∖{0}->2)", 4).image == (0, 2, 2, 2)


@pytest.mark.parametrize("bad", [
    "", "()", "(0,1", "0,1)", "(q->q+1)",
    "(0,0)", "({}->1)", "(Q_5->0)", "(->)", "junk",
    "(0,1)x(2->3)",
])
def test_parse_rejects(bad):
    with pytest.raises(NotationError):
        parse_transformation(bad, 4)


@pytest.mark.parametrize("bad", ["(_0^9 q->q+1)", "(9->1)", "({1,9}->2)"])
def test_parse_rejects_out_of_range_states(bad):
    from sconvex import StateOutOfRange
    with pytest.raises(StateOutOfRange):
        parse_transformation(bad, 4)


def test_closure_of_full_transformation_monoid_generators():
    gens = [t(3, 1, 2, 0), t(3, 1, 0, 2), t(3, 0, 0, 2)]
    sg = closure(gens)
    assert len(sg) == 27
    assert {x.image for x in sg.elements()} == naive_closure(gens)


def test_closure_respects_cap():
    gens = [t(3, 1, 2, 0), t(3, 1, 0, 2), t(3, 0, 0, 2)]
    with pytest.raises(ResourceCap):
        closure(gens, cap=10)


def test_closure_excludes_identity_unless_generated():
    only_constant = closure([t(3, 1, 1, 1)])
    assert len(only_constant) == 1
    assert identity(3) not in only_constant
    cyc = closure([t(3, 1, 2, 0)])
    assert identity(3) in cyc
    assert len(cyc) == 3


def test_semigroup_membership_and_dump():
    sg = closure([t(2, 1, 1)])
    assert t(2, 1, 1) in sg
    assert t(2, 0, 0) not in sg
    assert sg.dump() == "1 1\n"


def test_transition_semigroup_of_two_state_cycle():
    from sconvex import Dfa
    swap = Dfa(2, ("a",), ((1, 0),), frozenset({1}))
    sg = transition_semigroup(swap)
    assert {x.image for x in sg.elements()} == {(1, 0), (0, 1)}


def test_syntactic_complexity_minimizes_first():
    from sconvex import Dfa
    # two redundant copies of the odd counter; the language only needs 2 states
    bloated = Dfa(4, ("a",), ((3, 2, 1, 0),), frozenset({1, 3}))
    assert syntactic_complexity(bloated) == 2


def test_syntactic_complexity_against_naive_closure():
    w = star_witness(4)
    gens = [Transformation(4, w.delta[k]) for k in range(len(w.alphabet))]
    assert syntactic_complexity(w) == len(naive_closure(gens))
