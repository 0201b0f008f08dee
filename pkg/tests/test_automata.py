import random

import pytest
from hypothesis import given, strategies as st

from sconvex import (AlphabetMismatch, Dfa, FormatError, Nfa, NotMinimal,
                     ResourceCap, atom_count, complete_to, complexity,
                     determinize, direct_product, equivalent, is_minimal,
                     minimize, product_nfa, quotient_contains, reverse_nfa,
                     star_nfa, union_alphabet)

from conftest import random_dfa
from oracles import signature_atom_count, table_filling_complexity

ODD_A = Dfa(2, ("a",), ((1, 0),), frozenset({1}))

# 0 --a--> 1 (accept), 0 --b--> 2 --a--> 3 --a--> 1; everything else dies in 4
A_OR_BAA = Dfa(5, ("a", "b"),
               ((1, 4, 3, 1, 4),
                (2, 4, 4, 4, 4)),
               frozenset({1}))

ENDS_A = Dfa(2, ("a", "b"), ((1, 1), (0, 0)), frozenset({1}))
ENDS_B = Dfa(2, ("a", "b"), ((0, 0), (1, 1)), frozenset({1}))


def test_run_and_accepts():
    assert ODD_A.accepts("a")
    assert not ODD_A.accepts("aa")
    assert ODD_A.run("aaa") == 1
    assert A_OR_BAA.accepts("a")
    assert A_OR_BAA.accepts("baa")
    for w in ("", "b", "ba", "aa", "ab", "baaa"):
        assert not A_OR_BAA.accepts(w)


def test_construction_rejects_bad_tables():
    with pytest.raises(FormatError):
        Dfa(2, ("a",), ((1, 2),), frozenset())
    with pytest.raises(FormatError):
        Dfa(2, ("a", "a"), ((1, 0), (0, 1)), frozenset())
    with pytest.raises(FormatError):
        Dfa(2, ("a",), ((1, 0),), frozenset({5}))
    with pytest.raises(FormatError):
        Dfa(0, ("a",), (), frozenset())
    with pytest.raises(FormatError):
        Dfa(2, ("a",), ((1, 0),), frozenset(), initial=1)


def test_text_round_trip():
    for d in (ODD_A, A_OR_BAA, ENDS_A):
        assert Dfa.from_text(d.to_text()) == d


def test_from_text_tolerates_comments_and_blank_lines():
    text = """
    # two states over a single letter
    states 2
    alphabet a
    initial 0
    final 1   # odd length

    0 a 1
    1 a 0
    """
    assert Dfa.from_text(text) == ODD_A


@pytest.mark.parametrize("mutation, message", [
    ("states 2\nalphabet a\ninitial 0\nfinal 1\n0 a 1\n", "incomplete"),
    ("states 2\nalphabet a\ninitial 0\nfinal 1\n0 a 1\n1 a 0\n0 a 0\n", "duplicate"),
    ("states 2\nalphabet a\ninitial 0\nfinal 1\n0 b 1\n1 a 0\n", "unknown letter"),
    ("states 2\nalphabet a\ninitial 1\nfinal 1\n0 a 1\n1 a 0\n", "initial"),
    ("states 2\nalphabet a\ninitial 0\nfinal 9\n0 a 1\n1 a 0\n", "out of range"),
    ("states x\nalphabet a\ninitial 0\nfinal 1\n0 a 1\n1 a 0\n", "integer"),
    ("states 2\nalphabet a\n", "too short"),
])
def test_from_text_rejects(mutation, message):
    with pytest.raises(FormatError, match=message):
        Dfa.from_text(mutation)


def test_minimize_merges_equivalent_states():
    # states 2 and 3 duplicate 0 and 1
    bloated = Dfa(4, ("a",), ((3, 2, 1, 0),), frozenset({1, 3}))
    m = minimize(bloated)
    assert m.n == 2
    assert equivalent(m, ODD_A)
    assert minimize(m) == m


def test_minimize_drops_unreachable_states():
    d = Dfa(3, ("a",), ((1, 0, 2),), frozenset({1}))
    assert complexity(d) == 2


def test_complexity_of_empty_and_full():
    assert complexity(Dfa(1, ("a",), ((0,),), frozenset())) == 1
    assert complexity(Dfa(3, ("a",), ((1, 2, 0),), frozenset({0, 1, 2}))) == 1


def test_is_minimal():
    assert is_minimal(A_OR_BAA)
    assert not is_minimal(Dfa(4, ("a",), ((3, 2, 1, 0),), frozenset({1, 3})))


def second_to_last_a_nfa():
    # accepts words over {a,b} with an 'a' in the second-to-last position
    return Nfa(3, ("a", "b"),
               ((frozenset({0, 1}), frozenset({0})),
                (frozenset({2}), frozenset({2})),
                (frozenset(), frozenset())),
               (frozenset(), frozenset(), frozenset()),
               initials=frozenset({0}), finals=frozenset({2}))


def test_determinize_simple_nfa():
    d = determinize(second_to_last_a_nfa())
    for w in ("ab", "aa", "bab", "abaab"):
        assert d.accepts(w)
    for w in ("", "a", "ba", "abb"):
        assert not d.accepts(w)
    assert complexity(d) == 4


def test_determinize_resource_cap():
    with pytest.raises(ResourceCap):
        determinize(second_to_last_a_nfa(), cap=2)


def test_determinize_epsilon_closure():
    # epsilon from 0 to 1, so the empty word is accepted
    m = Nfa(2, ("a",),
            ((frozenset(),), (frozenset({1}),)),
            (frozenset({1}), frozenset()),
            initials=frozenset({0}), finals=frozenset({1}))
    d = determinize(m)
    assert d.accepts("")
    assert d.accepts("a")


def test_star_of_single_word():
    single_a = Dfa(3, ("a", "b"), ((1, 2, 2), (2, 2, 2)), frozenset({1}))
    d = determinize(star_nfa(single_a))
    assert d.accepts("")
    assert d.accepts("aaa")
    assert not d.accepts("ab")
    assert complexity(d) == 2


def test_star_of_empty_language():
    empty = Dfa(1, ("a",), ((0,),), frozenset())
    d = determinize(star_nfa(empty))
    assert d.accepts("")
    assert not d.accepts("a")


def test_product_concatenation():
    # {a} . {b} = {ab}
    single_a = Dfa(3, ("a", "b"), ((1, 2, 2), (2, 2, 2)), frozenset({1}))
    single_b = Dfa(3, ("a", "b"), ((2, 2, 2), (1, 2, 2)), frozenset({1}))
    d = determinize(product_nfa(single_a, single_b))
    assert d.accepts("ab")
    for w in ("", "a", "b", "ba", "abb", "aab"):
        assert not d.accepts(w)


def test_product_alphabet_rules():
    one_letter = Dfa(2, ("a",), ((1, 1),), frozenset({1}))
    other = Dfa(2, ("b",), ((1, 1),), frozenset({1}))
    with pytest.raises(AlphabetMismatch):
        product_nfa(one_letter, other)
    d = determinize(product_nfa(one_letter, other, complete_missing=True))
    assert d.alphabet == ("a", "b")
    # missing letters self-loop, so extra b's may appear anywhere
    assert d.accepts("ab")
    assert d.accepts("bab")
    assert not d.accepts("")


def test_complete_to_and_union_alphabet():
    d = complete_to(ODD_A, ("a", "b"))
    assert d.accepts("ba")
    assert d.accepts("aba") is False
    with pytest.raises(AlphabetMismatch):
        complete_to(d, ("b",))
    assert union_alphabet(ODD_A, ENDS_B) == ("a", "b")


@pytest.mark.parametrize("op, expected", [
    ("union", 2), ("xor", 2), ("diff", 2), ("intersect", 1),
])
def test_direct_product_complexities(op, expected):
    assert complexity(direct_product(ENDS_A, ENDS_B, op)) == expected


def test_direct_product_matches_letters_by_name():
    flipped = Dfa(2, ("b", "a"), ((0, 0), (1, 1)), frozenset({1}))
    assert equivalent(direct_product(ENDS_A, flipped, "union"),
                      direct_product(ENDS_A, ENDS_A, "union"))
    with pytest.raises(ValueError):
        direct_product(ENDS_A, ENDS_B, "nand")
    with pytest.raises(AlphabetMismatch):
        direct_product(ODD_A, ENDS_B, "union")


def test_quotient_contains():
    # in A_OR_BAA the quotient at 3 is {a} and at 2 it is {aa}
    assert quotient_contains(A_OR_BAA, 4, 0)
    assert not quotient_contains(A_OR_BAA, 0, 4)
    assert quotient_contains(A_OR_BAA, 1, 1)
    assert not quotient_contains(A_OR_BAA, 3, 2)
    with pytest.raises(ValueError):
        quotient_contains(A_OR_BAA, 0, 9)


def test_equivalent():
    bloated = Dfa(4, ("a",), ((3, 2, 1, 0),), frozenset({1, 3}))
    assert equivalent(bloated, ODD_A)
    assert not equivalent(ODD_A, Dfa(2, ("a",), ((1, 0),), frozenset({0})))
    with pytest.raises(AlphabetMismatch):
        equivalent(ODD_A, ENDS_A)


def test_atom_count_requires_minimal():
    with pytest.raises(NotMinimal):
        atom_count(Dfa(4, ("a",), ((3, 2, 1, 0),), frozenset({1, 3})))


def test_atom_count_small_cases():
    assert atom_count(ODD_A) == 2
    assert atom_count(minimize(A_OR_BAA)) == signature_atom_count(minimize(A_OR_BAA))


def test_dot_output_mentions_every_state():
    dot = A_OR_BAA.to_dot("g")
    assert dot.startswith("digraph g {")
    for q in range(5):
        assert f"{q} [" in dot
    assert "doublecircle" in dot
    ndot = reverse_nfa(A_OR_BAA).to_dot()
    assert "digraph" in ndot


@given(st.integers(min_value=0, max_value=2 ** 32 - 1))
def test_minimize_preserves_language(seed):
    rng = random.Random(seed)
    d = random_dfa(rng, rng.randint(1, 6), rng.randint(1, 3))
    m = minimize(d)
    assert equivalent(d, m)
    assert m.n <= d.n
    assert is_minimal(m)


@given(st.integers(min_value=0, max_value=2 ** 32 - 1))
def test_complexity_matches_table_filling(seed):
    rng = random.Random(seed)
    d = random_dfa(rng, rng.randint(1, 6), rng.randint(1, 3))
    assert complexity(d) == table_filling_complexity(d)


@given(st.integers(min_value=0, max_value=2 ** 32 - 1))
def test_double_reversal_preserves_language(seed):
    rng = random.Random(seed)
    d = random_dfa(rng, rng.randint(1, 5), rng.randint(1, 3))
    twice = determinize(reverse_nfa(determinize(reverse_nfa(minimize(d)))))
    assert equivalent(d, twice)
