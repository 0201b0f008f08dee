"""Decision procedures for suffix-convexity and its three special cases.

A language is suffix-convex when w in L and uvw in L force vw in L.  The
special cases are left ideals (nonempty, closed under adding any prefix),
suffix-closed languages, and suffix-free languages.  A language is proper
when it is suffix-convex and none of the three.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections import deque

from .automata import Dfa, Nfa, determinize, direct_product, equivalent, minimize

Word = tuple[str, ...]


@dataclass(frozen=True)
class Classification:
    suffix_convex: bool
    left_ideal: bool
    suffix_closed: bool
    suffix_free: bool
    proper: bool
    counterexample: tuple[Word, Word, Word] | None = None


def _reach_words(d):
    '''Shortest word to each reachable state, ties by alphabet order.'''
    word = {0: ()}
    order = [0]
    i = 0
    while i < len(order):
        q = order[i]
        i += 1
        for k, letter in enumerate(d.alphabet):
            t = d.delta[k][q]
            if t not in word:
                word[t] = word[q] + (letter,)
                order.append(t)
    return order, word


def is_suffix_convex(d: Dfa):
    """Decide suffix-convexity of L(d).

    Returns (True, None), or (False, (u, v, w)) with each word a tuple of
    letter names such that w and uvw are accepted but vw is not.

    The search runs on the minimal DFA.  Stage 1 collects every pair
    (0uv, 0v) by closing {(q, 0) | q reachable} under the letters; stage 2
    walks triples (0w', 0uvw', 0vw') from each (0, q, r) seed looking for
    an accepted pair whose third coordinate is rejected.
    """
    d = minimize(d)
    nletters = len(d.alphabet)

    order, uword = _reach_words(d)

    pair_parent = {}
    pair_order = []
    for q in order:
        seed = (q, 0)
        if seed not in pair_parent:
            pair_parent[seed] = None
            pair_order.append(seed)
    i = 0
    while i < len(pair_order):
        (x, y) = pair_order[i]
        i += 1
        for k in range(nletters):
            t = (d.delta[k][x], d.delta[k][y])
            if t not in pair_parent:
                pair_parent[t] = ((x, y), k)
                pair_order.append(t)

    triple_parent = {}
    frontier = deque()

    def check(t):
        (p, q, r) = t
        return p in d.finals and q in d.finals and r not in d.finals

    bad = None
    for (q, r) in pair_order:
        seed = (0, q, r)
        if seed not in triple_parent:
            triple_parent[seed] = None
            if check(seed):
                bad = seed
                break
            frontier.append(seed)
    while bad is None and frontier:
        tri = frontier.popleft()
        (x, y, z) = tri
        for k in range(nletters):
            t = (d.delta[k][x], d.delta[k][y], d.delta[k][z])
            if t not in triple_parent:
                triple_parent[t] = (tri, k)
                if check(t):
                    bad = t
                    break
                frontier.append(t)
        if bad is not None:
            break
    if bad is None:
        return True, None

    # walk stage-2 parents back to the seed triple, collecting w
    w = []
    node = bad
    while triple_parent[node] is not None:
        node, k = triple_parent[node]
        w.append(d.alphabet[k])
    w.reverse()
    # the seed (0, q, r) names a stage-1 pair; walk that back for v
    (_, q, r) = node
    v = []
    pair = (q, r)
    while pair_parent[pair] is not None:
        pair, k = pair_parent[pair]
        v.append(d.alphabet[k])
    v.reverse()
    # the stage-1 seed (q0, 0) names the state 0u reached by u
    u = uword[pair[0]]
    return False, (tuple(u), tuple(v), tuple(w))


def _nonempty(d):
    return any(q in d.finals for q in d.reachable())


def _prepend_sigma_star(d):
    '''NFA for sigma* L(d): a looping fresh initial state feeds state 0.'''
    s = d.n
    empty = frozenset()
    delta = [tuple(frozenset({d.delta[k][q]}) for k in range(len(d.alphabet)))
             for q in range(d.n)]
    delta.append(tuple(frozenset({s}) for _ in d.alphabet))
    eps = [empty] * d.n + [frozenset({0})]
    return Nfa(d.n + 1, d.alphabet, tuple(delta), tuple(eps),
               initials=frozenset({s}), finals=d.finals)


def _prepend_sigma_plus(d):
    '''NFA for sigma+ L(d): two fresh states force at least one letter first.'''
    s0, s1 = d.n, d.n + 1
    empty = frozenset()
    delta = [tuple(frozenset({d.delta[k][q]}) for k in range(len(d.alphabet)))
             for q in range(d.n)]
    delta.append(tuple(frozenset({s1}) for _ in d.alphabet))
    delta.append(tuple(frozenset({s1}) for _ in d.alphabet))
    eps = [empty] * d.n + [empty, frozenset({0})]
    return Nfa(d.n + 2, d.alphabet, tuple(delta), tuple(eps),
               initials=frozenset({s0}), finals=d.finals)


def _suffixes(d):
    '''NFA for the suffix language: every reachable state is initial.'''
    empty = frozenset()
    delta = [tuple(frozenset({d.delta[k][q]}) for k in range(len(d.alphabet)))
             for q in range(d.n)]
    return Nfa(d.n, d.alphabet, tuple(delta), tuple([empty] * d.n),
               initials=frozenset(d.reachable()), finals=d.finals)


def is_left_ideal(d: Dfa) -> bool:
    '''Whether L(d) is nonempty and equal to sigma* L(d).'''
    return _nonempty(d) and equivalent(d, determinize(_prepend_sigma_star(d)))


def is_suffix_closed(d: Dfa) -> bool:
    '''Whether every suffix of every accepted word is accepted.'''
    return equivalent(d, determinize(_suffixes(d)))


def is_suffix_free(d: Dfa) -> bool:
    '''Whether no accepted word is a proper suffix of another.'''
    product = direct_product(d, determinize(_prepend_sigma_plus(d)), "intersect")
    return not _nonempty(product)


def classify(d: Dfa) -> Classification:
    '''All four predicates plus the proper flag, in one record.'''
    convex, counterexample = is_suffix_convex(d)
    ideal = is_left_ideal(d)
    closed = is_suffix_closed(d)
    free = is_suffix_free(d)
    return Classification(
        suffix_convex=convex,
        left_ideal=ideal,
        suffix_closed=closed,
        suffix_free=free,
        proper=convex and not ideal and not closed and not free,
        counterexample=counterexample,
    )
