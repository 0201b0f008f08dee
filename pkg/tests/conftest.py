from __future__ import annotations

import random

from sconvex import Dfa


def random_dfa(rng: random.Random, n: int, letters: int) -> Dfa:
    """Uniform transition table, each state final with probability 0.4."""
    names = tuple("abcdefgh"[:letters])
    delta = tuple(tuple(rng.randrange(n) for _ in range(n)) for _ in names)
    finals = frozenset(q for q in range(n) if rng.random() < 0.4)
    return Dfa(n, names, delta, finals)
