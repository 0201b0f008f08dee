"""Deterministic and nondeterministic automata, constructions, and complexity.

States are always the integers 0..n-1 and the initial state of a DFA is
always 0.  All values are immutable after construction, so they can be
shared freely across threads; every operation below is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from collections import deque

from .errors import AlphabetMismatch, FormatError, NotMinimal, ResourceCap

SUBSET_CAP = 1 << 22

# the number of states of a minimal complete DFA; plain int, named for clarity
ComplexityValue = int


def _check_alphabet(alphabet):
    if not alphabet:
        raise FormatError("alphabet must contain at least one letter")
    seen = set()
    for name in alphabet:
        if not name or any(ch.isspace() for ch in name) or "#" in name:
            raise FormatError(f"bad letter name {name!r}")
        if name in seen:
            raise FormatError(f"duplicate letter {name!r}")
        seen.add(name)


@dataclass(frozen=True)
class Dfa:
    """A complete DFA.

    Attributes:
        n: number of states; the states are 0..n-1.
        alphabet: ordered tuple of distinct letter names.
        delta: delta[k][q] is the target of state q under letter alphabet[k].
        finals: the accepting states.
        initial: always 0.
    """

    n: int
    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]
    finals: frozenset[int]
    initial: int = 0

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        object.__setattr__(self, "finals", frozenset(self.finals))
        if self.n < 1:
            raise FormatError("a DFA needs at least one state")
        if self.initial != 0:
            raise FormatError("the initial state is always 0")
        _check_alphabet(self.alphabet)
        if len(self.delta) != len(self.alphabet):
            raise FormatError("delta must have one row per letter")
        for row in self.delta:
            if len(row) != self.n:
                raise FormatError("each delta row must cover every state")
            for q in row:
                if not 0 <= q < self.n:
                    raise FormatError(f"transition target {q} out of range")
        for q in self.finals:
            if not 0 <= q < self.n:
                raise FormatError(f"final state {q} out of range")

    def letter_index(self, letter: str) -> int:
        try:
            return self.alphabet.index(letter)
        except ValueError:
            raise KeyError(f"no letter {letter!r}") from None

    def action(self, letter: str) -> tuple[int, ...]:
        '''The image vector of a letter.'''
        return self.delta[self.letter_index(letter)]

    def step(self, q: int, letter: str) -> int:
        return self.delta[self.letter_index(letter)][q]

    def run(self, word) -> int:
        '''The state reached from the initial state on a word (iterable of letters).'''
        q = 0
        for letter in word:
            q = self.delta[self.letter_index(letter)][q]
        return q

    def accepts(self, word) -> bool:
        return self.run(word) in self.finals

    def reachable(self) -> list[int]:
        '''Reachable states in breadth-first discovery order over the alphabet order.'''
        order = [0]
        seen = {0}
        i = 0
        while i < len(order):
            q = order[i]
            i += 1
            for row in self.delta:
                t = row[q]
                if t not in seen:
                    seen.add(t)
                    order.append(t)
        return order

    def to_text(self) -> str:
        lines = [f"states {self.n}",
                 "alphabet " + " ".join(self.alphabet),
                 "initial 0",
                 "final" + "".join(f" {q}" for q in sorted(self.finals))]
        for q in range(self.n):
            for k, letter in enumerate(self.alphabet):
                lines.append(f"{q} {letter} {self.delta[k][q]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Dfa":
        return _parse_dfa(text)

    def to_dot(self, name: str = "dfa") -> str:
        return _dfa_dot(self, name)


@dataclass(frozen=True)
class Nfa:
    """A nondeterministic automaton with optional epsilon edges.

    delta[q][k] is the set of targets of state q under letter alphabet[k];
    epsilon[q] is the set of epsilon-successors of q.
    """

    n: int
    alphabet: tuple[str, ...]
    delta: tuple[tuple[frozenset[int], ...], ...]
    epsilon: tuple[frozenset[int], ...]
    initials: frozenset[int]
    finals: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "delta",
                           tuple(tuple(frozenset(s) for s in row) for row in self.delta))
        object.__setattr__(self, "epsilon", tuple(frozenset(s) for s in self.epsilon))
        object.__setattr__(self, "initials", frozenset(self.initials))
        object.__setattr__(self, "finals", frozenset(self.finals))
        if self.n < 1:
            raise FormatError("an NFA needs at least one state")
        _check_alphabet(self.alphabet)
        if len(self.delta) != self.n or len(self.epsilon) != self.n:
            raise FormatError("delta and epsilon must cover every state")
        everything = [q for row in self.delta for s in row for q in s]
        everything += [q for s in self.epsilon for q in s]
        everything += list(self.initials) + list(self.finals)
        for q in everything:
            if not 0 <= q < self.n:
                raise FormatError(f"state {q} out of range")

    def closure(self, states) -> frozenset[int]:
        '''Epsilon closure of a state set.'''
        out = set(states)
        stack = list(out)
        while stack:
            q = stack.pop()
            for t in self.epsilon[q]:
                if t not in out:
                    out.add(t)
                    stack.append(t)
        return frozenset(out)

    def to_dot(self, name: str = "nfa") -> str:
        return _nfa_dot(self, name)


# ---------------------------------------------------------------------------
# text format

def _strip_comment(line):
    pos = line.find("#")
    if pos >= 0:
        line = line[:pos]
    return line.strip()


def _parse_dfa(text):
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if line:
            rows.append((lineno, line.split()))
    if len(rows) < 4:
        raise FormatError("file too short: need states, alphabet, initial, final")

    (ln, head) = rows[0]
    if head[0] != "states" or len(head) != 2:
        raise FormatError(f"line {ln}: expected 'states <n>'")
    try:
        n = int(head[1])
    except ValueError:
        raise FormatError(f"line {ln}: state count must be an integer") from None
    if n < 1:
        raise FormatError(f"line {ln}: state count must be positive")

    (ln, head) = rows[1]
    if head[0] != "alphabet" or len(head) < 2:
        raise FormatError(f"line {ln}: expected 'alphabet <l1> <l2> ...'")
    alphabet = tuple(head[1:])
    _check_alphabet(alphabet)

    (ln, head) = rows[2]
    if head != ["initial", "0"]:
        raise FormatError(f"line {ln}: expected 'initial 0'")

    (ln, head) = rows[3]
    if head[0] != "final":
        raise FormatError(f"line {ln}: expected 'final ...'")
    try:
        finals = frozenset(int(tok) for tok in head[1:])
    except ValueError:
        raise FormatError(f"line {ln}: final states must be integers") from None
    for q in finals:
        if not 0 <= q < n:
            raise FormatError(f"line {ln}: final state {q} out of range")

    index = {letter: k for k, letter in enumerate(alphabet)}
    table = [[None] * n for _ in alphabet]
    count = 0
    for (ln, toks) in rows[4:]:
        if len(toks) != 3:
            raise FormatError(f"line {ln}: expected '<state> <letter> <state>'")
        src_s, letter, dst_s = toks
        try:
            src, dst = int(src_s), int(dst_s)
        except ValueError:
            raise FormatError(f"line {ln}: states must be integers") from None
        if letter not in index:
            raise FormatError(f"line {ln}: unknown letter {letter!r}")
        if not 0 <= src < n or not 0 <= dst < n:
            raise FormatError(f"line {ln}: state out of range")
        if table[index[letter]][src] is not None:
            raise FormatError(f"line {ln}: duplicate transition for ({src}, {letter})")
        table[index[letter]][src] = dst
        count += 1
    if count != n * len(alphabet):
        missing = [(q, letter) for k, letter in enumerate(alphabet)
                   for q in range(n) if table[k][q] is None]
        raise FormatError(f"incomplete transition table, missing {missing[:5]}"
                          + ("..." if len(missing) > 5 else ""))
    return Dfa(n, alphabet, tuple(tuple(row) for row in table), finals)


# ---------------------------------------------------------------------------
# DOT export

def _quote(s):
    return '"' + str(s).replace('"', '\\"') + '"'


def _dot_edges(n, labels_for):
    '''Deterministic edge emission, letters with equal endpoints merged.'''
    lines = []
    for q in range(n):
        grouped = {}
        for label, dst in labels_for(q):
            grouped.setdefault(dst, []).append(label)
        for dst in sorted(grouped):
            lines.append(f"  {q} -> {dst} [label={_quote(','.join(grouped[dst]))}];")
    return lines


def _dfa_dot(d, name):
    lines = [f"digraph {name} {{", "  rankdir=LR;",
             '  __start [shape=point, label=""];']
    for q in range(d.n):
        shape = "doublecircle" if q in d.finals else "circle"
        lines.append(f"  {q} [shape={shape}];")
    lines.append("  __start -> 0;")

    def labels_for(q):
        return [(letter, d.delta[k][q]) for k, letter in enumerate(d.alphabet)]

    lines.extend(_dot_edges(d.n, labels_for))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _nfa_dot(m, name):
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for i, q in enumerate(sorted(m.initials)):
        lines.append(f'  __start{i} [shape=point, label=""];')
    for q in range(m.n):
        shape = "doublecircle" if q in m.finals else "circle"
        lines.append(f"  {q} [shape={shape}];")
    for i, q in enumerate(sorted(m.initials)):
        lines.append(f"  __start{i} -> {q};")

    def labels_for(q):
        out = [(letter, dst) for k, letter in enumerate(m.alphabet)
               for dst in sorted(m.delta[q][k])]
        out.extend(("eps", dst) for dst in sorted(m.epsilon[q]))
        return out

    lines.extend(_dot_edges(m.n, labels_for))
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# core constructions

def minimize(d: Dfa) -> Dfa:
    """The canonical minimal complete DFA of L(d).

    States of the result are numbered by breadth-first discovery order over
    the alphabet order, so equal languages give byte-identical automata.
    """
    reach = d.reachable()
    # Moore partition refinement on the reachable part
    block = {q: int(q in d.finals) for q in reach}
    nblocks = len(set(block.values()))
    while True:
        sigs = {}
        newblock = {}
        for q in reach:
            sig = (block[q],) + tuple(block[row[q]] for row in d.delta)
            newblock[q] = sigs.setdefault(sig, len(sigs))
        block = newblock
        if len(sigs) == nblocks:
            break
        nblocks = len(sigs)
    # renumber blocks by BFS from the initial block
    rep = {}
    for q in reach:
        rep.setdefault(block[q], q)
    order = [block[0]]
    number = {block[0]: 0}
    i = 0
    while i < len(order):
        b = order[i]
        i += 1
        q = rep[b]
        for row in d.delta:
            t = block[row[q]]
            if t not in number:
                number[t] = len(order)
                order.append(t)
    m = len(order)
    delta = tuple(tuple(number[block[row[rep[b]]]] for b in order) for row in d.delta)
    finals = frozenset(number[b] for b in order if rep[b] in d.finals)
    return Dfa(m, d.alphabet, delta, finals)


def complexity(d: Dfa) -> int:
    '''Number of states of the minimal complete DFA of L(d).'''
    return minimize(d).n


def determinize(m: Nfa, cap: int = SUBSET_CAP) -> Dfa:
    """Accessible subset construction with epsilon closure.

    Subsets are numbered by breadth-first discovery with the alphabet order;
    the empty subset appears only when it is reachable.  Raises ResourceCap
    when more than `cap` subsets are discovered.
    """
    start = m.closure(m.initials)
    order = [start]
    index = {start: 0}
    rows = [[] for _ in m.alphabet]
    i = 0
    while i < len(order):
        S = order[i]
        i += 1
        for k in range(len(m.alphabet)):
            targets = set()
            for q in S:
                targets.update(m.delta[q][k])
            T = m.closure(targets)
            if T not in index:
                if len(order) >= cap:
                    raise ResourceCap(f"subset construction exceeded {cap} subsets")
                index[T] = len(order)
                order.append(T)
            rows[k].append(index[T])
    finals = frozenset(i for i, S in enumerate(order) if S & m.finals)
    return Dfa(len(order), m.alphabet, tuple(tuple(r) for r in rows), finals)


def reverse_nfa(d: Dfa) -> Nfa:
    '''The reversal NFA: every transition flipped, finals become initials.'''
    delta = [[set() for _ in d.alphabet] for _ in range(d.n)]
    for k in range(len(d.alphabet)):
        for p in range(d.n):
            delta[d.delta[k][p]][k].add(p)
    empty = frozenset()
    return Nfa(d.n, d.alphabet,
               tuple(tuple(frozenset(s) for s in row) for row in delta),
               tuple(empty for _ in range(d.n)),
               initials=d.finals, finals=frozenset({0}))


def star_nfa(d: Dfa) -> Nfa:
    """The epsilon-NFA for L(d)*.

    Adds a new state n that is both initial and final and copies state 0's
    outgoing transitions, plus an epsilon edge from every final state of d
    back to state 0.  When L(d) is empty the result accepts exactly the
    empty word.
    """
    n = d.n + 1
    delta = []
    for q in range(d.n):
        delta.append(tuple(frozenset({d.delta[k][q]}) for k in range(len(d.alphabet))))
    delta.append(tuple(frozenset({d.delta[k][0]}) for k in range(len(d.alphabet))))
    eps = [frozenset({0}) if q in d.finals else frozenset() for q in range(d.n)]
    eps.append(frozenset())
    return Nfa(n, d.alphabet, tuple(delta), tuple(eps),
               initials=frozenset({d.n}), finals=d.finals | {d.n})


def complete_to(d: Dfa, alphabet) -> Dfa:
    '''Extend d to a larger alphabet; absent letters act as self-loops.'''
    alphabet = tuple(alphabet)
    if not set(d.alphabet) <= set(alphabet):
        raise AlphabetMismatch("target alphabet must contain every existing letter")
    ident = tuple(range(d.n))
    have = {letter: d.delta[k] for k, letter in enumerate(d.alphabet)}
    delta = tuple(have.get(letter, ident) for letter in alphabet)
    return Dfa(d.n, alphabet, delta, d.finals)


def union_alphabet(d1: Dfa, d2: Dfa) -> tuple[str, ...]:
    return d1.alphabet + tuple(a for a in d2.alphabet if a not in set(d1.alphabet))


def product_nfa(d1: Dfa, d2: Dfa, complete_missing: bool = False) -> Nfa:
    """The epsilon-NFA for the concatenation L(d1) L(d2).

    With complete_missing, both automata are first extended to the union
    alphabet with missing letters acting as self-loops; otherwise the
    alphabets must be equal as sets.
    """
    if complete_missing:
        sigma = union_alphabet(d1, d2)
        d1 = complete_to(d1, sigma)
        d2 = complete_to(d2, sigma)
    elif set(d1.alphabet) != set(d2.alphabet):
        raise AlphabetMismatch("concatenation needs equal alphabets "
                               "(pass complete_missing=True for the self-loop convention)")
    sigma = d1.alphabet
    k2 = [d2.letter_index(letter) for letter in sigma]
    m = d1.n
    n = m + d2.n
    delta = []
    for q in range(m):
        delta.append(tuple(frozenset({d1.delta[k][q]}) for k in range(len(sigma))))
    for q in range(d2.n):
        delta.append(tuple(frozenset({m + d2.delta[k2[k]][q]}) for k in range(len(sigma))))
    eps = [frozenset({m}) if q in d1.finals else frozenset() for q in range(m)]
    eps.extend(frozenset() for _ in range(d2.n))
    return Nfa(n, sigma, tuple(delta), tuple(eps),
               initials=frozenset({0}), finals=frozenset(m + q for q in d2.finals))


_BOOLEAN_OPS = {
    "union": lambda a, b: a or b,
    "xor": lambda a, b: a != b,
    "diff": lambda a, b: a and not b,
    "intersect": lambda a, b: a and b,
}


def direct_product(d1: Dfa, d2: Dfa, op: str) -> Dfa:
    """The accessible product DFA for a boolean operation on L(d1), L(d2).

    op is one of 'union', 'xor', 'diff', 'intersect'.  Alphabets must be
    equal as sets; letters are matched by name and the result uses d1's
    letter order.
    """
    try:
        combine = _BOOLEAN_OPS[op]
    except KeyError:
        raise ValueError(f"unknown boolean operation {op!r}") from None
    if set(d1.alphabet) != set(d2.alphabet):
        raise AlphabetMismatch("boolean operations need equal alphabets")
    sigma = d1.alphabet
    k2 = [d2.letter_index(letter) for letter in sigma]
    order = [(0, 0)]
    index = {(0, 0): 0}
    rows = [[] for _ in sigma]
    i = 0
    while i < len(order):
        (p, q) = order[i]
        i += 1
        for k in range(len(sigma)):
            t = (d1.delta[k][p], d2.delta[k2[k]][q])
            if t not in index:
                index[t] = len(order)
                order.append(t)
            rows[k].append(index[t])
    finals = frozenset(i for i, (p, q) in enumerate(order)
                       if combine(p in d1.finals, q in d2.finals))
    return Dfa(len(order), sigma, tuple(tuple(r) for r in rows), finals)


def quotient_contains(d: Dfa, p: int, q: int) -> bool:
    """Whether the left quotient at state p is contained in the one at q.

    Decided by reachability in the pair automaton: containment fails exactly
    when some reachable pair is (final, non-final).
    """
    if not (0 <= p < d.n and 0 <= q < d.n):
        raise ValueError("states out of range")
    seen = {(p, q)}
    frontier = deque([(p, q)])
    while frontier:
        (x, y) = frontier.popleft()
        if x in d.finals and y not in d.finals:
            return False
        for row in d.delta:
            t = (row[x], row[y])
            if t not in seen:
                seen.add(t)
                frontier.append(t)
    return True


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    '''Whether L(d1) = L(d2), by pairwise reachability.  Alphabets must match.'''
    if set(d1.alphabet) != set(d2.alphabet):
        raise AlphabetMismatch("cannot compare languages over different alphabets")
    k2 = [d2.letter_index(letter) for letter in d1.alphabet]
    seen = {(0, 0)}
    frontier = deque([(0, 0)])
    while frontier:
        (x, y) = frontier.popleft()
        if (x in d1.finals) != (y in d2.finals):
            return False
        for k in range(len(d1.alphabet)):
            t = (d1.delta[k][x], d2.delta[k2[k]][y])
            if t not in seen:
                seen.add(t)
                frontier.append(t)
    return True


def is_minimal(d: Dfa) -> bool:
    return minimize(d).n == d.n


def atom_count(d: Dfa) -> int:
    """The number of atoms of L(d), which equals the complexity of L(d)^R.

    Requires a minimal DFA, since atoms are defined over distinct quotients.
    """
    if not is_minimal(d):
        raise NotMinimal("atom_count needs a minimal DFA")
    return complexity(determinize(reverse_nfa(d)))
