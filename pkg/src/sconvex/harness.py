"""Verification suites, random suffix-convex generation, and the probe.

Every suite reproduces one tight bound by exact computation and emits one
report per parameter point.  A report passes exactly when the computed
value equals the expected one; inequality checks are encoded as 0/1
predicates so the same rule applies.
"""

from __future__ import annotations

import json
import math
import random
import time
from dataclasses import dataclass
from itertools import permutations

from .automata import (Dfa, atom_count, complexity, determinize, minimize,
                       product_nfa, direct_product, quotient_contains,
                       reverse_nfa, star_nfa)
from .classify import classify
from .errors import BadSize, ResourceCap
from .transformations import CLOSURE_CAP, syntactic_complexity
from .triples import (Preorder, canonical_system, letter_names,
                      monotone_dfa, monotone_transformations, order_properties,
                      preorder_of, total_order)
from .witnesses import (LetterMap, dialect, reversal_order, reversal_witness,
                        star_witness, syntactic_witness)

STAR_RANGE = range(3, 11)
PRODUCT_RANGE = range(3, 9)
BOOLEAN_RANGE = range(3, 9)
REVERSAL_RANGE = range(4, 11)
SYNTACTIC_RANGE = range(3, 8)
MONOTONE_RANGE = range(3, 8)
EXCLUSION_RANGE = range(4, 9)

DEFAULT_SEED = 987123


@dataclass(frozen=True)
class Report:
    suite: str
    params: tuple[tuple[str, int], ...]
    expected: int
    actual: int
    ms: float

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def line(self) -> str:
        middle = "".join(f" {k}={v}" for k, v in self.params)
        result = "PASS" if self.passed else "FAIL"
        return (f"suite={self.suite}{middle} "
                f"expected={self.expected} actual={self.actual} result={result}")

    def to_json(self) -> dict:
        return {"suite": self.suite, "params": dict(self.params),
                "expected": self.expected, "actual": self.actual,
                "pass": self.passed, "ms": self.ms}


def _report(suite, params, expected, actual, t0):
    ms = round((time.perf_counter() - t0) * 1000, 2)
    return Report(suite, tuple(params), expected, actual, ms)


def reports_to_json(reports) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2) + "\n"


# ---------------------------------------------------------------------------
# bound formulas

def star_bound(n: int) -> int:
    return 2 ** (n - 1) + 2 ** (n - 2)


def product_bound(m: int, n: int) -> int:
    return (m - 1) * 2 ** n + 2 ** (n - 1)


def reversal_bound(n: int) -> int:
    return 2 ** n - 2 ** (n - 3)


def syntactic_bound(n: int) -> int:
    return n * (n - 1) ** (n - 2) + (n - 1) ** 2


def monotone_total_count(n: int) -> int:
    return math.comb(2 * n - 1, n)


def monotone_reversal_count(n: int) -> int:
    return 2 * n ** (n - 2) + 3 * 2 ** (n - 3) + n - 2


# ---------------------------------------------------------------------------
# verification suites

def verify_star(ns=None):
    '''Star of the a,b,c,d dialect of the star witness hits its bound.'''
    reports = []
    for n in STAR_RANGE if ns is None else ns:
        t0 = time.perf_counter()
        w = star_witness(n)
        four = dialect(w, LetterMap.keep(w.alphabet, ("a", "b", "c", "d", None, None)))
        actual = complexity(determinize(star_nfa(four)))
        reports.append(_report("star", [("n", n)], star_bound(n), actual, t0))
    return reports


def verify_product(ms=None, ns=None):
    '''Concatenating the two star-witness dialects hits the product bound.'''
    reports = []
    for m in PRODUCT_RANGE if ms is None else ms:
        left = dialect(star_witness(m),
                       LetterMap.keep("abcdef", ("a", "b", "c", None, "e", "f")))
        for n in PRODUCT_RANGE if ns is None else ns:
            t0 = time.perf_counter()
            right = dialect(star_witness(n),
                            LetterMap.keep("abcdef", ("e", "f", None, None, "a", "b")))
            cat = product_nfa(left, right, complete_missing=True)
            actual = complexity(determinize(cat))
            reports.append(_report("product", [("n", n), ("m", m)],
                                   product_bound(m, n), actual, t0))
    return reports


BOOLEAN_OPS = ("union", "xor", "diff", "intersect")


def verify_boolean(ms=None, ns=None):
    '''All four boolean operations on the dialect pair hit m times n.'''
    reports = []
    for m in BOOLEAN_RANGE if ms is None else ms:
        left = dialect(star_witness(m),
                       LetterMap.keep("abcdef", ("a", "b", None, None, "e", "f")))
        for n in BOOLEAN_RANGE if ns is None else ns:
            right = dialect(star_witness(n),
                            LetterMap.keep("abcdef", ("e", "f", None, None, "a", "b")))
            for op in BOOLEAN_OPS:
                t0 = time.perf_counter()
                actual = complexity(direct_product(left, right, op))
                reports.append(_report(f"boolean-{op}", [("n", n), ("m", m)],
                                       m * n, actual, t0))
    return reports


def verify_reversal(ns=None, samples=500, max_n=8, max_letters=6,
                    seed=DEFAULT_SEED):
    """Reversal witness values, plus the upper bound on random samples.

    The final report counts bound violations over `samples` seeded random
    suffix-convex DFAs: after minimizing to complexity n', the atom count
    may not exceed 2^n' - 2^(n'-3), checked as 8*atoms <= 7*2^n' to stay
    in integers.
    """
    reports = []
    for n in REVERSAL_RANGE if ns is None else ns:
        t0 = time.perf_counter()
        actual = atom_count(minimize(reversal_witness(n)))
        reports.append(_report("reversal", [("n", n)], reversal_bound(n), actual, t0))
    t0 = time.perf_counter()
    rng = random.Random(seed)
    violations = 0
    for _ in range(samples):
        n = rng.randint(3, max_n)
        k = rng.randint(1, max_letters)
        d = minimize(random_suffix_convex(n, k, rng.randrange(2 ** 32)))
        if 8 * atom_count(d) > 7 * 2 ** d.n:
            violations += 1
    reports.append(_report("reversal-bound",
                           [("n", max_n), ("samples", samples), ("seed", seed)],
                           0, violations, t0))
    return reports


def verify_syntactic(ns=None, cap=CLOSURE_CAP):
    '''Transition semigroup of the syntactic witness hits the size bound.'''
    reports = []
    for n in SYNTACTIC_RANGE if ns is None else ns:
        t0 = time.perf_counter()
        actual = syntactic_complexity(syntactic_witness(n), cap)
        reports.append(_report("syntactic", [("n", n)], syntactic_bound(n), actual, t0))
    return reports


def verify_monotone_counts(ns=None, cap=CLOSURE_CAP):
    '''Exhaustive monotone-map counts match the closed formulas.'''
    reports = []
    for n in MONOTONE_RANGE if ns is None else ns:
        t0 = time.perf_counter()
        actual = len(monotone_transformations(total_order(n), cap))
        reports.append(_report("monotone-total", [("n", n)],
                               monotone_total_count(n), actual, t0))
        t0 = time.perf_counter()
        actual = len(monotone_transformations(reversal_order(n), cap))
        reports.append(_report("monotone-reversal", [("n", n)],
                               monotone_reversal_count(n), actual, t0))
    return reports


def _containment_breaches(d: Dfa) -> int:
    '''Distinct-state quotient containments, beyond initial-into-final ones.'''
    count = 0
    for p in range(d.n):
        for q in range(d.n):
            if p == q or (p == 0 and q in d.finals):
                continue
            if quotient_contains(d, p, q):
                count += 1
    return count


def verify_exclusions(ns=None):
    """Each witness strictly misses the other bounds, with the structure
    of the canonical systems pinned down.

    Per n: the star witness misses the reversal bound and the reversal
    witness misses the star bound (both strictly), both witnesses sit
    strictly under the syntactic bound, the canonical order of the star
    witness is totally comparable, the canonical order of the reversal
    witness is a partial order whose only comparable distinct non-zero
    pair is (2, 1), and neither witness has a quotient containment between
    distinct states other than possibly initial-into-final.
    """
    reports = []
    for n in EXCLUSION_RANGE if ns is None else ns:
        # the witnesses are minimal as built; keep their own state numbering,
        # since the structural predicates below name specific states
        star = star_witness(n)
        rev = reversal_witness(n)

        t0 = time.perf_counter()
        ok = atom_count(star) < reversal_bound(n)
        reports.append(_report("exclusions-star-reversal-bound", [("n", n)],
                               1, int(ok), t0))

        t0 = time.perf_counter()
        ok = complexity(determinize(star_nfa(rev))) < star_bound(n)
        reports.append(_report("exclusions-reversal-star-bound", [("n", n)],
                               1, int(ok), t0))

        t0 = time.perf_counter()
        ok = syntactic_complexity(star) < syntactic_bound(n)
        reports.append(_report("exclusions-star-syntactic", [("n", n)],
                               1, int(ok), t0))

        t0 = time.perf_counter()
        ok = syntactic_complexity(rev) < syntactic_bound(n)
        reports.append(_report("exclusions-reversal-syntactic", [("n", n)],
                               1, int(ok), t0))

        t0 = time.perf_counter()
        props = order_properties(preorder_of(canonical_system(star)))
        reports.append(_report("exclusions-star-order-total", [("n", n)],
                               1, int(props.is_total_comparability), t0))

        t0 = time.perf_counter()
        props = order_properties(preorder_of(canonical_system(rev)))
        ok = props.is_partial_order and props.comparable_nonzero_pairs == {(2, 1)}
        reports.append(_report("exclusions-reversal-order-pair", [("n", n)],
                               1, int(ok), t0))

        t0 = time.perf_counter()
        reports.append(_report("exclusions-star-containments", [("n", n)],
                               0, _containment_breaches(star), t0))

        t0 = time.perf_counter()
        reports.append(_report("exclusions-reversal-containments", [("n", n)],
                               0, _containment_breaches(rev), t0))
    return reports


SUITES = {
    "star": verify_star,
    "product": verify_product,
    "boolean": verify_boolean,
    "reversal": verify_reversal,
    "syntactic": verify_syntactic,
    "monotone": verify_monotone_counts,
    "exclusions": verify_exclusions,
}


# ---------------------------------------------------------------------------
# random generation

def _random_order(rng, n):
    leq = [[p == q or q == 0 for q in range(n)] for p in range(n)]
    if n >= 3:
        for _ in range(rng.randint(0, n * n)):
            p, q = rng.sample(range(1, n), 2)
            if leq[q][p] or leq[p][q]:
                continue
            # closing over one new edge: everything below p goes below
            # everything above q; antisymmetry is safe because q <= p
            # would already have been present
            below = [x for x in range(n) if leq[x][p]]
            above = [y for y in range(n) if leq[q][y]]
            for x in below:
                for y in above:
                    leq[x][y] = True
    return Preorder(n, tuple(tuple(row) for row in leq))


def _is_convex(leq, finals, n):
    for f in finals:
        for h in finals:
            for g in range(n):
                if g not in finals and leq[f][g] and leq[g][h]:
                    return False
    return True


def _random_convex_finals(rng, po):
    n = po.n
    for _ in range(64):
        finals = frozenset(q for q in range(n) if rng.random() < 0.5)
        if finals and len(finals) < n and _is_convex(po.leq, finals, n):
            return finals
    return frozenset({rng.randrange(n)})


def _random_monotone(rng, po):
    n = po.n
    leq = po.leq
    image = [None] * n

    def fits(q, v):
        for p in range(n):
            w = image[p]
            if w is None or p == q:
                continue
            if leq[p][q] and not leq[w][v]:
                return False
            if leq[q][p] and not leq[v][w]:
                return False
        return True

    def assign(q):
        if q == n:
            return True
        choices = list(range(n))
        rng.shuffle(choices)
        for v in choices:
            if fits(q, v):
                image[q] = v
                if assign(q + 1):
                    return True
                image[q] = None
        return False

    assign(0)
    return tuple(image)


def random_suffix_convex(n: int, letters: int, seed: int) -> Dfa:
    """A random DFA that is suffix-convex by construction.

    Samples a partial order with maximum 0 (random edge insertion with
    on-line transitive closure), a convex proper final set, and `letters`
    random order-monotone transformations.  Monotone letters plus a convex
    final set keep the language suffix-convex.  Fully determined by seed.
    The letters are drawn by randomized backtracking, which reaches every
    monotone map but not with perfectly uniform weight.
    """
    if n < 2:
        raise BadSize(f"need n >= 2 for a proper final set, got {n}")
    if letters < 1:
        raise BadSize("need at least one letter")
    rng = random.Random(seed)
    po = _random_order(rng, n)
    finals = _random_convex_finals(rng, po)
    delta = tuple(_random_monotone(rng, po) for _ in range(letters))
    return Dfa(n, letter_names(letters), delta, finals)


# ---------------------------------------------------------------------------
# the probe

@dataclass(frozen=True)
class ProbeResult:
    n: int
    orders: int
    configurations: int
    proper_count: int
    max_syntactic: int
    formula: int
    best_order: Preorder
    best_finals: frozenset[int]

    @property
    def achieves_formula(self) -> bool:
        return self.max_syntactic == self.formula

    def lines(self):
        yield (f"probe n={self.n} orders={self.orders} "
               f"configurations={self.configurations} proper={self.proper_count} "
               f"max={self.max_syntactic} formula={self.formula} "
               f"achieves={'true' if self.achieves_formula else 'false'}")
        yield "best-order"
        for row in self.best_order.dump().splitlines():
            yield "  " + row
        yield "best-final " + " ".join(str(q) for q in sorted(self.best_finals))


def _nonzero_posets(n):
    '''Partial orders on the non-zero states, one per isomorphism class.'''
    m = n - 1
    pairs = [(p, q) for p in range(m) for q in range(m) if p != q]
    perms = list(permutations(range(m)))
    seen = set()
    out = []
    for bits in range(1 << len(pairs)):
        rel = [[p == q for q in range(m)] for p in range(m)]
        for i, (p, q) in enumerate(pairs):
            if bits >> i & 1:
                rel[p][q] = True
        ok = True
        for p in range(m):
            for q in range(m):
                if p == q or not rel[p][q]:
                    continue
                if rel[q][p]:
                    ok = False
                    break
                for r in range(m):
                    if rel[q][r] and not rel[p][r]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            continue
        canon = min(tuple(tuple(rel[pi[p]][pi[q]] for q in range(m))
                          for p in range(m)) for pi in perms)
        if canon not in seen:
            seen.add(canon)
            out.append(canon)
    return out


def _convex_subsets(po):
    n = po.n
    for bits in range(1, (1 << n) - 1):
        finals = frozenset(q for q in range(n) if bits >> q & 1)
        if _is_convex(po.leq, finals, n):
            yield finals


def probe_conjecture(n: int, cap: int = CLOSURE_CAP) -> ProbeResult:
    """Exhaustive search for the largest syntactic complexity reachable
    from order-generated systems.

    Enumerates every partial order on Q_n with maximum 0 (up to relabeling
    of the non-zero states) and every convex proper final set, builds the
    DFA with all monotone transformations as letters, keeps the ones that
    classify as proper, and records the maximum syntactic complexity seen.
    The search space covers only order-generated systems, so the result is
    an exploratory lower bound, not a refutation procedure.
    """
    if not 2 <= n <= 5:
        raise ResourceCap(f"the probe enumerates orders only for 2 <= n <= 5, got {n}")
    best = None
    orders = 0
    configurations = 0
    proper_count = 0
    for rel in _nonzero_posets(n):
        orders += 1
        leq = tuple(tuple(q == 0 or (p == q) or
                          (p >= 1 and q >= 1 and rel[p - 1][q - 1])
                          for q in range(n)) for p in range(n))
        po = Preorder(n, leq)
        for finals in _convex_subsets(po):
            configurations += 1
            d = monotone_dfa(po, finals, cap)
            if not classify(d).proper:
                continue
            proper_count += 1
            syn = syntactic_complexity(d, cap)
            if best is None or syn > best[0]:
                best = (syn, po, finals)
    if best is None:
        best = (0, Preorder(n, tuple(tuple(q == 0 or p == q for q in range(n))
                                     for p in range(n))), frozenset())
    return ProbeResult(n, orders, configurations, proper_count,
                       best[0], syntactic_bound(n), best[1], best[2])
