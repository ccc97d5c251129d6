"""Quadratic rewriting: presentations, Groebner certification, normal forms.

A Presentation carries an ordering of the generators (rank 0 is smallest)
and a set of two-letter rules LHS -> coeff * RHS, every rule strictly
decreasing in degree-lexicographic order.  Rules come from the relation
orbits {u, r(u)} of an involutive map, oriented with the lex-larger word on
the left.  The presentation is of skew-polynomial type when there are
exactly n(n-1)/2 rules x_j x_i -> x_i' x_j' with j > i, i' < j', j > i' and
i < j'; in that case the irreducible words are precisely the non-decreasing
ones.

Certification runs the Diamond Lemma check on overlap ambiguities: every
three-letter word whose two halves are both rule left-hand sides must
reduce to the same scalar multiple of the same word along both routes.
Normal forms refuse to run on uncertified presentations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations as all_permutations
from math import comb

from .actions import left_orbits
from .errors import BoundExceededError, NotCertifiedError, YbeError
from .solutions import SolutionMap, default_names
from .perms import inverse as perm_inverse

__all__ = [
    "Presentation",
    "relations_of",
    "solution_from_presentation",
    "restrict_solution",
    "check_groebner",
    "GroebnerReport",
    "normal_form",
    "nf_elements",
    "reduce_word",
    "count_normal_monomials",
    "count_normal_monomials_exhaustive",
    "expected_monomial_count",
    "check_centrality",
    "CentralityReport",
    "find_skew_ordering",
    "OrderingSearch",
]

ONE = Fraction(1)


class Presentation:
    """Rules over ranked generators plus the ordering that produced them.

    order[k] is the source element at rank k; rank_of inverts it.  Rules map
    a two-letter rank word (a, b) to ((c, d), coeff).  certified is None
    until check_groebner has run, then True or False.
    """

    __slots__ = ("n", "order", "rank_of", "names", "rules", "skew", "skew_defect", "certified")

    def __init__(self, n, rules, order=None, names=None):
        self.n = n
        self.order = tuple(order) if order is not None else tuple(range(n))
        if sorted(self.order) != list(range(n)):
            raise ValueError("ordering must be a permutation of the generators")
        self.rank_of = perm_inverse(self.order)
        if names is None:
            names = default_names(n)
        self.names = tuple(names[e] for e in self.order)
        self.rules = {}
        sides_seen = set()
        for lhs, rhs in rules.items():
            if isinstance(rhs, tuple) and len(rhs) == 2 and isinstance(rhs[0], tuple):
                target, coeff = rhs
            else:
                target, coeff = rhs, ONE
            coeff = Fraction(coeff)
            if coeff == 0:
                raise ValueError(f"rule {lhs} -> {target} has zero coefficient")
            if len(lhs) != 2 or len(target) != 2:
                raise ValueError("rules must relate two-letter words")
            if not lhs > target:
                raise ValueError(
                    f"rule {lhs} -> {target} does not decrease the "
                    "degree-lexicographic order"
                )
            for w in (lhs, target):
                if w in sides_seen:
                    raise ValueError(f"word {w} occurs in more than one rule side")
                sides_seen.add(w)
            self.rules[lhs] = (target, coeff)
        self.skew, self.skew_defect = self._skew_shape()
        self.certified = None

    def _skew_shape(self):
        if len(self.rules) != self.n * (self.n - 1) // 2:
            return False, f"{len(self.rules)} rules, expected {self.n * (self.n - 1) // 2}"
        for (j, i), ((ip, jp), _) in self.rules.items():
            if not (j > i and ip < jp and j > ip and i < jp):
                return False, (
                    f"rule {self.names[j]} {self.names[i]} -> "
                    f"{self.names[ip]} {self.names[jp]} breaks the index pattern"
                )
        return True, None

    def rule_list(self) -> list[str]:
        out = []
        for lhs in sorted(self.rules):
            (c, d), coeff = self.rules[lhs]
            a, b = lhs
            pre = "" if coeff == 1 else f"{coeff} * "
            out.append(f"{self.names[a]} {self.names[b]} -> {pre}{self.names[c]} {self.names[d]}")
        return out

    def to_ranks(self, elem_word) -> tuple[int, ...]:
        return tuple(self.rank_of[e] for e in elem_word)

    def to_elements(self, rank_word) -> tuple[int, ...]:
        return tuple(self.order[a] for a in rank_word)

    def __repr__(self):
        return (
            f"Presentation(n={self.n}, rules={len(self.rules)}, skew={self.skew}, "
            f"certified={self.certified})"
        )


def relations_of(s: SolutionMap, ordering=None) -> Presentation:
    """Orient the relation orbits of an involutive map along an ordering.

    ordering lists source elements from smallest to largest rank (defaults
    to the natural order).  Each orbit {u, r(u)} with r(u) != u becomes one
    rule; reconstruction via solution_from_presentation is exact.
    """
    order = tuple(ordering) if ordering is not None else tuple(range(s.n))
    rank_of = perm_inverse(order)
    rules = {}
    done = set()
    for (i, j), (k, l) in s.pairs():
        if (i, j) in done or (i, j) == (k, l):
            continue
        if s.r(k, l) != (i, j):
            raise YbeError(
                "relations_of needs an involutive map; orbit of "
                f"({s.names[i]}, {s.names[j]}) does not close"
            )
        done.add((i, j))
        done.add((k, l))
        u = (rank_of[i], rank_of[j])
        w = (rank_of[k], rank_of[l])
        if u > w:
            rules[u] = (w, ONE)
        else:
            rules[w] = (u, ONE)
    return Presentation(s.n, rules, order=order, names=s.names)


def solution_from_presentation(p: Presentation) -> SolutionMap:
    """The involutive map in rank space whose relation orbits are p's rules."""
    moves = {}
    for lhs, (rhs, _) in p.rules.items():
        moves[lhs] = rhs
        moves[rhs] = lhs
    return SolutionMap.from_pairs(p.n, moves, p.names)


def restrict_solution(s: SolutionMap, subset):
    """Restrict to an r-invariant subset; returns (restriction, back) where
    back[k] is the source element at the new index k."""
    back = tuple(sorted(subset))
    pos = {e: k for k, e in enumerate(back)}
    moves = {}
    for a in back:
        for b in back:
            k, l = s.r(a, b)
            if k not in pos or l not in pos:
                raise YbeError(
                    f"subset is not r-invariant: r({s.names[a]}, {s.names[b]}) "
                    f"leaves it"
                )
            moves[(pos[a], pos[b])] = (pos[k], pos[l])
    names = tuple(s.names[e] for e in back)
    return SolutionMap.from_pairs(len(back), moves, names), back


# ---------------------------------------------------------------------------
# reduction

def _reduce(p: Presentation, word, cap: int | None = None):
    """Rewrite to an irreducible word, leftmost redex first.

    Every rule strictly decreases deglex order so this terminates; the cap
    is a safety net, not part of the contract.
    """
    w = list(word)
    coeff = ONE
    if cap is None:
        cap = 1000 + len(w) * len(w) * max(4, p.n) * max(4, p.n)
    steps = 0
    i = 0
    while i + 1 < len(w):
        key = (w[i], w[i + 1])
        hit = p.rules.get(key)
        if hit is None:
            i += 1
            continue
        (c, d), q = hit
        w[i], w[i + 1] = c, d
        coeff *= q
        steps += 1
        if steps > cap:
            raise YbeError(f"reduction of {tuple(word)} exceeded {cap} steps")
        # The new pair at i-1 may have become reducible.
        i = max(i - 1, 0)
    return tuple(w), coeff


def reduce_word(p: Presentation, word):
    """Public reduction without the certification gate (used by the
    certification itself and by diagnostics)."""
    return _reduce(p, tuple(word))


@dataclass
class GroebnerReport:
    ok: bool
    overlaps: int
    failures: list = field(default_factory=list)
    alpha: dict = field(default_factory=dict)

    def describe(self) -> str:
        if self.ok:
            return f"confluent: {self.overlaps} overlap ambiguities resolve"
        t, l, r = self.failures[0]
        return (
            f"not confluent: word {t} reduces to {l[1]} * {l[0]} and "
            f"{r[1]} * {r[0]}"
        )


def check_groebner(p: Presentation) -> GroebnerReport:
    """Diamond Lemma check on every overlap ambiguity a b c where both
    (a, b) and (b, c) are rule left-hand sides.  Scalars count: routes must
    agree in coefficient as well as in word.  Sets p.certified."""
    failures = []
    overlaps = 0
    alpha: dict = {}
    lhs_first: dict[int, list] = {}
    for (a, b) in p.rules:
        lhs_first.setdefault(a, []).append(b)
    for (a, b) in sorted(p.rules):
        for c in sorted(lhs_first.get(b, ())):
            overlaps += 1
            (x, y), q1 = p.rules[(a, b)]
            left_word, left_coeff = _reduce(p, (x, y, c))
            left_coeff *= q1
            (u, v), q2 = p.rules[(b, c)]
            right_word, right_coeff = _reduce(p, (a, u, v))
            right_coeff *= q2
            if left_word != right_word or left_coeff != right_coeff:
                failures.append(
                    ((a, b, c), (left_word, left_coeff), (right_word, right_coeff))
                )
            else:
                alpha[(a, b, c)] = left_coeff
    ok = not failures
    p.certified = ok
    return GroebnerReport(ok=ok, overlaps=overlaps, failures=failures, alpha=alpha)


def normal_form(p: Presentation, word):
    """Normal form of a rank word as (ExponentVector, coefficient).

    Requires a certified presentation.  The exponent encoding needs the
    irreducible word to be non-decreasing, which holds for every certified
    skew-type presentation.
    """
    if p.certified is not True:
        raise NotCertifiedError(
            "normal_form needs check_groebner to have passed on this presentation"
        )
    w, coeff = _reduce(p, tuple(word))
    if any(w[i] > w[i + 1] for i in range(len(w) - 1)):
        raise YbeError(
            f"irreducible word {w} is not non-decreasing; no exponent form"
        )
    exps = [0] * p.n
    for a in w:
        exps[a] += 1
    return tuple(exps), coeff


def nf_elements(p: Presentation, elem_word):
    """normal_form for a word over source elements; exponents come back in
    source-element coordinates."""
    exps_rank, coeff = normal_form(p, p.to_ranks(elem_word))
    exps = [0] * p.n
    for rank, e in enumerate(exps_rank):
        exps[p.order[rank]] = e
    return tuple(exps), coeff


def word_of_exps(exps) -> tuple[int, ...]:
    """The non-decreasing rank word with the given exponents."""
    out = []
    for a, e in enumerate(exps):
        out.extend([a] * e)
    return tuple(out)


# ---------------------------------------------------------------------------
# counting

def expected_monomial_count(n: int, d: int) -> int:
    """Binomial count of ordered monomials: C(n + d - 1, d)."""
    return comb(n + d - 1, d)


def count_normal_monomials(p: Presentation, d: int) -> int:
    """Number of length-d words with no rule LHS as an adjacent factor.

    Dynamic programming over the last letter; for a certified skew-type
    presentation this equals C(n + d - 1, d).
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    if d == 0:
        return 1
    counts = [1] * p.n
    for _ in range(d - 1):
        nxt = [0] * p.n
        for b in range(p.n):
            total = 0
            for a in range(p.n):
                if (a, b) not in p.rules:
                    total += counts[a]
            nxt[b] = total
        counts = nxt
    return sum(counts)


def count_normal_monomials_exhaustive(p: Presentation, d: int, cap: int = 200_000) -> int:
    """Independent oracle: reduce every length-d word and count the distinct
    results.  Guarded by n^d <= cap."""
    if p.certified is not True:
        raise NotCertifiedError("the exhaustive count reduces through normal forms")
    total = p.n ** d
    if total > cap:
        raise BoundExceededError(f"n^d = {total} exceeds the exhaustive cap {cap}")
    seen = set()
    word = [0] * d
    while True:
        seen.add(_reduce(p, tuple(word))[0])
        # odometer increment
        k = d - 1
        while k >= 0 and word[k] == p.n - 1:
            word[k] = 0
            k -= 1
        if k < 0:
            break
        word[k] += 1
    return len(seen)


# ---------------------------------------------------------------------------
# centrality

@dataclass
class CentralityReport:
    M: int
    pair_failures: list = field(default_factory=list)
    power_sum_failures: list = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.pair_failures and not self.power_sum_failures


def check_centrality(s: SolutionMap, p: Presentation, kmax: int = 2) -> CentralityReport:
    """Evidence that symmetric functions in the x_i^M are central.

    Checks x_i^M x_j^M = x_j^M x_i^M for all pairs and, for k <= kmax, that
    the multiset of normal forms of x_i^(kM) x_j agrees with that of
    x_j x_i^(kM) over i, for every j.
    """
    from .actions import compute_actions

    M = compute_actions(s).M
    report = CentralityReport(M=M)
    n = s.n
    for i in range(n):
        for j in range(i + 1, n):
            a = nf_elements(p, [i] * M + [j] * M)
            b = nf_elements(p, [j] * M + [i] * M)
            report.checked += 1
            if a != b:
                report.pair_failures.append((i, j, a, b))
    for k in range(1, kmax + 1):
        for j in range(n):
            left = sorted(nf_elements(p, [i] * (k * M) + [j]) for i in range(n))
            right = sorted(nf_elements(p, [j] + [i] * (k * M)) for i in range(n))
            report.checked += 1
            if left != right:
                report.power_sum_failures.append((k, j, left, right))
    return report


# ---------------------------------------------------------------------------
# ordering search

@dataclass
class OrderingSearch:
    ok: bool
    ordering: tuple[int, ...] | None
    presentation: Presentation | None
    tried: int
    trace: list = field(default_factory=list)

    def describe(self, names=None) -> str:
        if self.ok:
            shown = " < ".join(
                (names[e] if names else f"x{e + 1}") for e in self.ordering
            )
            return f"certified skew ordering: {shown} (tried {self.tried})"
        return f"no skew ordering found after {self.tried} candidates"


def _decomposition_order(s: SolutionMap):
    """Recursive block order: split off the first left-action orbit, order
    both sides, concatenate.  Returns None when some block is a single
    orbit with more than one element."""

    def order_block(elems):
        if len(elems) == 1:
            return list(elems)
        sub, back = restrict_solution(s, elems)
        orbs = left_orbits(sub)
        if len(orbs) == 1:
            return None
        first = [back[i] for i in orbs[0]]
        chosen = set(first)
        rest = [e for e in elems if e not in chosen]
        a = order_block(first)
        b = order_block(rest)
        if a is None or b is None:
            return None
        return a + b

    return order_block(sorted(range(s.n)))


def find_skew_ordering(s: SolutionMap, exhaustive_bound: int = 8) -> OrderingSearch:
    """Search for an ordering whose oriented relations form a certified
    skew-type Groebner presentation.

    Tries the natural order, then the recursive orbit-decomposition order,
    then every permutation (n <= exhaustive_bound).  On failure the trace
    carries (ordering, reason) entries for each rejected candidate.
    """
    trace = []
    tried = set()

    def attempt(order):
        order = tuple(order)
        if order in tried:
            return None
        tried.add(order)
        p = relations_of(s, order)
        if not p.skew:
            trace.append((order, f"not skew: {p.skew_defect}"))
            return None
        rep = check_groebner(p)
        if not rep.ok:
            trace.append((order, rep.describe()))
            return None
        return p

    natural = tuple(range(s.n))
    p = attempt(natural)
    if p is not None:
        return OrderingSearch(True, natural, p, len(tried), trace)

    try:
        deco = _decomposition_order(s)
    except YbeError:
        deco = None
    if deco is not None:
        p = attempt(deco)
        if p is not None:
            return OrderingSearch(True, tuple(deco), p, len(tried), trace)

    if s.n <= exhaustive_bound:
        for cand in all_permutations(range(s.n)):
            p = attempt(cand)
            if p is not None:
                return OrderingSearch(True, tuple(cand), p, len(tried), trace)
    else:
        trace.append(
            (None, f"exhaustive search skipped: n={s.n} exceeds bound {exhaustive_bound}")
        )
    return OrderingSearch(False, None, None, len(tried), trace)
