"""Permutation groups, the finite quotient G/A, and Sylow structure.

G_L is the subgroup of Sym(X) generated by the left actions.  The group
G of the solution has a free abelian normal subgroup A generated by the
x_i^M, and the quotient G/A is finite of order M^n.  Elements of the
quotient are exponent vectors with entries in [0, M); multiplication
concatenates normal forms and pushes complete M-th power blocks to the
right end with

    g^M z = z (L_z^-1 g)^M

before deleting them.  Well-definedness of that recipe is not assumed:
validate() checks the group axioms by brute force within stated bounds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd

from .actions import compute_actions, left_orbits
from .errors import BoundExceededError, YbeError
from .perms import compose, identity, inverse, orbit
from .rewriting import Presentation, _reduce
from .solutions import SolutionMap

__all__ = [
    "mulclose",
    "PermGroup",
    "permutation_group_L",
    "orbits_left",
    "QuotientGroup",
    "quotient_group",
    "SylowPiece",
    "SylowReport",
    "sylow_decomposition",
    "is_solvable",
    "decomposability_criteria",
    "DecompReport",
    "factorize",
]

GROUP_BOUND = 10 ** 6
QUOTIENT_BOUND = 10 ** 5


def orbits_left(s: SolutionMap):
    return left_orbits(s)


def mulclose(gens, bound: int = GROUP_BOUND):
    """Closure of permutation generators under composition (worklist BFS).
    Deterministic order; raises when the bound is exceeded."""
    gens = [tuple(g) for g in gens]
    if not gens:
        return []
    seen = set(gens)
    out = list(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = compose(a, g)
                if c not in seen:
                    seen.add(c)
                    out.append(c)
                    nxt.append(c)
                    if len(out) > bound:
                        raise BoundExceededError(
                            f"group closure exceeded bound {bound}"
                        )
        frontier = nxt
    if identity(len(gens[0])) not in seen:
        # Can only happen with an empty generator list, kept for safety.
        raise YbeError("closure does not contain the identity")
    return out


@dataclass
class PermGroup:
    degree: int
    generators: tuple
    elements: tuple

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p):
        return tuple(p) in self._index

    def __post_init__(self):
        self._index = set(self.elements)


def permutation_group_L(s: SolutionMap, bound: int = GROUP_BOUND) -> PermGroup:
    """G_L as a concrete subgroup of Sym(X)."""
    acts = compute_actions(s)
    gens = tuple(dict.fromkeys(acts.L))  # dedupe, preserve order
    return PermGroup(s.n, gens, tuple(mulclose(gens, bound)))


def _normal_closure_of_commutators(group: PermGroup, bound: int = GROUP_BOUND):
    """Generators of the derived subgroup: commutators of the group's
    generators, closed under conjugation by generators."""
    n = group.degree
    gens = list(group.generators)
    comms = []
    seen = set()
    for a in gens:
        for b in gens:
            ia, ib = inverse(a), inverse(b)
            c = compose(compose(ia, ib), compose(a, b))
            if c not in seen:
                seen.add(c)
                comms.append(c)
    # conjugation closure
    frontier = list(comms)
    while frontier:
        nxt = []
        for c in frontier:
            for g in gens:
                d = compose(compose(g, c), inverse(g))
                if d not in seen:
                    seen.add(d)
                    comms.append(d)
                    nxt.append(d)
                    if len(comms) > bound:
                        raise BoundExceededError("derived-subgroup closure exceeded bound")
        frontier = nxt
    ident = identity(n)
    return [c for c in comms if c != ident] or [ident]


def is_solvable(group: PermGroup, max_steps: int = 30):
    """Derived series by repeated commutator closure; returns
    (solvable, orders along the series)."""
    orders = [group.order]
    cur = group
    for _ in range(max_steps):
        if cur.order == 1:
            return True, orders
        gens = _normal_closure_of_commutators(cur)
        elements = tuple(mulclose(gens))
        if len(elements) == cur.order:
            return False, orders  # series became stationary above 1
        cur = PermGroup(cur.degree, tuple(gens), elements)
        orders.append(cur.order)
    raise YbeError("derived series did not stabilize within the step bound")


# ---------------------------------------------------------------------------
# the finite quotient

class QuotientGroup:
    """G/A with canonical representatives in [0, M)^n (rank coordinates)."""

    def __init__(self, s: SolutionMap, p: Presentation, bound: int = QUOTIENT_BOUND):
        if p.certified is not True or not p.skew:
            raise YbeError("quotient_group needs a certified skew presentation")
        acts = compute_actions(s)
        self.M = acts.M
        self.n = s.n
        self.p = p
        size = self.M ** self.n
        if size > bound:
            raise BoundExceededError(
                f"quotient order M^n = {size} exceeds the bound {bound}"
            )
        # left actions in rank coordinates
        self._Linv_rank = []
        for a in range(self.n):
            ea = acts.L[p.order[a]]
            row = tuple(p.rank_of[ea[p.order[b]]] for b in range(self.n))
            self._Linv_rank.append(inverse(row))
        self.identity = (0,) * self.n
        self.elements = self._close()
        self._index = {e: k for k, e in enumerate(self.elements)}

    def canonical(self, exps):
        """Push every complete M-th power block to the right end and drop it."""
        M = self.M
        exps = list(exps)
        while True:
            for i, e in enumerate(exps):
                if e >= M:
                    exps[i] -= M
                    g = i
                    for j in range(i, self.n):
                        for _ in range(exps[j]):
                            g = self._Linv_rank[j][g]
                    break
            else:
                return tuple(exps)

    def _word(self, exps):
        out = []
        for a, e in enumerate(exps):
            out.extend([a] * e)
        return tuple(out)

    def product(self, a, b):
        word = self._word(a) + self._word(b)
        reduced, coeff = _reduce(self.p, word)
        if coeff != 1:
            raise YbeError("unexpected coefficient in a set-theoretic product")
        exps = [0] * self.n
        for x in reduced:
            exps[x] += 1
        return self.canonical(exps)

    def _close(self):
        gens = []
        for a in range(self.n):
            e = [0] * self.n
            e[a] = 1
            gens.append(self.canonical(e))
        seen = {self.identity}
        out = [self.identity]
        frontier = [self.identity]
        while frontier:
            nxt = []
            for v in frontier:
                for g in gens:
                    w = self.product(v, g)
                    if w not in seen:
                        seen.add(w)
                        out.append(w)
                        nxt.append(w)
            frontier = nxt
        return tuple(out)

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_order(self, a) -> int:
        k = 1
        cur = a
        while cur != self.identity:
            cur = self.product(cur, a)
            k += 1
            if k > self.order + 1:
                raise YbeError("element order exceeded the group order; product is broken")
        return k

    def inverse(self, a):
        k = self.element_order(a)
        cur = self.identity
        for _ in range(k - 1):
            cur = self.product(cur, a)
        return cur

    def validate(self, seed: int = 0, assoc_cap: int = 10 ** 7, samples: int = 10 ** 5):
        """Brute-force group axioms.

        Closure and inverses over all elements, identity on both sides,
        associativity exhaustively when order^3 <= assoc_cap, otherwise on
        seeded random triples.  Returns a result dict.
        """
        elems = self.elements
        for a in elems:
            if self.product(a, self.identity) != a or self.product(self.identity, a) != a:
                raise YbeError(f"identity axiom fails at {a}")
        for a in elems:
            for b in elems:
                c = self.product(a, b)
                if c not in self._index:
                    raise YbeError(f"closure fails: {a} * {b} = {c} not in the set")
        for a in elems:
            self.inverse(a)  # raises if no inverse materializes
        total = len(elems) ** 3
        exhaustive = total <= assoc_cap
        if exhaustive:
            triples = (
                (a, b, c) for a in elems for b in elems for c in elems
            )
            checked = total
        else:
            rng = random.Random(seed)
            triples = (
                (rng.choice(elems), rng.choice(elems), rng.choice(elems))
                for _ in range(samples)
            )
            checked = samples
        for a, b, c in triples:
            if self.product(self.product(a, b), c) != self.product(a, self.product(b, c)):
                raise YbeError(f"associativity fails at {(a, b, c)}")
        return {
            "order": self.order,
            "associativity": "exhaustive" if exhaustive else f"sampled({checked})",
            "checked_triples": checked,
        }


def quotient_group(s: SolutionMap, p: Presentation, bound: int = QUOTIENT_BOUND) -> QuotientGroup:
    return QuotientGroup(s, p, bound)


# ---------------------------------------------------------------------------
# Sylow structure

def factorize(m: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


@dataclass
class SylowPiece:
    prime: int
    exponent: int
    q: int
    order: int
    normal: bool
    elements: tuple = field(repr=False, default=())


@dataclass
class SylowReport:
    M: int
    level: str  # "quotient" or "G_L"
    group_order: int
    pieces: list
    pairwise_commute: bool
    covers: bool

    def as_dict(self) -> dict:
        return {
            "M": self.M,
            "level": self.level,
            "group_order": self.group_order,
            "pieces": [
                {
                    "prime": pc.prime,
                    "q": pc.q,
                    "order": pc.order,
                    "normal": pc.normal,
                }
                for pc in self.pieces
            ],
            "pairwise_commute": self.pairwise_commute,
            "covers": self.covers,
        }


def _piece_closure(gens, mul, bound=GROUP_BOUND):
    gens = [g for g in gens]
    seen = set(gens)
    out = list(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = mul(a, g)
                if c not in seen:
                    seen.add(c)
                    out.append(c)
                    nxt.append(c)
                    if len(out) > bound:
                        raise BoundExceededError("Sylow piece closure exceeded bound")
        frontier = nxt
    return out


def sylow_decomposition(
    s: SolutionMap,
    p: Presentation | None = None,
    quotient_bound: int = QUOTIENT_BOUND,
) -> SylowReport:
    """Sylow pieces generated by the images of the q_i-th powers of the
    generators, with q_i = M / p_i^(a_i).

    Works inside the finite quotient when M^n fits the bound and a
    presentation is supplied; otherwise degrades to the image level G_L.
    Normality of each piece is recorded as data, never asserted.
    """
    acts = compute_actions(s)
    M = acts.M
    primes = factorize(M)

    use_quotient = p is not None and M ** s.n <= quotient_bound
    if use_quotient:
        Q = QuotientGroup(s, p, quotient_bound)
        level = "quotient"
        group_elems = set(Q.elements)
        group_order = Q.order
        mul = Q.product
        ident = Q.identity

        def power_gen(a, q):
            e = [0] * s.n
            e[a] = q
            return Q.canonical(e)

        gen_range = range(s.n)
        def conj(g, x):
            return mul(mul(g, x), Q.inverse(g))
    else:
        G = permutation_group_L(s)
        level = "G_L"
        group_elems = set(G.elements)
        group_order = G.order
        mul = compose
        ident = identity(s.n)

        def power_gen(a, q):
            g = ident
            base = acts.L[a]
            for _ in range(q):
                g = compose(g, base)
            return g

        gen_range = range(s.n)
        def conj(g, x):
            return compose(compose(g, x), inverse(g))
        G_generators = G.generators

    pieces = []
    for prime, a in sorted(primes.items()):
        q = M // prime ** a
        gens = {power_gen(x, q) for x in gen_range}
        gens.discard(ident)
        if not gens:
            elems = [ident]
        else:
            elems = _piece_closure(sorted(gens), mul)
            if ident not in elems:
                elems.append(ident)
        elem_set = set(elems)
        if use_quotient:
            conj_gens = [Q.canonical([1 if i == x else 0 for i in range(s.n)]) for x in gen_range]
        else:
            conj_gens = list(G_generators)
        normal = all(conj(g, x) in elem_set for g in conj_gens for x in elems)
        pieces.append(
            SylowPiece(
                prime=prime,
                exponent=a,
                q=q,
                order=len(elems),
                normal=normal,
                elements=tuple(sorted(elems)),
            )
        )

    commute = True
    for i in range(len(pieces)):
        for j in range(i + 1, len(pieces)):
            ab = {mul(a, b) for a in pieces[i].elements for b in pieces[j].elements}
            ba = {mul(b, a) for a in pieces[i].elements for b in pieces[j].elements}
            if ab != ba:
                commute = False

    prod = {ident}
    for pc in pieces:
        prod = {mul(a, b) for a in prod for b in pc.elements}
    covers = prod == group_elems

    return SylowReport(
        M=M,
        level=level,
        group_order=group_order,
        pieces=pieces,
        pairwise_commute=commute,
        covers=covers,
    )


# ---------------------------------------------------------------------------
# decomposability

@dataclass
class DecompReport:
    orbit_count: int
    orbits: tuple
    prime_criterion: tuple | None  # (p,) when some p | n has p not dividing M
    cycle_criterion: tuple | None  # (p, x) when x sits in no cycle of length divisible by p
    decomposable: bool

    def as_dict(self) -> dict:
        return {
            "orbit_count": self.orbit_count,
            "orbits": [list(o) for o in self.orbits],
            "prime_criterion": self.prime_criterion,
            "cycle_criterion": self.cycle_criterion,
            "decomposable": self.decomposable,
        }


def decomposability_criteria(s: SolutionMap) -> DecompReport:
    """The two sufficient criteria plus the ground truth orbit count.

    Both criteria look at primes p dividing n: the first fires when p does
    not divide M; the second when some x lies in no L_y-cycle of length
    divisible by p.  Firing implies (and is checked against) orbit count
    at least 2; the converse direction does not hold.
    """
    acts = compute_actions(s)
    orbs = left_orbits(s)
    primes = sorted(factorize(s.n)) if s.n > 1 else []

    prime_criterion = None
    for prime in primes:
        if acts.M % prime != 0:
            prime_criterion = (prime,)
            break

    cycle_criterion = None
    for prime in primes:
        for x in range(s.n):
            lengths = {len(orbit(acts.L[y], x)) for y in range(s.n)}
            if all(ln % prime != 0 for ln in lengths):
                cycle_criterion = (prime, x)
                break
        if cycle_criterion:
            break

    return DecompReport(
        orbit_count=len(orbs),
        orbits=orbs,
        prime_criterion=prime_criterion,
        cycle_criterion=cycle_criterion,
        decomposable=len(orbs) > 1,
    )
