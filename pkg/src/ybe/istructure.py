"""Left and right I-structures of a square-free solution.

The monoid S presented by the certified skew relations is in degree-wise
bijection with the free abelian monoid U on the same generators.  The left
I-structure v and right I-structure v1 realize those bijections:

    v(1) = 1,   v(u_i b)  = x' v(b)   with x' = L_w(x_i), w a word for v(b),
    v1(1) = 1,  v1(b u_i) = v1(b) x'' with x'' = R_w(x_i), w a word for v1(b),

where L and R extend multiplicatively along words (L_w applies letters
right to left, R_w left to right).  Peeling is done at every available
generator and the candidates are compared as normal forms, so a failure of
well-definedness raises instead of silently picking a branch.  Layers are
cached per (solution, ordering) up to a degree bound.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .actions import compute_actions
from .errors import BoundExceededError, YbeError
from .perms import inverse
from .rewriting import Presentation, nf_elements
from .solutions import SolutionMap, classify

__all__ = [
    "IStructure",
    "get_istructure",
    "left_istructure",
    "right_istructure",
    "lcm_left",
    "heads_tails",
    "DEGREE_BOUND",
]

DEGREE_BOUND = 6

_CACHE: dict = {}


def _exps_of_word(n, word):
    exps = [0] * n
    for e in word:
        exps[e] += 1
    return tuple(exps)


class IStructure:
    """Cached degree-wise tables of v and v1 for one solution and ordering."""

    def __init__(self, s: SolutionMap, p: Presentation, max_degree: int = DEGREE_BOUND):
        rep = classify(s)
        if not (rep.is_solution and rep.square_free):
            raise YbeError("I-structures are built for square-free solutions only")
        if p.certified is not True or not p.skew:
            raise YbeError("I-structures need a certified skew-type presentation")
        self.s = s
        self.p = p
        self.n = s.n
        self.max_degree = max_degree
        acts = compute_actions(s)
        self._L = acts.L
        self._R = acts.R
        # v_layers[d]: U-exps -> (S-exps, normal word); v_inv[d] the reverse.
        self._v_layers: list[dict] = [{(0,) * self.n: ((0,) * self.n, ())}]
        self._v1_layers: list[dict] = [{(0,) * self.n: ((0,) * self.n, ())}]
        self._v_inv: list[dict] = [{(0,) * self.n: (0,) * self.n}]
        self._v1_inv: list[dict] = [{(0,) * self.n: (0,) * self.n}]

    def _act_left(self, word, x):
        """L_w(x): letters act right to left."""
        for e in reversed(word):
            x = self._L[e][x]
        return x

    def _act_right(self, word, x):
        """R_w(x): letters act left to right."""
        for e in word:
            x = self._R[e][x]
        return x

    def _normal_word(self, exps):
        ranked = sorted(
            (e for e in range(self.n) for _ in range(exps[e])),
            key=lambda e: self.p.rank_of[e],
        )
        return tuple(ranked)

    def _grow(self, degree):
        if degree > self.max_degree:
            raise BoundExceededError(
                f"degree {degree} exceeds the I-structure bound {self.max_degree}"
            )
        while len(self._v_layers) <= degree:
            d = len(self._v_layers)
            prev_v = self._v_layers[d - 1]
            prev_v1 = self._v1_layers[d - 1]
            layer_v: dict = {}
            layer_v1: dict = {}
            for combo in combinations_with_replacement(range(self.n), d):
                a = _exps_of_word(self.n, combo)
                candidates_v = set()
                candidates_v1 = set()
                for i in set(combo):
                    b = list(a)
                    b[i] -= 1
                    b = tuple(b)
                    _, wb = prev_v[b]
                    head = self._act_left(wb, i)
                    nf, coeff = nf_elements(self.p, (head,) + wb)
                    if coeff != 1:
                        raise YbeError("unexpected coefficient in a set-theoretic product")
                    candidates_v.add(nf)
                    _, wb1 = prev_v1[b]
                    tail = self._act_right(wb1, i)
                    nf1, _ = nf_elements(self.p, wb1 + (tail,))
                    candidates_v1.add(nf1)
                if len(candidates_v) != 1:
                    raise YbeError(
                        f"left I-structure is not well defined at {a}: "
                        f"peeling orders give {sorted(candidates_v)}"
                    )
                if len(candidates_v1) != 1:
                    raise YbeError(
                        f"right I-structure is not well defined at {a}: "
                        f"peeling orders give {sorted(candidates_v1)}"
                    )
                nf = candidates_v.pop()
                nf1 = candidates_v1.pop()
                if sum(nf) != d or sum(nf1) != d:
                    raise YbeError("I-structure failed to preserve degree")
                layer_v[a] = (nf, self._normal_word(nf))
                layer_v1[a] = (nf1, self._normal_word(nf1))
            inv_v = {nf: a for a, (nf, _) in layer_v.items()}
            inv_v1 = {nf: a for a, (nf, _) in layer_v1.items()}
            if len(inv_v) != len(layer_v):
                raise YbeError(f"left I-structure is not injective in degree {d}")
            if len(inv_v1) != len(layer_v1):
                raise YbeError(f"right I-structure is not injective in degree {d}")
            self._v_layers.append(layer_v)
            self._v1_layers.append(layer_v1)
            self._v_inv.append(inv_v)
            self._v1_inv.append(inv_v1)

    def layer(self, d: int) -> dict:
        """Degree-d slice of v: U-exponents -> image exponents."""
        self._grow(d)
        return {a: nf for a, (nf, _) in self._v_layers[d].items()}

    def v(self, a) -> tuple[int, ...]:
        """Left I-structure image of the U-monomial with exponents a."""
        a = tuple(a)
        d = sum(a)
        self._grow(d)
        return self._v_layers[d][a][0]

    def v1(self, a) -> tuple[int, ...]:
        a = tuple(a)
        d = sum(a)
        self._grow(d)
        return self._v1_layers[d][a][0]

    def v_inverse(self, exps) -> tuple[int, ...]:
        exps = tuple(exps)
        d = sum(exps)
        self._grow(d)
        try:
            return self._v_inv[d][exps]
        except KeyError:
            raise YbeError(f"{exps} is not a normal monomial image in degree {d}") from None

    def v1_inverse(self, exps) -> tuple[int, ...]:
        exps = tuple(exps)
        d = sum(exps)
        self._grow(d)
        try:
            return self._v1_inv[d][exps]
        except KeyError:
            raise YbeError(f"{exps} is not a normal monomial image in degree {d}") from None

    def lcm_left(self, a_exps, b_exps) -> tuple[int, ...]:
        """Least common left multiple through the lattice isomorphism:
        transport both elements to U, join componentwise, come back."""
        ua = self.v_inverse(a_exps)
        ub = self.v_inverse(b_exps)
        join = tuple(max(x, y) for x, y in zip(ua, ub))
        return self.v(join)

    def heads(self, w_exps) -> tuple[int, ...]:
        """Generators h with w = h w' for some w' in S, by scanning all
        single-generator left factorizations through normal forms."""
        w_exps = tuple(w_exps)
        d = sum(w_exps)
        if d == 0:
            return ()
        found = []
        for h in range(self.n):
            for combo in combinations_with_replacement(range(self.n), d - 1):
                nf, _ = nf_elements(self.p, (h,) + combo)
                if nf == w_exps:
                    found.append(h)
                    break
        return tuple(found)

    def tails(self, w_exps) -> tuple[int, ...]:
        w_exps = tuple(w_exps)
        d = sum(w_exps)
        if d == 0:
            return ()
        found = []
        for t in range(self.n):
            for combo in combinations_with_replacement(range(self.n), d - 1):
                nf, _ = nf_elements(self.p, combo + (t,))
                if nf == w_exps:
                    found.append(t)
                    break
        return tuple(found)


def get_istructure(s: SolutionMap, p: Presentation, max_degree: int = DEGREE_BOUND) -> IStructure:
    key = (s.table, p.order)
    cached = _CACHE.get(key)
    if cached is None or cached.max_degree < max_degree:
        cached = IStructure(s, p, max_degree)
        _CACHE[key] = cached
    return cached


def left_istructure(s: SolutionMap, p: Presentation, a) -> tuple[int, ...]:
    return get_istructure(s, p).v(a)


def right_istructure(s: SolutionMap, p: Presentation, a) -> tuple[int, ...]:
    return get_istructure(s, p).v1(a)


def lcm_left(s: SolutionMap, p: Presentation, a_exps, b_exps) -> tuple[int, ...]:
    return get_istructure(s, p).lcm_left(a_exps, b_exps)


def heads_tails(s: SolutionMap, p: Presentation, w_exps):
    cache = get_istructure(s, p)
    return cache.heads(w_exps), cache.tails(w_exps)
