"""Exhaustive catalogs of square-free solutions for small ground sets.

The search runs over assignments x -> L_x with L_x(x) = x, builds
r(x, y) = (L_x(y), L_y^-1(x)), filters through the classifier, and
dedupes by canonical form.  The assignment of L to the first element
partitions the space into independent shards.

A second, structurally different search over pair involutions is kept
for n <= 3 as a completeness oracle; the two catalogs must coincide.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations as all_permutations
from multiprocessing import Pool

from .actions import compute_actions, left_orbits
from .errors import BoundExceededError
from .perms import identity, inverse
from .solutions import SolutionMap, build_from_left_actions, canonical_form, classify

__all__ = [
    "CatalogEntry",
    "enumerate_square_free",
    "enumerate_by_pair_involutions",
    "survey",
    "N_BOUND",
]

N_BOUND = 5
CROSS_ORACLE_BOUND = 3


def _point_fixing(n: int, x: int):
    return [p for p in all_permutations(range(n)) if p[x] == x]


def _consistent(L, k: int) -> bool:
    """Prune after assigning L[k]: every constraint whose participants are
    all assigned must hold.

    Braid in left-action form: L_a L_b = L_{L_a(b)} L_{L_b^-1(a)}.
    Involutivity of the built map: L_u(v) = a for (u, v) = r(a, b).
    """
    n = len(L[0])
    inv = [inverse(p) if p is not None else None for p in L]
    for a in range(k + 1):
        for b in range(k + 1):
            c = L[a][b]
            d = inv[b][a]
            if c <= k and d <= k:
                for t in range(n):
                    if L[a][L[b][t]] != L[c][L[d][t]]:
                        return False
            u = L[a][b]
            v = inv[b][a]
            if u <= k and v <= k:
                if L[u][v] != a or inv[v][u] != b:
                    return False
    return True


def _search_shard(args):
    n, first = args
    stabs = [_point_fixing(n, x) for x in range(n)]
    found = []
    L: list = [None] * n
    L[0] = first
    if not _consistent(L, 0):
        return found

    def walk(k: int):
        if k == n:
            s = build_from_left_actions(L)
            rep = classify(s)
            if rep.is_solution and rep.square_free:
                found.append(s)
            return
        for cand in stabs[k]:
            L[k] = cand
            if _consistent(L, k):
                walk(k + 1)
        L[k] = None

    walk(1)
    return found


@dataclass
class CatalogEntry:
    solution: SolutionMap      # canonical representative
    M: int
    orbit_count: int
    level: int | None
    ordering: tuple | None     # certified skew ordering, None when none found
    group_order: int
    nontrivial_pairs: int      # pairs whose relation is neither fixed nor a plain swap
    is_trivial: bool
    presentation: object = field(repr=False, default=None)

    def row(self) -> dict:
        return {
            "n": self.solution.n,
            "M": self.M,
            "orbits": self.orbit_count,
            "level": self.level,
            "ordering_found": self.ordering is not None,
            "group_order": self.group_order,
            "nontrivial_pairs": self.nontrivial_pairs,
            "trivial": self.is_trivial,
        }


def _count_nontrivial_pairs(s: SolutionMap) -> int:
    cnt = 0
    for i in range(s.n):
        for j in range(s.n):
            if s.r(i, j) not in ((i, j), (j, i)):
                cnt += 1
    return cnt


def _entry_of(s: SolutionMap) -> CatalogEntry:
    from .groups import permutation_group_L
    from .retracts import multipermutation_level
    from .rewriting import find_skew_ordering

    acts = compute_actions(s)
    mpl = multipermutation_level(s)
    search = find_skew_ordering(s)
    return CatalogEntry(
        solution=s,
        M=acts.M,
        orbit_count=len(left_orbits(s)),
        level=mpl.level,
        ordering=search.ordering if search.ok else None,
        group_order=permutation_group_L(s).order,
        nontrivial_pairs=_count_nontrivial_pairs(s),
        is_trivial=all(p == identity(s.n) for p in acts.L),
        presentation=search.presentation if search.ok else None,
    )


def enumerate_square_free(n: int, jobs: int = 1):
    """Complete duplicate-free catalog of square-free solutions on n
    elements, one CatalogEntry per isomorphism class."""
    if not 1 <= n <= N_BOUND:
        raise BoundExceededError(
            f"enumeration supports 1 <= n <= {N_BOUND}, got {n}"
        )
    shards = [(n, first) for first in _point_fixing(n, 0)]
    if jobs > 1:
        with Pool(jobs) as pool:
            shard_hits = pool.map(_search_shard, shards)
    else:
        shard_hits = [_search_shard(sh) for sh in shards]

    canon: dict = {}
    for hits in shard_hits:
        for s in hits:
            c, _ = canonical_form(s)
            canon.setdefault(c.table, c)
    reps = [canon[t] for t in sorted(canon)]
    entries = [_entry_of(s) for s in reps]
    entries.sort(key=lambda e: (e.nontrivial_pairs, e.solution.table))
    return entries


def _involutions(points):
    """All involutions of a finite point list, as dicts."""
    if not points:
        yield {}
        return
    x, rest = points[0], points[1:]
    for sub in _involutions(rest):
        out = dict(sub)
        out[x] = x
        yield out
    for k, y in enumerate(rest):
        others = rest[:k] + rest[k + 1:]
        for sub in _involutions(others):
            out = dict(sub)
            out[x] = y
            out[y] = x
            yield out


def enumerate_by_pair_involutions(n: int):
    """Independent completeness oracle: raw search over involutive maps of
    X^2 fixing the diagonal, filtered by the classifier.  Exponential in
    n^2, so gated hard."""
    if not 1 <= n <= CROSS_ORACLE_BOUND:
        raise BoundExceededError(
            f"the raw pair search supports n <= {CROSS_ORACLE_BOUND}, got {n}"
        )
    off_diag = [(i, j) for i in range(n) for j in range(n) if i != j]
    canon: dict = {}
    for inv_map in _involutions(off_diag):
        s = SolutionMap.from_pairs(n, inv_map)
        rep = classify(s)
        if rep.is_solution and rep.square_free:
            c, _ = canonical_form(s)
            canon.setdefault(c.table, c)
    return [canon[t] for t in sorted(canon)]


def survey(n: int, jobs: int = 1, entries=None):
    """Catalog plus the invariants the survey table reports."""
    if entries is None:
        entries = enumerate_square_free(n, jobs=jobs)
    rows = []
    for k, e in enumerate(entries):
        row = e.row()
        row["id"] = f"n{n}-{k + 1}"
        row["decomposable"] = e.orbit_count > 1
        row["retractable"] = e.level is not None
        rows.append(row)
    return rows
