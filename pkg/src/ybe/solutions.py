"""Core container and predicates for set-theoretic Yang-Baxter maps.

A SolutionMap is a bijection r of X x X where X = {0, .., n-1}.  Everything
else in the package (cycle structure, rewriting, group quotients, retracts)
is derived from this table.  Indices are 0-based in code; the text format
and all rendered output use 1-based indices or generator names.

Conventions.  We write r(x, y) = (L_x(y), R_y(x)).  The map is braided when
(r x id)(id x r)(r x id) = (id x r)(r x id)(id x r) on triples, involutive
when r o r = id, and square-free when it fixes the diagonal.  "Solution"
with no qualifier means braided, involutive and non-degenerate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import permutations as all_permutations
from math import lcm

from .errors import BoundExceededError, ParseError
from .perms import inverse, is_permutation

__all__ = [
    "SolutionMap",
    "PropertyReport",
    "Relabeling",
    "default_names",
    "classify",
    "is_braided",
    "build_permutation_solution",
    "build_from_left_actions",
    "left_action_tables",
    "right_action_tables",
    "canonical_form",
    "is_isomorphic",
    "parse_solution",
    "serialize_solution",
    "R_ORDER_BOUND",
    "CANONICAL_N_BOUND",
]

R_ORDER_BOUND = 64
CANONICAL_N_BOUND = 8


def default_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


class SolutionMap:
    """Bijective map on ordered pairs over an n-element set.

    The table is stored flat: the image of (i, j) sits at index i*n + j,
    packed as k*n + l.  Construction validates shape and bijectivity and
    nothing else; use classify() for the mathematical predicates.
    """

    __slots__ = ("n", "table", "names")

    def __init__(self, n: int, table, names=None):
        if n < 1:
            raise ValueError("n must be at least 1")
        table = tuple(table)
        if len(table) != n * n:
            raise ValueError(f"table has {len(table)} entries, expected {n * n}")
        for v in table:
            if not isinstance(v, int) or not 0 <= v < n * n:
                raise ValueError(f"table entry {v!r} out of range")
        if len(set(table)) != n * n:
            seen: dict[int, int] = {}
            for idx, v in enumerate(table):
                if v in seen:
                    raise ValueError(
                        f"not bijective: pairs {divmod(seen[v], n)} and "
                        f"{divmod(idx, n)} share the image {divmod(v, n)}"
                    )
                seen[v] = idx
        if names is None:
            names = default_names(n)
        else:
            names = tuple(str(x) for x in names)
            if len(names) != n:
                raise ValueError("names length does not match n")
            if len(set(names)) != n:
                raise ValueError("names must be distinct")
        self.n = n
        self.table = table
        self.names = names

    @classmethod
    def from_pairs(cls, n: int, mapping, names=None) -> "SolutionMap":
        """Build from a dict (i, j) -> (k, l); unlisted pairs stay fixed."""
        table = [i * n + j for i in range(n) for j in range(n)]
        for (i, j), (k, l) in mapping.items():
            table[i * n + j] = k * n + l
        return cls(n, table, names)

    def r(self, i: int, j: int) -> tuple[int, int]:
        return divmod(self.table[i * self.n + j], self.n)

    def pairs(self):
        """Yield ((i, j), (k, l)) for every input pair."""
        n = self.n
        for p, v in enumerate(self.table):
            yield divmod(p, n), divmod(v, n)

    def moved_pairs(self):
        n = self.n
        for p, v in enumerate(self.table):
            if p != v:
                yield divmod(p, n), divmod(v, n)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown generator name {name!r}") from None

    def relabel(self, pi) -> "SolutionMap":
        """Transport the table along the bijection pi: old index -> new index.

        The new map satisfies r'(pi(i), pi(j)) = (pi x pi)(r(i, j)); names
        follow their elements.
        """
        n = self.n
        pi = tuple(pi)
        if not is_permutation(pi) or len(pi) != n:
            raise ValueError("relabeling must be a permutation of the index set")
        table = [0] * (n * n)
        for p, v in enumerate(self.table):
            i, j = divmod(p, n)
            k, l = divmod(v, n)
            table[pi[i] * n + pi[j]] = pi[k] * n + pi[l]
        names = [""] * n
        for i in range(n):
            names[pi[i]] = self.names[i]
        return SolutionMap(n, table, names)

    def __eq__(self, other):
        return (
            isinstance(other, SolutionMap)
            and self.n == other.n
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.n, self.table))

    def __repr__(self):
        moved = sum(1 for p, v in enumerate(self.table) if p != v)
        return f"SolutionMap(n={self.n}, moved_pairs={moved})"


@dataclass(frozen=True)
class Relabeling:
    """Isomorphism witness: element i of the source becomes mapping[i]."""

    mapping: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def apply(self, s: SolutionMap) -> SolutionMap:
        return s.relabel(self.mapping)


@dataclass
class PropertyReport:
    """Outcome of classify().  Witnesses hold one violating input per failed
    predicate, as 0-based tuples; replaying them through the definitions
    reproduces the failure."""

    n: int
    involutive: bool
    left_nondegenerate: bool
    right_nondegenerate: bool
    square_free: bool
    braided: bool
    r_order: int | None
    r_order_bound: int
    witnesses: dict = field(default_factory=dict)

    @property
    def symmetric(self) -> bool:
        return self.braided and self.involutive

    @property
    def nondegenerate(self) -> bool:
        return self.left_nondegenerate and self.right_nondegenerate

    @property
    def is_solution(self) -> bool:
        """Braided + involutive + non-degenerate."""
        return self.braided and self.involutive and self.nondegenerate

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "involutive": self.involutive,
            "left_nondegenerate": self.left_nondegenerate,
            "right_nondegenerate": self.right_nondegenerate,
            "square_free": self.square_free,
            "braided": self.braided,
            "symmetric": self.symmetric,
            "is_solution": self.is_solution,
            "r_order": self.r_order,
            "r_order_bound": self.r_order_bound,
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
        }


def left_action_tables(s: SolutionMap) -> list[tuple[int, ...]]:
    """Row x is the tuple (L_x(0), .., L_x(n-1)); no bijectivity check."""
    n = s.n
    return [tuple(s.table[x * n + y] // n for y in range(n)) for x in range(n)]


def right_action_tables(s: SolutionMap) -> list[tuple[int, ...]]:
    """Row y is the tuple (R_y(0), .., R_y(n-1))."""
    n = s.n
    return [tuple(s.table[x * n + y] % n for x in range(n)) for y in range(n)]


def is_braided(s: SolutionMap) -> tuple[bool, tuple | None]:
    """Check r1 r2 r1 = r2 r1 r2 on all n^3 triples; return a witness triple
    on failure."""
    n = s.n
    t = s.table

    def r1(a, b, c):
        k, l = divmod(t[a * n + b], n)
        return k, l, c

    def r2(a, b, c):
        k, l = divmod(t[b * n + c], n)
        return a, k, l

    for a in range(n):
        for b in range(n):
            for c in range(n):
                if r1(*r2(*r1(a, b, c))) != r2(*r1(*r2(a, b, c))):
                    return False, (a, b, c)
    return True, None


def classify(s: SolutionMap, r_order_bound: int = R_ORDER_BOUND) -> PropertyReport:
    n = s.n
    witnesses: dict = {}

    involutive = True
    for (i, j), (k, l) in s.pairs():
        if s.r(k, l) != (i, j):
            involutive = False
            witnesses["involutive"] = (i, j)
            break

    left_nd = True
    for x, row in enumerate(left_action_tables(s)):
        if not is_permutation(row):
            left_nd = False
            ys = [y for y in range(n) if row.count(row[y]) > 1]
            witnesses["left_nondegenerate"] = (x, ys[0], ys[1])
            break

    right_nd = True
    for y, row in enumerate(right_action_tables(s)):
        if not is_permutation(row):
            right_nd = False
            xs = [x for x in range(n) if row.count(row[x]) > 1]
            witnesses["right_nondegenerate"] = (y, xs[0], xs[1])
            break

    square_free = True
    for x in range(n):
        if s.r(x, x) != (x, x):
            square_free = False
            witnesses["square_free"] = (x,)
            break

    braided, bw = is_braided(s)
    if not braided:
        witnesses["braided"] = bw

    # r permutes the n^2 pairs; its order is the lcm of the cycle lengths.
    order = 1
    seen = [False] * (n * n)
    for start in range(n * n):
        if seen[start]:
            continue
        length = 0
        p = start
        while not seen[p]:
            seen[p] = True
            p = s.table[p]
            length += 1
        order = lcm(order, length)
    r_order: int | None = order if order <= r_order_bound else None
    if r_order is None:
        witnesses["r_order"] = (order,)

    return PropertyReport(
        n=n,
        involutive=involutive,
        left_nondegenerate=left_nd,
        right_nondegenerate=right_nd,
        square_free=square_free,
        braided=braided,
        r_order=r_order,
        r_order_bound=r_order_bound,
        witnesses=witnesses,
    )


def build_permutation_solution(n: int, f, g, names=None) -> SolutionMap:
    """The permutational map r(x, y) = (g(y), f(x)) for f, g in Sym(X).

    Braided iff f g = g f, involutive iff f = g^-1; the caller classifies.
    """
    f = tuple(f)
    g = tuple(g)
    if len(f) != n or len(g) != n or not is_permutation(f) or not is_permutation(g):
        raise ValueError("f and g must be permutations of {0,..,n-1}")
    table = [g[y] * n + f[x] for x in range(n) for y in range(n)]
    return SolutionMap(n, table, names)


def build_from_left_actions(L, names=None) -> SolutionMap:
    """Assemble r(x, y) = (L_x(y), L_y^-1(x)) from a full list of left actions.

    This is the standard reconstruction for square-free involutive solutions,
    where R_y = L_y^-1.  The result is only guaranteed to be a solution when
    the L-data actually came from one; classify() to confirm.
    """
    L = [tuple(p) for p in L]
    n = len(L)
    for x, p in enumerate(L):
        if len(p) != n or not is_permutation(p):
            raise ValueError(f"L[{x}] is not a permutation of {{0,..,{n - 1}}}")
    Linv = [inverse(p) for p in L]
    table = [L[x][y] * n + Linv[y][x] for x in range(n) for y in range(n)]
    return SolutionMap(n, table, names)


def canonical_form(
    s: SolutionMap, bound: int = CANONICAL_N_BOUND
) -> tuple[SolutionMap, Relabeling]:
    """Lexicographically least table over all relabelings, with a witness.

    Exhaustive over n! permutations; refuses n > bound (default 8).
    """
    if s.n > bound:
        raise BoundExceededError(
            f"canonical_form is exhaustive over n! relabelings; n={s.n} exceeds "
            f"the bound {bound}"
        )
    n = s.n
    best = None
    best_pi = None
    for pi in all_permutations(range(n)):
        table = [0] * (n * n)
        for p, v in enumerate(s.table):
            i, j = divmod(p, n)
            k, l = divmod(v, n)
            table[pi[i] * n + pi[j]] = pi[k] * n + pi[l]
        key = tuple(table)
        if best is None or key < best:
            best = key
            best_pi = pi
    return SolutionMap(n, best), Relabeling(best_pi)


def is_isomorphic(
    a: SolutionMap, b: SolutionMap, bound: int = CANONICAL_N_BOUND
) -> Relabeling | None:
    """A relabeling carrying a onto b, or None.

    Isomorphism here is conjugation of the table by a bijection of the
    underlying sets; names play no role.
    """
    if a.n != b.n:
        return None
    if a.n > bound:
        raise BoundExceededError(f"n={a.n} exceeds the isomorphism bound {bound}")
    n = a.n
    for pi in all_permutations(range(n)):
        ok = True
        for p, v in enumerate(a.table):
            i, j = divmod(p, n)
            k, l = divmod(v, n)
            if b.table[pi[i] * n + pi[j]] != pi[k] * n + pi[l]:
                ok = False
                break
        if ok:
            return Relabeling(pi)
    return None


# ---------------------------------------------------------------------------
# serialization

FORMAT_HEADER = "ybe-solution v1"
JSON_SCHEMA = "ybe-solution/1"


def serialize_solution(s: SolutionMap, as_json: bool = False) -> str:
    """Text or JSON form.  Only moved pairs are listed; unlisted pairs are
    fixed points by convention."""
    moved = [
        [i + 1, j + 1, k + 1, l + 1] for (i, j), (k, l) in s.moved_pairs()
    ]
    if as_json:
        payload = {
            "schema": JSON_SCHEMA,
            "n": s.n,
            "names": list(s.names),
            "map": moved,
        }
        return json.dumps(payload, indent=2) + "\n"
    lines = [FORMAT_HEADER, f"n {s.n}"]
    if s.names != default_names(s.n):
        lines.append("names " + " ".join(s.names))
    for i, j, k, l in moved:
        lines.append(f"map {i} {j} -> {k} {l}")
    return "\n".join(lines) + "\n"


def _resolve(tok: str, names, n: int) -> int:
    """Map a token to a 0-based index: declared name first, then 1-based int."""
    if names is not None and tok in names:
        return names.index(tok)
    try:
        v = int(tok)
    except ValueError:
        raise ParseError(f"unknown generator token {tok!r}") from None
    if not 1 <= v <= n:
        raise ParseError(f"index {v} out of range 1..{n}")
    return v - 1


def parse_solution(text: str) -> SolutionMap:
    """Parse the plain-text format (or its JSON rendering).

    Lines: the header, 'n <int>', optional 'names ...', then
    'map <i> <j> -> <k> <l>' with 1-based indices or declared names.
    '#' starts a comment; unlisted pairs are fixed points.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json(stripped)
    n = None
    names = None
    moves: dict[tuple[int, int], tuple[int, int]] = {}
    saw_header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not saw_header:
            if line != FORMAT_HEADER:
                raise ParseError(
                    f"line {lineno}: expected header {FORMAT_HEADER!r}, got {line!r}"
                )
            saw_header = True
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate n line")
            try:
                n = int(parts[1])
            except (IndexError, ValueError):
                raise ParseError(f"line {lineno}: malformed n line") from None
            if n < 1:
                raise ParseError(f"line {lineno}: n must be positive")
        elif parts[0] == "names":
            if n is None:
                raise ParseError(f"line {lineno}: names before n")
            names = parts[1:]
            if len(names) != n:
                raise ParseError(
                    f"line {lineno}: {len(names)} names for n={n} generators"
                )
        elif parts[0] == "map":
            if n is None:
                raise ParseError(f"line {lineno}: map before n")
            if len(parts) != 6 or parts[3] != "->":
                raise ParseError(
                    f"line {lineno}: expected 'map <i> <j> -> <k> <l>'"
                )
            i, j, k, l = (_resolve(t, names, n) for t in (parts[1], parts[2], parts[4], parts[5]))
            if (i, j) in moves:
                raise ParseError(f"line {lineno}: pair ({parts[1]}, {parts[2]}) mapped twice")
            moves[(i, j)] = (k, l)
        else:
            raise ParseError(f"line {lineno}: unrecognized directive {parts[0]!r}")
    if not saw_header:
        raise ParseError("empty input: missing header line")
    if n is None:
        raise ParseError("missing 'n' line")
    try:
        return SolutionMap.from_pairs(n, moves, names)
    except ValueError as e:
        raise ParseError(str(e)) from None


def _parse_json(text: str) -> SolutionMap:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"bad JSON: {e}") from None
    if payload.get("schema") != JSON_SCHEMA:
        raise ParseError(f"unexpected schema {payload.get('schema')!r}")
    try:
        n = int(payload["n"])
        names = payload.get("names")
        moves = {
            (i - 1, j - 1): (k - 1, l - 1) for i, j, k, l in payload["map"]
        }
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"malformed JSON payload: {e}") from None
    for (i, j), (k, l) in moves.items():
        for v in (i, j, k, l):
            if not 0 <= v < n:
                raise ParseError("JSON map index out of range")
    try:
        return SolutionMap.from_pairs(n, moves, names)
    except ValueError as e:
        raise ParseError(str(e)) from None
