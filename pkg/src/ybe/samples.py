"""Built-in sample solutions.

These are the worked examples used throughout the test-suite and shipped as
fixture files.  Each builder returns a fresh SolutionMap; the tables are
spelled out (or assembled from their defining permutation data) rather than
loaded from disk, so the fixtures can be regenerated at any time.
"""

from __future__ import annotations

from .perms import from_cycles, identity
from .solutions import SolutionMap, build_from_left_actions

__all__ = [
    "trivial_solution",
    "n3_cyclic",
    "n4_sigma",
    "n6_noninvolutive",
    "gen11",
    "GEN11_RELATIONS",
    "n10_sylow",
    "n10_level3",
    "sample_registry",
]


def trivial_solution(n: int) -> SolutionMap:
    """r(x, y) = (y, x)."""
    table = [y * n + x for x in range(n) for y in range(n)]
    return SolutionMap(n, table)


def n3_cyclic() -> SolutionMap:
    """Three generators, one nontrivial relation orbit: L1 = L2 = id,
    L3 = (x1 x2).  The smallest square-free solution that is not trivial."""
    moves = {
        (2, 0): (1, 2),
        (1, 2): (2, 0),
        (2, 1): (0, 2),
        (0, 2): (2, 1),
        (1, 0): (0, 1),
        (0, 1): (1, 0),
    }
    return SolutionMap.from_pairs(3, moves)


def n4_sigma() -> SolutionMap:
    """Four generators split into two blocks {x1, x2} and {x3, x4}.

    Across blocks r(x, y) = (sigma(y), sigma^-1(x)) with sigma = (x1 x2)(x3 x4);
    inside a block the factors commute.  Left actions come out as
    L1 = L2 = (x3 x4) and L3 = L4 = (x1 x2).
    """
    moves = {
        (0, 2): (3, 1),
        (3, 1): (0, 2),
        (0, 3): (2, 1),
        (2, 1): (0, 3),
        (1, 2): (3, 0),
        (3, 0): (1, 2),
        (1, 3): (2, 0),
        (2, 0): (1, 3),
        (0, 1): (1, 0),
        (1, 0): (0, 1),
        (2, 3): (3, 2),
        (3, 2): (2, 3),
    }
    return SolutionMap.from_pairs(4, moves)


def n6_noninvolutive() -> SolutionMap:
    """Six generators, braided and square-free but r has order 4.

    The map swaps the commuting words and cycles the remaining off-diagonal
    words in four 4-cycles.  Left and right actions are genuinely different
    here: L_{x1} = (x3 x4)(x5 x6) while R_{x1} = (x3 x6)(x4 x5).
    """
    swaps = [(0, 1), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]
    moves: dict[tuple[int, int], tuple[int, int]] = {}
    for i, j in swaps:
        moves[(i, j)] = (j, i)
        moves[(j, i)] = (i, j)
    four_cycles = [
        [(0, 2), (3, 1), (0, 4), (5, 1)],
        [(0, 3), (2, 1), (0, 5), (4, 1)],
        [(1, 2), (3, 0), (1, 4), (5, 0)],
        [(1, 3), (2, 0), (1, 5), (4, 0)],
    ]
    for cyc in four_cycles:
        for a, b in zip(cyc, cyc[1:] + [cyc[0]]):
            moves[a] = b
    return SolutionMap.from_pairs(6, moves)


# Relation list for the 11-generator sample: each entry (a, b, c, d) says the
# words ab and cd are equal in the semigroup, i.e. r maps ab <-> cd.  Pairs
# of digit generators commute and are not listed here.
GEN11_RELATIONS = [
    ("1", "a", "a", "2"),
    ("2", "a", "a", "1"),
    ("2", "b", "b", "3"),
    ("3", "b", "b", "2"),
    ("3", "a", "a", "4"),
    ("4", "a", "a", "3"),
    ("4", "c", "c", "1"),
    ("1", "c", "c", "4"),
    ("5", "a", "a", "6"),
    ("6", "a", "a", "5"),
    ("6", "b", "b", "7"),
    ("7", "b", "b", "6"),
    ("7", "a", "a", "8"),
    ("8", "a", "a", "7"),
    ("8", "c", "c", "5"),
    ("5", "c", "c", "8"),
    ("1", "b", "b", "5"),
    ("5", "b", "b", "1"),
    ("2", "c", "c", "6"),
    ("6", "c", "c", "2"),
    ("3", "c", "c", "7"),
    ("7", "c", "c", "3"),
    ("4", "b", "b", "8"),
    ("8", "b", "b", "4"),
    ("a", "b", "c", "a"),
    ("a", "c", "b", "a"),
    ("b", "c", "c", "b"),
]

GEN11_NAMES = ("1", "2", "3", "4", "5", "6", "7", "8", "a", "b", "c")


def gen11() -> SolutionMap:
    """Eleven generators: eight commuting 'digit' generators moved around by
    three letter generators a, b, c.  Built from its relation list."""
    names = GEN11_NAMES
    idx = {nm: i for i, nm in enumerate(names)}
    moves: dict[tuple[int, int], tuple[int, int]] = {}
    for a, b, c, d in GEN11_RELATIONS:
        u = (idx[a], idx[b])
        w = (idx[c], idx[d])
        moves[u] = w
        moves[w] = u
    for i in range(8):
        for j in range(8):
            if i != j:
                moves[(i, j)] = (j, i)
    return SolutionMap.from_pairs(11, moves, names)


def n10_sylow() -> SolutionMap:
    """Ten generators x1..x6, y1..y4 driven by sigma = (x1..x6)(y1..y4).

    Cross pairs exchange through sigma; x-pairs through sigma^3 unless the
    indices agree mod 3 (then they commute); y-pairs through sigma^2 unless
    the indices agree mod 2.  Cycle lengths 6, 4, 2 give M = 12 = 2^2 * 3.
    """
    n = 10
    names = tuple(f"x{i + 1}" for i in range(6)) + tuple(f"y{j + 1}" for j in range(4))

    def x(i):  # x_i with i mod 6
        return i % 6

    def y(j):  # y_j sits at offset 6, j mod 4
        return 6 + (j % 4)

    moves: dict[tuple[int, int], tuple[int, int]] = {}
    for i in range(6):
        for k in range(6):
            if i == k:
                continue
            if i % 3 == k % 3:
                moves[(x(i), x(k))] = (x(k), x(i))
            else:
                moves[(x(i), x(k))] = (x(k + 3), x(i + 3))
    for j in range(4):
        for k in range(4):
            if j == k:
                continue
            if j % 2 == k % 2:
                moves[(y(j), y(k))] = (y(k), y(j))
            else:
                moves[(y(j), y(k))] = (y(k + 2), y(j + 2))
    for i in range(6):
        for j in range(4):
            moves[(x(i), y(j))] = (y(j + 1), x(i - 1))
            moves[(y(j), x(i))] = (x(i + 1), y(j - 1))
    return SolutionMap.from_pairs(n, moves, names)


def n10_level3() -> SolutionMap:
    """Ten generators assembled from left actions; multipermutation level 3.

    Element order: x, x1, xi, xi1, t, t1, eta, eta1, y, y1 (0..9).  The
    (t1 eta) factor in L_y is forced: braiding requires conjugation by L_y
    to carry the t-block action of the x-block onto that of the xi-block,
    and without it the triple (x, t, y) violates the braid relation.
    """
    n = 10
    names = ("x", "x1", "xi", "xi1", "t", "t1", "eta", "eta1", "y", "y1")
    lx = from_cycles(n, [(4, 5), (6, 7), (8, 9)])
    lxi = from_cycles(n, [(4, 6), (5, 7), (8, 9)])
    ly = from_cycles(n, [(0, 2), (1, 3), (5, 6)])
    L = [lx, lx, lxi, lxi, identity(n), identity(n), identity(n), identity(n), ly, ly]
    return build_from_left_actions(L, names)


def sample_registry() -> dict[str, SolutionMap]:
    """Name -> builder output for every shipped sample."""
    return {
        "n1": trivial_solution(1),
        "n2-trivial": trivial_solution(2),
        "n3": n3_cyclic(),
        "n4": n4_sigma(),
        "n6-noninv": n6_noninvolutive(),
        "gen11": gen11(),
        "n10-sylow": n10_sylow(),
        "n10-level3": n10_level3(),
    }
