"""Small permutation helpers.

Permutations on {0, .., n-1} are plain tuples: p[i] is the image of i.
Composition follows function application, so compose(p, q) acts as
"first q, then p".
"""

from __future__ import annotations

from math import lcm

__all__ = [
    "identity",
    "is_permutation",
    "compose",
    "inverse",
    "perm_order",
    "cycles",
    "orbit",
    "from_cycles",
    "cycle_string",
]


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def is_permutation(p) -> bool:
    return sorted(p) == list(range(len(p)))


def compose(p, q) -> tuple[int, ...]:
    """p after q: compose(p, q)[i] == p[q[i]]."""
    return tuple(p[q[i]] for i in range(len(q)))


def inverse(p) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def orbit(p, x: int) -> tuple[int, ...]:
    """The cycle of x under p, listed starting at x."""
    out = [x]
    y = p[x]
    while y != x:
        out.append(y)
        y = p[y]
    return tuple(out)


def cycles(p, include_fixed: bool = False) -> list[tuple[int, ...]]:
    """Disjoint cycle decomposition, each cycle starting at its least point."""
    seen = [False] * len(p)
    out = []
    for x in range(len(p)):
        if seen[x]:
            continue
        cyc = orbit(p, x)
        for y in cyc:
            seen[y] = True
        if len(cyc) > 1 or include_fixed:
            out.append(cyc)
    return out


def perm_order(p) -> int:
    return lcm(*(len(c) for c in cycles(p, include_fixed=True)))


def from_cycles(n: int, cycs) -> tuple[int, ...]:
    """Build a permutation of {0,..,n-1} from disjoint cycles."""
    img = list(range(n))
    for cyc in cycs:
        for a, b in zip(cyc, cyc[1:] + type(cyc)((cyc[0],))):
            if img[a] != a:
                raise ValueError(f"cycles are not disjoint at point {a}")
            img[a] = b
    return tuple(img)


def cycle_string(p, names=None) -> str:
    """Readable cycle form, e.g. (x1 x2)(x5 x6); 'id' for the identity."""
    cycs = cycles(p)
    if not cycs:
        return "id"
    if names is None:
        names = [str(i + 1) for i in range(len(p))]
    return "".join("(" + " ".join(names[i] for i in c) + ")" for c in cycs)
