"""Left and right actions, cyclic conditions, and power identities.

For r(x, y) = (L_x(y), R_y(x)) this module tabulates the permutations L_x
and R_x, their orders M_x, and M = lcm(M_x).  The cyclic conditions are
checked literally against their grid of defining equalities: given a base
pair (y, x) the cycle of x under L_y and the cycle of y (under L_x in the
strong form, under R_x^-1 in the weak form) must satisfy

    r(y_j x_i) = x_{i+1} y_{j-1}     (weak and strong)
    r(x_i y_j) = y_{j+1} x_{i-1}     (strong only)

with indices cyclic.  Power identities relate high powers of generators
through normal forms and need a certified Groebner presentation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

from .errors import CyclicConditionError, DegenerateError, NotASolutionError
from .perms import cycle_string, inverse, orbit, perm_order
from .solutions import (
    SolutionMap,
    classify,
    left_action_tables,
    right_action_tables,
)

__all__ = [
    "ActionTable",
    "CyclePair",
    "compute_actions",
    "cycle_pair",
    "check_cyclic_conditions",
    "CyclicReport",
    "verify_power_identities",
    "PowerIdentityReport",
    "left_orbits",
]


def left_orbits(s: SolutionMap) -> tuple[tuple[int, ...], ...]:
    """Orbits of X under the group generated by all left actions, each orbit
    sorted, orbits ordered by least element."""
    Ls = left_action_tables(s)
    seen = [False] * s.n
    orbs = []
    for start in range(s.n):
        if seen[start]:
            continue
        block = {start}
        queue = [start]
        while queue:
            z = queue.pop()
            for p in Ls:
                w = p[z]
                if w not in block:
                    block.add(w)
                    queue.append(w)
        for z in block:
            seen[z] = True
        orbs.append(tuple(sorted(block)))
    return tuple(orbs)


@dataclass(frozen=True)
class ActionTable:
    n: int
    L: tuple[tuple[int, ...], ...]
    R: tuple[tuple[int, ...], ...]
    Mx: tuple[int, ...]
    M: int
    names: tuple[str, ...]

    def describe(self) -> list[str]:
        out = []
        for x in range(self.n):
            out.append(
                f"{self.names[x]}: L = {cycle_string(self.L[x], self.names)}, "
                f"R = {cycle_string(self.R[x], self.names)}, M_x = {self.Mx[x]}"
            )
        out.append(f"M = {self.M}")
        return out


def compute_actions(s: SolutionMap) -> ActionTable:
    """Tabulate L_x, R_x, M_x and M; raises DegenerateError naming the first
    element whose action is not a bijection."""
    Ls = left_action_tables(s)
    Rs = right_action_tables(s)
    for x, row in enumerate(Ls):
        if sorted(row) != list(range(s.n)):
            raise DegenerateError(
                f"left action of {s.names[x]} is not a bijection: images {row}"
            )
    for y, row in enumerate(Rs):
        if sorted(row) != list(range(s.n)):
            raise DegenerateError(
                f"right action of {s.names[y]} is not a bijection: images {row}"
            )
    Mx = tuple(perm_order(p) for p in Ls)
    return ActionTable(
        n=s.n,
        L=tuple(Ls),
        R=tuple(Rs),
        Mx=Mx,
        M=lcm(*Mx),
        names=s.names,
    )


@dataclass(frozen=True)
class CyclePair:
    """The two cycles attached to a base pair (y, x), strong form.

    x_cycle is the cycle of x under L_y, y_cycle the cycle of y under L_x,
    each starting at its base element.  Valid instances have disjoint
    cycles and satisfy all len(x_cycle) * len(y_cycle) grid equalities in
    both families.
    """

    y: int
    x: int
    x_cycle: tuple[int, ...]
    y_cycle: tuple[int, ...]


def cycle_pair(s: SolutionMap, y: int, x: int, actions: ActionTable | None = None) -> CyclePair:
    """Build and validate the strong-form cycle pair at base (y, x).

    Preconditions: x != y and s is square-free involutive non-degenerate.
    Raises CyclicConditionError carrying the first failing grid equality.
    """
    if x == y:
        raise ValueError("cycle_pair needs two distinct elements")
    acts = actions if actions is not None else compute_actions(s)
    xc = orbit(acts.L[y], x)
    yc = orbit(acts.L[x], y)
    if set(xc) & set(yc):
        raise CyclicConditionError(
            f"cycles at base ({s.names[y]}, {s.names[x]}) are not disjoint: "
            f"{[s.names[e] for e in xc]} meets {[s.names[e] for e in yc]}"
        )
    m, k = len(xc), len(yc)
    for i in range(m):
        for j in range(k):
            got = s.r(yc[j], xc[i])
            want = (xc[(i + 1) % m], yc[(j - 1) % k])
            if got != want:
                raise CyclicConditionError(
                    f"grid equality r({s.names[yc[j]]} {s.names[xc[i]]}) = "
                    f"{s.names[want[0]]} {s.names[want[1]]} fails; image is "
                    f"({s.names[got[0]]}, {s.names[got[1]]})"
                )
            got = s.r(xc[i], yc[j])
            want = (yc[(j + 1) % k], xc[(i - 1) % m])
            if got != want:
                raise CyclicConditionError(
                    f"grid equality r({s.names[xc[i]]} {s.names[yc[j]]}) = "
                    f"{s.names[want[0]]} {s.names[want[1]]} fails; image is "
                    f"({s.names[got[0]]}, {s.names[got[1]]})"
                )
    return CyclePair(y=y, x=x, x_cycle=xc, y_cycle=yc)


@dataclass
class CyclicReport:
    weak: bool
    strong: bool
    weak_witness: tuple | None = None
    strong_witness: tuple | None = None

    def as_dict(self) -> dict:
        return {
            "weak": self.weak,
            "strong": self.strong,
            "weak_witness": self.weak_witness,
            "strong_witness": self.strong_witness,
        }


def check_cyclic_conditions(s: SolutionMap, actions: ActionTable | None = None) -> CyclicReport:
    """Decide the weak and strong cyclic conditions over every base pair.

    The weak form pairs the cycle of x under L_y with the cycle of y under
    R_x^-1 and checks only the first grid family; the strong form uses L_x
    for the y-cycle, requires disjointness, and checks both families.
    Witnesses are (y, x, detail) for the first failure.
    """
    rep = classify(s)
    if not (rep.braided and rep.nondegenerate and rep.square_free):
        raise NotASolutionError(
            "cyclic conditions are defined for square-free non-degenerate "
            "braided maps; got "
            f"braided={rep.braided}, nondegenerate={rep.nondegenerate}, "
            f"square_free={rep.square_free}"
        )
    acts = actions if actions is not None else compute_actions(s)
    n = s.n

    weak = True
    weak_witness = None
    for y in range(n):
        for x in range(n):
            if x == y:
                continue
            xc = orbit(acts.L[y], x)
            yc = orbit(inverse(acts.R[x]), y)
            m, k = len(xc), len(yc)
            for i in range(m):
                for j in range(k):
                    got = s.r(yc[j], xc[i])
                    want = (xc[(i + 1) % m], yc[(j - 1) % k])
                    if got != want:
                        weak = False
                        weak_witness = (y, x, yc[j], xc[i], got, want)
                        break
                if not weak:
                    break
            if not weak:
                break
        if not weak:
            break

    strong = True
    strong_witness = None
    for y in range(n):
        for x in range(n):
            if x == y:
                continue
            try:
                cycle_pair(s, y, x, acts)
            except CyclicConditionError as e:
                strong = False
                strong_witness = (y, x, str(e))
                break
        if not strong:
            break

    return CyclicReport(weak, strong, weak_witness, strong_witness)


@dataclass
class PowerIdentityReport:
    """Checked instances of the four power-identity families.

    Every entry is (description, ok); failures also land in failures.
    """

    M: int
    max_exp: int
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_power_identities(s: SolutionMap, pres, max_exp: int | None = None) -> PowerIdentityReport:
    """Verify, through normal forms in a certified presentation:

    - y^m x = x y_k^m with m the length of the cycle of x under L_y and
      y_k = L_x^-1(y);
    - y^p x^q = (L_y^p x)^q (L_x^-q y)^p for 1 <= p, q <= max_exp;
    - x^(M_x) y = y (L_y^-1 x)^(M_x);
    - x^M y^M = y^M x^M.

    max_exp defaults to M + 1.  The presentation must cover the same
    solution (same element set) and be Groebner-certified.
    """
    from .rewriting import nf_elements

    acts = compute_actions(s)
    M = acts.M
    if max_exp is None:
        max_exp = M + 1
    report = PowerIdentityReport(M=M, max_exp=max_exp)

    def check(tag, left_word, right_word):
        nl = nf_elements(pres, left_word)
        nr = nf_elements(pres, right_word)
        report.checked += 1
        if nl != nr:
            report.failures.append((tag, left_word, right_word, nl, nr))

    n = s.n
    Linv = [inverse(p) for p in acts.L]
    for y in range(n):
        for x in range(n):
            if x == y:
                continue
            m = len(orbit(acts.L[y], x))
            y_k = Linv[x][y]
            check(
                f"msmall y={s.names[y]} x={s.names[x]}",
                [y] * m + [x],
                [x] + [y_k] * m,
            )
            Mx = acts.Mx[x]
            x_m = Linv[y][x]
            check(
                f"Mx x={s.names[x]} y={s.names[y]}",
                [x] * Mx + [y],
                [y] + [x_m] * Mx,
            )
            check(
                f"MM x={s.names[x]} y={s.names[y]}",
                [x] * M + [y] * M,
                [y] * M + [x] * M,
            )
            for p in range(1, max_exp + 1):
                for q in range(1, max_exp + 1):
                    xp = x
                    for _ in range(p):
                        xp = acts.L[y][xp]
                    yq = y
                    for _ in range(q):
                        yq = Linv[x][yq]
                    check(
                        f"pq p={p} q={q} y={s.names[y]} x={s.names[x]}",
                        [y] * p + [x] * q,
                        [xp] * q + [yq] * p,
                    )
    return report
