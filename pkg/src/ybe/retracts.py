"""Retraction tower, multipermutation level, and (generalized) twisted unions.

The retract identifies x with y when L_x = L_y as permutations.  The
induced map on classes is built from representatives and then validated
on every pair of representatives, so an ill-defined induced map raises
instead of silently producing garbage.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .actions import compute_actions
from .errors import YbeError
from .perms import inverse
from .solutions import SolutionMap, classify

__all__ = [
    "RetractStep",
    "retract",
    "MPLReport",
    "multipermutation_level",
    "retract_orbit",
    "UnionSpec",
    "assemble_union",
    "TwistedUnionReport",
    "is_generalized_twisted_union",
    "audit_retractability",
]

MAX_TOWER_STEPS = 20


def _require_square_free_solution(s: SolutionMap, what: str):
    rep = classify(s)
    if not (rep.is_solution and rep.square_free):
        raise YbeError(f"{what} needs a square-free involutive solution")
    return rep


@dataclass
class RetractStep:
    classes: tuple           # tuple of sorted element tuples
    class_of: tuple          # element -> class index
    solution: SolutionMap    # induced solution on the classes

    @property
    def is_identity(self) -> bool:
        return len(self.classes) == len(self.class_of)


def retract(s: SolutionMap) -> RetractStep:
    """One retraction step: collapse equal-L elements."""
    _require_square_free_solution(s, "retract")
    acts = compute_actions(s)

    by_perm: dict = {}
    for x in range(s.n):
        by_perm.setdefault(acts.L[x], []).append(x)
    classes = tuple(tuple(sorted(c)) for c in sorted(by_perm.values(), key=min))
    class_of = [0] * s.n
    for k, c in enumerate(classes):
        for x in c:
            class_of[x] = k
    m = len(classes)

    # induced map from representatives, then the full well-definedness sweep
    table: dict = {}
    for a, ca in enumerate(classes):
        for b, cb in enumerate(classes):
            seen = set()
            for x in ca:
                for y in cb:
                    u, v = s.r(x, y)
                    seen.add((class_of[u], class_of[v]))
            if len(seen) != 1:
                raise YbeError(
                    "retraction is not well defined on classes "
                    f"{ca} x {cb}: images {sorted(seen)}"
                )
            table[(a, b)] = seen.pop()

    names = tuple("[%s]" % s.names[c[0]] for c in classes)
    induced = SolutionMap.from_pairs(m, table, names=names)
    rep = classify(induced)
    if not (rep.is_solution and rep.square_free):
        raise YbeError(
            "induced retraction is not a square-free solution; "
            f"report: {rep.as_dict()}"
        )
    return RetractStep(classes=classes, class_of=tuple(class_of), solution=induced)


@dataclass
class MPLReport:
    status: str                # "level", "irretractible", or "bound"
    level: int | None
    tower_orders: list
    steps: list = field(repr=False, default_factory=list)

    def describe(self) -> str:
        orders = " -> ".join(str(k) for k in self.tower_orders)
        if self.status == "level":
            return f"multipermutation level {self.level} (tower {orders})"
        if self.status == "irretractible":
            return f"irretractible at order {self.tower_orders[-1]} (tower {orders})"
        return f"level not determined within {len(self.tower_orders) - 1} steps (tower {orders})"


def multipermutation_level(s: SolutionMap, max_steps: int = MAX_TOWER_STEPS) -> MPLReport:
    """Iterate the retract until a point, an irretractible floor, or the
    step bound."""
    _require_square_free_solution(s, "multipermutation_level")
    orders = [s.n]
    steps: list[RetractStep] = []
    cur = s
    for _ in range(max_steps):
        if cur.n == 1:
            return MPLReport("level", len(orders) - 1, orders, steps)
        step = retract(cur)
        if step.solution.n == cur.n:
            return MPLReport("irretractible", None, orders, steps)
        steps.append(step)
        cur = step.solution
        orders.append(cur.n)
    if cur.n == 1:
        return MPLReport("level", len(orders) - 1, orders, steps)
    return MPLReport("bound", None, orders, steps)


def retract_orbit(s: SolutionMap, x: int, k: int):
    """The k-th retract orbit of x: everything that lands on the same
    element after k retraction steps.

    Checks the two facts the orbit is supposed to satisfy: it is
    r-invariant, and the restricted solution has multipermutation level
    at most k.  A violation raises, since each is a stated result.
    """
    if not 0 <= x < s.n:
        raise YbeError(f"element index {x} out of range")
    if k < 0:
        raise YbeError("retract orbit depth must be nonnegative")
    if k == 0:
        return (x,)
    rep = multipermutation_level(s)
    if k > len(rep.steps):
        raise YbeError(
            f"depth {k} exceeds the computed tower height {len(rep.steps)}"
        )

    # compose the class maps down to level k
    image = list(range(s.n))
    for step in rep.steps[:k]:
        image = [step.class_of[v] for v in image]
    target = image[x]
    orbit = tuple(xi for xi in range(s.n) if image[xi] == target)

    orbset = set(orbit)
    for a in orbit:
        for b in orbit:
            u, v = s.r(a, b)
            if u not in orbset or v not in orbset:
                raise YbeError(
                    f"retract orbit {orbit} is not r-invariant: "
                    f"r({s.names[a]}, {s.names[b]}) leaves it"
                )

    from .rewriting import restrict_solution

    sub, _ = restrict_solution(s, orbit)
    sub_rep = multipermutation_level(sub)
    if sub_rep.status != "level" or sub_rep.level > k:
        raise YbeError(
            f"restricted solution on {orbit} has level {sub_rep.describe()}, "
            f"expected at most {k}"
        )
    return orbit


# ---------------------------------------------------------------------------
# unions

@dataclass
class UnionSpec:
    """Two solutions plus total cross maps in component-local indices.

    r_xy maps (i, j) with i in X, j in Y to (j', i'); r_yx maps (j, i)
    to (i', j').
    """

    x: SolutionMap
    y: SolutionMap
    r_xy: dict
    r_yx: dict

    def __post_init__(self):
        nx, ny = self.x.n, self.y.n
        for i in range(nx):
            for j in range(ny):
                if (i, j) not in self.r_xy:
                    raise YbeError(
                        f"cross map r_xy is not total: missing ({self.x.names[i]}, {self.y.names[j]})"
                    )
                if (j, i) not in self.r_yx:
                    raise YbeError(
                        f"cross map r_yx is not total: missing ({self.y.names[j]}, {self.x.names[i]})"
                    )
        for (i, j), (jp, ip) in self.r_xy.items():
            if not (0 <= i < nx and 0 <= j < ny and 0 <= jp < ny and 0 <= ip < nx):
                raise YbeError(f"cross map r_xy entry ({i}, {j}) -> ({jp}, {ip}) out of range")
        for (j, i), (ip, jp) in self.r_yx.items():
            if not (0 <= i < nx and 0 <= j < ny and 0 <= jp < ny and 0 <= ip < nx):
                raise YbeError(f"cross map r_yx entry ({j}, {i}) -> ({ip}, {jp}) out of range")


def _union_names(x: SolutionMap, y: SolutionMap):
    xs = list(x.names)
    ys = list(y.names)
    taken = set(xs)
    out = []
    for nm in ys:
        while nm in taken:
            nm = nm + "'"
        taken.add(nm)
        out.append(nm)
    return tuple(xs + out)


def assemble_union(u: UnionSpec):
    """Glue the pieces into a map on the disjoint union and classify it.

    X keeps its indices, Y is shifted up by |X|.  Bijectivity of the
    assembled table is enforced by the SolutionMap constructor.
    """
    nx, ny = u.x.n, u.y.n
    n = nx + ny
    table = {}
    for i in range(nx):
        for j in range(nx):
            table[(i, j)] = u.x.r(i, j)
    for i in range(ny):
        for j in range(ny):
            a, b = u.y.r(i, j)
            table[(nx + i, nx + j)] = (nx + a, nx + b)
    for (i, j), (jp, ip) in u.r_xy.items():
        table[(i, nx + j)] = (nx + jp, ip)
    for (j, i), (ip, jp) in u.r_yx.items():
        table[(nx + j, i)] = (ip, nx + jp)
    z = SolutionMap.from_pairs(n, table, names=_union_names(u.x, u.y))
    return z, classify(z)


def split_union(s: SolutionMap, part_x, part_y) -> UnionSpec:
    """Inverse of assemble_union: view s as a union over a partition.
    Raises when the partition is not r-invariant."""
    part_x = tuple(sorted(part_x))
    part_y = tuple(sorted(part_y))
    if sorted(part_x + part_y) != list(range(s.n)) or set(part_x) & set(part_y):
        raise YbeError("the two parts must partition the ground set")
    from .rewriting import restrict_solution

    sx, back_x = restrict_solution(s, part_x)
    sy, back_y = restrict_solution(s, part_y)
    pos_x = {v: k for k, v in enumerate(part_x)}
    pos_y = {v: k for k, v in enumerate(part_y)}
    r_xy = {}
    r_yx = {}
    for i, gi in enumerate(part_x):
        for j, gj in enumerate(part_y):
            u, v = s.r(gi, gj)
            if u not in pos_y or v not in pos_x:
                raise YbeError(
                    f"partition is not r-invariant: r({s.names[gi]}, {s.names[gj]}) "
                    "does not cross cleanly"
                )
            r_xy[(i, j)] = (pos_y[u], pos_x[v])
            u, v = s.r(gj, gi)
            if u not in pos_x or v not in pos_y:
                raise YbeError(
                    f"partition is not r-invariant: r({s.names[gj]}, {s.names[gi]}) "
                    "does not cross cleanly"
                )
            r_yx[(j, i)] = (pos_x[u], pos_y[v])
    return UnionSpec(sx, sy, r_xy, r_yx)


@dataclass
class TwistedUnionReport:
    twisted: bool
    generalized: bool
    star_generalized: bool
    formulations_agree: bool
    f: tuple | None   # the fixed action of Y on X when twisted
    g: tuple | None   # the fixed action of X on Y when twisted
    witness: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "twisted": self.twisted,
            "generalized": self.generalized,
            "star_generalized": self.star_generalized,
            "formulations_agree": self.formulations_agree,
        }


def _restrict_perm(p, part, pos):
    return tuple(pos[p[v]] for v in part)


def is_generalized_twisted_union(s: SolutionMap, part_x, part_y) -> TwistedUnionReport:
    """Twisted and generalized-twisted predicates for an r-invariant
    2-part partition.

    Twisted means one fixed pair (f, g) drives every cross pair:
    r(x, y) = (g(y), f^-1(x)) and r(y, x) = (f(x), g^-1(y)).

    Generalized is checked in two equivalent formulations and both
    results are reported: the restriction equalities

        L_{x^y}|Y = L_x|Y = L_{^yx}|Y   and   L_{^xy}|X = L_y|X = L_{y^x}|X

    for every cross pair, and the independence condition, where the
    permutation L_{x^y}|Y does not depend on y and L-composed mirror
    R_{^xy}|X does not depend on x.  A disagreement between the two is
    reported, not hidden.
    """
    _require_square_free_solution(s, "is_generalized_twisted_union")
    split_union(s, part_x, part_y)  # validates the partition
    part_x = tuple(sorted(part_x))
    part_y = tuple(sorted(part_y))
    pos_x = {v: k for k, v in enumerate(part_x)}
    pos_y = {v: k for k, v in enumerate(part_y)}
    acts = compute_actions(s)
    L, R = acts.L, acts.R

    witness: dict = {}

    # --- twisted: a single g on Y and a single f on X
    gs = {_restrict_perm(L[x], part_y, pos_y) for x in part_x}
    fs = {_restrict_perm(L[y], part_x, pos_x) for y in part_y}
    twisted = len(gs) == 1 and len(fs) == 1
    f = g = None
    if twisted:
        g = gs.pop()
        f = fs.pop()
        ginv, finv = inverse(g), inverse(f)
        for x in part_x:
            for y in part_y:
                u, v = s.r(x, y)
                ok1 = pos_y[u] == g[pos_y[y]] and pos_x[v] == finv[pos_x[x]]
                u, v = s.r(y, x)
                ok2 = pos_x[u] == f[pos_x[x]] and pos_y[v] == ginv[pos_y[y]]
                if not (ok1 and ok2):
                    twisted = False
                    witness["twisted"] = (s.names[x], s.names[y])
                    break
            if not twisted:
                break
    else:
        witness["twisted"] = "multiple restricted actions"

    # --- generalized, restriction-equality form
    generalized = True
    for x in part_x:
        for y in part_y:
            x_y = R[y][x]        # x^y
            yx = L[y][x]         # ^y x
            lx = _restrict_perm(L[x], part_y, pos_y)
            if not (_restrict_perm(L[x_y], part_y, pos_y) == lx
                    == _restrict_perm(L[yx], part_y, pos_y)):
                generalized = False
                witness["generalized"] = ("L|Y", s.names[x], s.names[y])
                break
            xy = L[x][y]         # ^x y
            y_x = R[x][y]        # y^x
            ly = _restrict_perm(L[y], part_x, pos_x)
            if not (_restrict_perm(L[xy], part_x, pos_x) == ly
                    == _restrict_perm(L[y_x], part_x, pos_x)):
                generalized = False
                witness["generalized"] = ("L|X", s.names[x], s.names[y])
                break
        if not generalized:
            break

    # --- generalized, independence form
    star = True
    for x in part_x:
        images = {_restrict_perm(L[R[y][x]], part_y, pos_y) for y in part_y}
        if len(images) > 1:
            star = False
            witness["star"] = ("x^y action varies", s.names[x])
            break
    if star:
        for y in part_y:
            images = {_restrict_perm(R[L[x][y]], part_x, pos_x) for x in part_x}
            if len(images) > 1:
                star = False
                witness["star"] = ("^xy mirror varies", s.names[y])
                break

    return TwistedUnionReport(
        twisted=twisted,
        generalized=generalized,
        star_generalized=star,
        formulations_agree=generalized == star,
        f=f,
        g=g,
        witness=witness,
    )


def audit_retractability(solutions) -> dict:
    """Count retractable vs irretractible entries.  Reported, never
    asserted: a counterexample here is a result, not a failure."""
    total = 0
    retractable = 0
    stuck = []
    for s in solutions:
        total += 1
        rep = multipermutation_level(s)
        if rep.status == "level":
            retractable += 1
        else:
            stuck.append((s.n, rep.status))
    return {
        "total": total,
        "retractable": retractable,
        "irretractible": len(stuck),
        "details": stuck,
    }
