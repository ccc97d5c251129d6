"""Binomial solutions of the linear YBE over exact rationals.

A binomial map sends the basis pair x_a (x) x_b to c[(a,b)] times the
basis pair r(a,b).  Scalars are Fractions throughout; nothing is ever
cleared approximately.  The point of the module is the equivalence
between the braid equation for the lifted map and coefficient-aware
Groebner consistency of the matching presentation, checked through two
independent code paths.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import YbeError
from .rewriting import GroebnerReport, Presentation, check_groebner
from .solutions import SolutionMap

__all__ = [
    "BinomialLinearMap",
    "coefficient_one",
    "from_presentation",
    "presentation_with_coefficients",
    "check_linear_ybe",
    "QybeReport",
    "check_qybe_unitarity",
    "coeff_groebner_check",
    "RoundtripReport",
    "skew_lemma_roundtrip",
    "q_uniform_lift",
    "random_lift",
    "COEFF_PALETTE",
]

ONE = Fraction(1)

COEFF_PALETTE = (
    Fraction(2), Fraction(3), Fraction(-1), Fraction(1, 2),
    Fraction(-1, 3), Fraction(5), Fraction(2, 3), Fraction(-2),
)


class BinomialLinearMap:
    """R(x_a (x) x_b) = c[(a,b)] * x_u (x) x_v with (u, v) = r(a, b).

    Construction enforces exactness and the two structural constraints:
    fixed pairs carry coefficient 1, and the image pair carries the
    reciprocal, c[r(a,b)] = 1 / c[(a,b)].
    """

    __slots__ = ("s", "c")

    def __init__(self, s: SolutionMap, coeffs=None):
        self.s = s
        c = {}
        coeffs = coeffs or {}
        for (a, b), v in coeffs.items():
            v = Fraction(v)
            if v == 0:
                raise YbeError(f"zero coefficient on pair ({a}, {b})")
            c[(a, b)] = v
        for a in range(s.n):
            for b in range(s.n):
                c.setdefault((a, b), ONE)
        for a in range(s.n):
            for b in range(s.n):
                u = (a, b)
                if s.r(a, b) == u and c[u] != 1:
                    raise YbeError(
                        f"fixed pair ({s.names[a]}, {s.names[b]}) must carry coefficient 1, "
                        f"got {c[u]}"
                    )
                if c[s.r(a, b)] != 1 / c[u]:
                    raise YbeError(
                        f"reciprocity fails: c{u} = {c[u]} but c{s.r(a, b)} = {c[s.r(a, b)]}"
                    )
        self.c = c

    def apply(self, pair):
        """One application: (scalar, image pair)."""
        return self.c[pair], self.s.r(*pair)

    def coefficient(self, a, b) -> Fraction:
        return self.c[(a, b)]


def coefficient_one(s: SolutionMap) -> BinomialLinearMap:
    return BinomialLinearMap(s, {})


def from_presentation(p: Presentation) -> BinomialLinearMap:
    """Lift a binomial presentation to the pair space (rank coordinates).
    Rule coefficients sit on the oriented pairs, reciprocals on their
    mirrors."""
    from .rewriting import solution_from_presentation

    s = solution_from_presentation(p)
    coeffs = {}
    for (a, b), ((cc, d), coeff) in p.rules.items():
        coeffs[(a, b)] = coeff
        coeffs[(cc, d)] = 1 / coeff
    return BinomialLinearMap(s, coeffs)


def _element_names(p: Presentation):
    names = [None] * p.n
    for rank, e in enumerate(p.order):
        names[e] = p.names[rank]
    return tuple(names)


def presentation_with_coefficients(p: Presentation, changes: dict) -> Presentation:
    """Copy of p with some rule coefficients replaced.  Keys of changes
    are rule left-hand sides in rank coordinates."""
    unknown = set(changes) - set(p.rules)
    if unknown:
        raise YbeError(f"no rule with left-hand side {sorted(unknown)}")
    rules = {}
    for lhs, (target, coeff) in p.rules.items():
        rules[lhs] = (target, Fraction(changes.get(lhs, coeff)))
    return Presentation(p.n, rules, order=p.order, names=_element_names(p))


# ---------------------------------------------------------------------------
# the braid-form linear YBE

def _apply12(R: BinomialLinearMap, state):
    coeff, (a, b, c) = state
    s, (u, v) = R.apply((a, b))
    return coeff * s, (u, v, c)


def _apply23(R: BinomialLinearMap, state):
    coeff, (a, b, c) = state
    s, (u, v) = R.apply((b, c))
    return coeff * s, (a, u, v)


def check_linear_ybe(R: BinomialLinearMap) -> dict:
    """Both sides of (R (x) id)(id (x) R)(R (x) id) = (id (x) R)(R (x) id)(id (x) R)
    on every basis triple; scalars compared exactly."""
    n = R.s.n
    for a in range(n):
        for b in range(n):
            for c in range(n):
                start = (ONE, (a, b, c))
                lhs = _apply12(R, _apply23(R, _apply12(R, start)))
                rhs = _apply23(R, _apply12(R, _apply23(R, start)))
                if lhs != rhs:
                    return {
                        "ok": False,
                        "witness": {
                            "triple": (a, b, c),
                            "lhs": lhs,
                            "rhs": rhs,
                        },
                    }
    return {"ok": True, "witness": None}


# ---------------------------------------------------------------------------
# QYBE form and unitarity

def _flip_apply(R: BinomialLinearMap, pair):
    """R' = flip after R, as one step on a basis pair."""
    s, (u, v) = R.apply(pair)
    return s, (v, u)


@dataclass
class QybeReport:
    qybe: bool
    unitary: bool
    qybe_witness: tuple | None = None
    unitarity_witness: tuple | None = None

    def as_dict(self) -> dict:
        return {
            "qybe": self.qybe,
            "unitary": self.unitary,
            "qybe_witness": self.qybe_witness,
            "unitarity_witness": self.unitarity_witness,
        }


def check_qybe_unitarity(R: BinomialLinearMap) -> QybeReport:
    """R' = flip o R checked against R'12 R'13 R'23 = R'23 R'13 R'12 on
    all basis triples, and against the unitarity condition R'21 R' = 1
    on all basis pairs."""
    n = R.s.n

    def act(pos, state):
        coeff, t = state
        i, j = pos
        s, (u, v) = _flip_apply(R, (t[i], t[j]))
        out = list(t)
        out[i], out[j] = u, v
        return coeff * s, tuple(out)

    qybe = True
    qybe_wit = None
    for a in range(n):
        for b in range(n):
            for c in range(n):
                start = (ONE, (a, b, c))
                lhs = act((0, 1), act((0, 2), act((1, 2), start)))
                rhs = act((1, 2), act((0, 2), act((0, 1), start)))
                if lhs != rhs:
                    qybe = False
                    qybe_wit = ((a, b, c), lhs, rhs)
                    break
            if not qybe:
                break
        if not qybe:
            break

    unitary = True
    uni_wit = None
    for a in range(n):
        for b in range(n):
            coeff, pair = _flip_apply(R, (a, b))
            # R'21 = flip o R' o flip
            s2, (u, v) = _flip_apply(R, (pair[1], pair[0]))
            coeff2, final = coeff * s2, (v, u)
            if final != (a, b) or coeff2 != 1:
                unitary = False
                uni_wit = ((a, b), coeff2, final)
                break
        if not unitary:
            break

    return QybeReport(qybe, unitary, qybe_wit, uni_wit)


# ---------------------------------------------------------------------------
# Groebner side and the equivalence

def coeff_groebner_check(p: Presentation) -> dict:
    """Overlap resolution with scalar tracking, plus the skew shape gate."""
    if not p.skew:
        raise YbeError(f"presentation is not of skew type: {p.skew_defect}")
    rep: GroebnerReport = check_groebner(p)
    failing = rep.failures[0] if rep.failures else None
    return {
        "ok": rep.ok,
        "failing_overlap": failing,
        "alpha_table": dict(rep.alpha),
        "overlaps": rep.overlaps,
    }


@dataclass
class RoundtripReport:
    ybe_ok: bool
    groebner_ok: bool
    agree: bool
    ybe_witness: dict | None = None
    groebner_failure: tuple | None = None
    alpha_table: dict = field(default_factory=dict)

    def describe(self) -> str:
        tag = "agree" if self.agree else "DISAGREE"
        return f"linear YBE {self.ybe_ok} / Groebner {self.groebner_ok} ({tag})"


def skew_lemma_roundtrip(p: Presentation) -> RoundtripReport:
    """The two predicates of the equivalence, computed independently:
    the braid-form YBE for the lifted map, and scalar-exact overlap
    resolution for the presentation.  Disagreement is reported with both
    traces, never patched over."""
    R = from_presentation(p)
    ybe = check_linear_ybe(R)
    gb = coeff_groebner_check(p)
    return RoundtripReport(
        ybe_ok=ybe["ok"],
        groebner_ok=gb["ok"],
        agree=ybe["ok"] == gb["ok"],
        ybe_witness=ybe["witness"],
        groebner_failure=gb["failing_overlap"],
        alpha_table=gb["alpha_table"],
    )


def q_uniform_lift(p: Presentation, q) -> Presentation:
    """Every rule coefficient replaced by the same scalar q."""
    q = Fraction(q)
    if q == 0:
        raise YbeError("q must be nonzero")
    return presentation_with_coefficients(p, {lhs: q for lhs in p.rules})


def random_lift(p: Presentation, rng: random.Random, palette=COEFF_PALETTE) -> Presentation:
    """Independent palette draws on every rule; reciprocals follow when
    the presentation is lifted to the pair space."""
    return presentation_with_coefficients(
        p, {lhs: rng.choice(palette) for lhs in p.rules}
    )
