"""Command line front end: `ybe <command> ...`.

Exit codes: 0 for a clean report, 1 when a checked property fails or a
claimed result is falsified, 2 for usage and parse errors.  Every
command takes --json for machine-readable output under the versioned
report schema.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .actions import check_cyclic_conditions, compute_actions, left_orbits
from .errors import BoundExceededError, NotASolutionError, ParseError, YbeError
from .groups import (
    decomposability_criteria,
    is_solvable,
    permutation_group_L,
    quotient_group,
    sylow_decomposition,
)
from .istructure import get_istructure
from .linear import (
    BinomialLinearMap,
    check_linear_ybe,
    check_qybe_unitarity,
    presentation_with_coefficients,
    skew_lemma_roundtrip,
)
from .retracts import (
    UnionSpec,
    assemble_union,
    audit_retractability,
    is_generalized_twisted_union,
    multipermutation_level,
)
from .rewriting import (
    check_groebner,
    count_normal_monomials,
    expected_monomial_count,
    find_skew_ordering,
    nf_elements,
    relations_of,
)
from .solutions import R_ORDER_BOUND, classify, parse_solution, serialize_solution

REPORT_SCHEMA = "ybe-report/1"
PROG = "ybe"


class CommandResult:
    __slots__ = ("exit_code", "payload")

    def __init__(self, exit_code: int, payload=None):
        self.exit_code = exit_code
        self.payload = payload


def _load(path: str):
    text = Path(path).read_text()
    return parse_solution(text)


def _resolve(s, token: str) -> int:
    """Element tokens are names or 1-based indices."""
    try:
        k = int(token)
    except ValueError:
        return s.index(token)
    if not 1 <= k <= s.n:
        raise ParseError(f"element index {k} out of range 1..{s.n}")
    return k - 1


def _parse_word(s, text: str):
    """Whitespace-separated powers: "x3 x2^2 x1" -> element word."""
    out = []
    for token in text.split():
        if "^" in token:
            base, _, exp = token.partition("^")
            try:
                e = int(exp)
            except ValueError:
                raise ParseError(f"bad exponent in token {token!r}")
            if e < 0:
                raise ParseError(f"negative exponent in token {token!r}")
        else:
            base, e = token, 1
        out.extend([_resolve(s, base)] * e)
    return tuple(out)


def _parse_umonomial(n: int, text: str):
    """Tokens u<k> or u<k>^<e> with 1-based k; returns an exponent vector."""
    exps = [0] * n
    for token in text.split():
        if "^" in token:
            base, _, exp = token.partition("^")
            try:
                e = int(exp)
            except ValueError:
                raise ParseError(f"bad exponent in token {token!r}")
        else:
            base, e = token, 1
        if not base.startswith("u"):
            raise ParseError(f"expected u<k> tokens, got {token!r}")
        try:
            k = int(base[1:])
        except ValueError:
            raise ParseError(f"expected u<k> tokens, got {token!r}")
        if not 1 <= k <= n:
            raise ParseError(f"generator u{k} out of range 1..{n}")
        if e < 0:
            raise ParseError(f"negative exponent in token {token!r}")
        exps[k - 1] += e
    return tuple(exps)


def _exps_word(names, exps) -> str:
    parts = []
    for a, e in enumerate(exps):
        if e == 1:
            parts.append(names[a])
        elif e > 1:
            parts.append(f"{names[a]}^{e}")
    return " ".join(parts) if parts else "1"


def _emit(args, command: str, lines, payload: dict) -> None:
    if getattr(args, "json", False):
        doc = {"schema": REPORT_SCHEMA, "command": command}
        doc.update(payload)
        print(json.dumps(doc, indent=2, default=str))
    else:
        for line in lines:
            print(line)


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


# ---------------------------------------------------------------------------
# commands

def _cmd_verify(args) -> CommandResult:
    s = _load(args.file)
    rep = classify(s, r_order_bound=args.bound)
    lines = [
        f"file: {args.file}",
        f"n = {s.n}, names: {' '.join(s.names)}",
        f"braided              {_yesno(rep.braided)}",
        f"involutive           {_yesno(rep.involutive)}",
        f"left non-degenerate  {_yesno(rep.left_nondegenerate)}",
        f"right non-degenerate {_yesno(rep.right_nondegenerate)}",
        f"square-free          {_yesno(rep.square_free)}",
        f"solution             {_yesno(rep.is_solution)}",
        f"order of r           {rep.r_order if rep.r_order is not None else f'> {args.bound}'}",
    ]
    if not rep.braided and rep.witnesses.get("braided"):
        lines.append(f"braid witness: {rep.witnesses['braided']}")
    payload = {"file": args.file, "report": rep.as_dict()}
    _emit(args, "verify", lines, payload)
    return CommandResult(0 if rep.braided else 1, payload)


def _cmd_analyze(args) -> CommandResult:
    s = _load(args.file)
    rep = classify(s, r_order_bound=args.bound)
    acts = compute_actions(s)
    orbs = left_orbits(s)
    lines = [f"file: {args.file}", f"n = {s.n}"]
    lines += acts.describe()
    lines.append(
        "left orbits: " + "  ".join("{" + " ".join(s.names[x] for x in o) + "}" for o in orbs)
    )
    payload = {
        "file": args.file,
        "report": rep.as_dict(),
        "M": acts.M,
        "Mx": list(acts.Mx),
        "orbits": [[s.names[x] for x in o] for o in orbs],
    }

    if rep.braided and rep.nondegenerate and rep.square_free:
        cyc = check_cyclic_conditions(s)
        lines.append(f"cyclic condition: weak {_yesno(cyc.weak)}, strong {_yesno(cyc.strong)}")
        payload["cyclic"] = cyc.as_dict()
    if rep.is_solution and rep.square_free:
        mpl = multipermutation_level(s)
        lines.append(mpl.describe())
        payload["multipermutation"] = {"status": mpl.status, "level": mpl.level,
                                       "tower": mpl.tower_orders}
        dec = decomposability_criteria(s)
        lines.append(
            f"decomposable: {_yesno(dec.decomposable)} "
            f"({dec.orbit_count} orbits; prime criterion "
            f"{dec.prime_criterion or '-'}, cycle criterion {dec.cycle_criterion or '-'})"
        )
        payload["decomposability"] = dec.as_dict()
        search = find_skew_ordering(s)
        if search.ok:
            names = [s.names[e] for e in search.ordering]
            lines.append("skew ordering: " + " < ".join(names))
            payload["ordering"] = names
        else:
            lines.append("skew ordering: none found")
            payload["ordering"] = None
    _emit(args, "analyze", lines, payload)
    return CommandResult(0, payload)


def _cmd_order(args) -> CommandResult:
    s = _load(args.file)
    search = find_skew_ordering(s)
    lines = [search.describe()]
    payload = {
        "file": args.file,
        "ok": search.ok,
        "ordering": [s.names[e] for e in search.ordering] if search.ok else None,
        "tried": search.tried,
    }
    if search.ok:
        lines += ["rules:"] + ["  " + r for r in search.presentation.rule_list()]
        payload["rules"] = search.presentation.rule_list()
    _emit(args, "order", lines, payload)
    return CommandResult(0 if search.ok else 1, payload)


def _certified_presentation(s):
    p = relations_of(s)
    rep = check_groebner(p)
    if rep.ok:
        return p
    search = find_skew_ordering(s)
    if not search.ok:
        raise YbeError("no ordering certifies; normal forms are unavailable")
    return search.presentation


def _cmd_nf(args) -> CommandResult:
    s = _load(args.file)
    p = _certified_presentation(s)
    word = _parse_word(s, args.word)
    exps, coeff = nf_elements(p, word)
    text = _exps_word(s.names, exps)
    if coeff != 1:
        text = f"{coeff} * {text}"
    payload = {"file": args.file, "word": args.word, "normal_form": text,
               "exponents": list(exps), "coefficient": str(coeff)}
    _emit(args, "nf", [text], payload)
    return CommandResult(0, payload)


def _cmd_hilbert(args) -> CommandResult:
    s = _load(args.file)
    p = _certified_presentation(s)
    rows = []
    ok = True
    for d in range(args.maxdeg + 1):
        got = count_normal_monomials(p, d)
        want = expected_monomial_count(s.n, d)
        ok = ok and got == want
        rows.append((d, got, want))
    lines = [f"degree  monomials  C(n+d-1,d)"]
    lines += [f"{d:>6}  {g:>9}  {w:>10}" for d, g, w in rows]
    lines.append("all degrees match" if ok else "MISMATCH against the binomial count")
    payload = {"file": args.file, "rows": [list(r) for r in rows], "match": ok}
    _emit(args, "hilbert", lines, payload)
    return CommandResult(0 if ok else 1, payload)


def _cmd_istructure(args) -> CommandResult:
    s = _load(args.file)
    p = _certified_presentation(s)
    ist = get_istructure(s, p, max_degree=max(args.maxdeg, 2))
    lines = []
    payload = {"file": args.file}
    if args.monomial:
        exps = _parse_umonomial(s.n, args.monomial)
        if sum(exps) > args.maxdeg:
            raise BoundExceededError(
                f"degree {sum(exps)} exceeds --maxdeg {args.maxdeg}"
            )
        vv = ist.v(exps)
        v1v = ist.v1(exps)
        heads = ist.heads(vv)
        tails = ist.tails(vv)
        lines += [
            f"v({args.monomial})  = {_exps_word(s.names, vv)}",
            f"v1({args.monomial}) = {_exps_word(s.names, v1v)}",
            f"heads(v) = {{{' '.join(s.names[h] for h in heads)}}}",
            f"tails(v) = {{{' '.join(s.names[t] for t in tails)}}}",
        ]
        payload.update({
            "monomial": args.monomial,
            "v": list(vv), "v1": list(v1v),
            "heads": [s.names[h] for h in heads],
            "tails": [s.names[t] for t in tails],
        })
    else:
        per_degree = []
        for d in range(args.maxdeg + 1):
            want = expected_monomial_count(s.n, d)
            layer = ist.layer(d)
            per_degree.append((d, len(layer), want))
        lines += [f"degree {d}: v covers {got}/{want} monomials"
                  for d, got, want in per_degree]
        bij = all(got == want for _, got, want in per_degree)
        lines.append("v bijective per degree" if bij else "BIJECTIVITY FAILS")
        payload["per_degree"] = [list(r) for r in per_degree]
        payload["bijective"] = bij
    _emit(args, "istructure", lines, payload)
    return CommandResult(0, payload)


def _cmd_group(args) -> CommandResult:
    s = _load(args.file)
    acts = compute_actions(s)
    G = permutation_group_L(s)
    solvable, series = is_solvable(G)
    lines = [
        f"M = {acts.M} (per-generator orders {' '.join(map(str, acts.Mx))})",
        f"G_L order {G.order}, solvable: {_yesno(solvable)} "
        f"(derived series {' -> '.join(map(str, series))})",
    ]
    payload = {
        "file": args.file, "M": acts.M, "G_L_order": G.order,
        "solvable": solvable, "derived_series": series,
    }

    quotient_info = None
    try:
        p = _certified_presentation(s)
        Q = quotient_group(s, p)
        val = Q.validate(seed=args.seed)
        powers_ok = all(
            Q.canonical([acts.M if i == a else 0 for i in range(s.n)]) == Q.identity
            for a in range(s.n)
        )
        hist: dict = {}
        for g in Q.elements:
            hist[Q.element_order(g)] = hist.get(Q.element_order(g), 0) + 1
        quotient_info = {
            "order": Q.order, "expected": acts.M ** s.n,
            "validation": val, "powers_to_identity": powers_ok,
            "element_orders": {str(k): v for k, v in sorted(hist.items())},
        }
        lines += [
            f"quotient order {Q.order} (M^n = {acts.M ** s.n}), "
            f"axioms checked: {val['associativity']}",
            f"x_i^M -> identity: {_yesno(powers_ok)}",
            "element order histogram: "
            + "  ".join(f"{k}:{v}" for k, v in sorted(hist.items())),
        ]
    except BoundExceededError as e:
        lines.append(f"quotient skipped: {e}")
    except YbeError as e:
        lines.append(f"quotient unavailable: {e}")
    payload["quotient"] = quotient_info

    try:
        p_for_sylow = _certified_presentation(s)
    except YbeError:
        p_for_sylow = None
    syl = sylow_decomposition(s, p_for_sylow)
    piece_txt = "  ".join(
        f"p={pc.prime}: order {pc.order}" + (" (normal)" if pc.normal else "")
        for pc in syl.pieces
    ) or "none (M = 1)"
    lines += [
        f"sylow level: {syl.level}; pieces: {piece_txt}",
        f"pieces commute: {_yesno(syl.pairwise_commute)}; "
        f"product covers: {_yesno(syl.covers)}",
    ]
    payload["sylow"] = syl.as_dict()
    _emit(args, "group", lines, payload)

    bad = quotient_info is not None and not quotient_info["powers_to_identity"]
    return CommandResult(1 if bad else 0, payload)


def _cmd_retract(args) -> CommandResult:
    s = _load(args.file)
    rep = multipermutation_level(s)
    lines = [rep.describe()]
    for k, step in enumerate(rep.steps, start=1):
        parent = s if k == 1 else rep.steps[k - 2].solution
        classes = "  ".join(
            "{" + " ".join(parent.names[x] for x in c) + "}" for c in step.classes
        )
        lines.append(f"step {k}: {classes}")
    payload = {
        "file": args.file, "status": rep.status, "level": rep.level,
        "tower": rep.tower_orders,
    }
    _emit(args, "retract", lines, payload)
    return CommandResult(0, payload)


def _parse_crossfile(text: str, sx, sy):
    r_xy: dict = {}
    r_yx: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 6 or parts[3] != "->":
            raise ParseError(
                f"line {lineno}: expected 'xmap x y -> y' x'' or "
                f"'ymap y x -> x' y'', got {raw!r}"
            )
        kind, a, b, _, c, d = parts
        if kind == "xmap":
            key = (_resolve(sx, a), _resolve(sy, b))
            val = (_resolve(sy, c), _resolve(sx, d))
            if key in r_xy and r_xy[key] != val:
                raise ParseError(f"line {lineno}: conflicting xmap entry for {a} {b}")
            r_xy[key] = val
        elif kind == "ymap":
            key = (_resolve(sy, a), _resolve(sx, b))
            val = (_resolve(sx, c), _resolve(sy, d))
            if key in r_yx and r_yx[key] != val:
                raise ParseError(f"line {lineno}: conflicting ymap entry for {a} {b}")
            r_yx[key] = val
        else:
            raise ParseError(f"line {lineno}: unknown directive {kind!r}")
    if r_xy and not r_yx:
        # involutive convenience: the reverse crossing is the inverse map
        if len(r_xy) == sx.n * sy.n and len(set(r_xy.values())) == len(r_xy):
            r_yx = {v: k for k, v in r_xy.items()}
    return r_xy, r_yx


def _cmd_union(args) -> CommandResult:
    sx = _load(args.filex)
    sy = _load(args.filey)
    r_xy, r_yx = _parse_crossfile(Path(args.crossfile).read_text(), sx, sy)
    try:
        spec = UnionSpec(sx, sy, r_xy, r_yx)
    except YbeError as e:
        raise ParseError(str(e))
    z, rep = assemble_union(spec)
    lines = [
        f"assembled union on {z.n} elements: {' '.join(z.names)}",
        f"braided    {_yesno(rep.braided)}",
        f"involutive {_yesno(rep.involutive)}",
        f"solution   {_yesno(rep.is_solution)}",
    ]
    payload = {"n": z.n, "report": rep.as_dict()}
    if not rep.braided and rep.witnesses.get("braided"):
        lines.append(f"braid witness: {rep.witnesses['braided']}")
    if rep.is_solution and rep.square_free:
        tw = is_generalized_twisted_union(z, tuple(range(sx.n)), tuple(range(sx.n, z.n)))
        lines.append(
            f"twisted union: {_yesno(tw.twisted)}; generalized: {_yesno(tw.generalized)}"
            f" (formulations agree: {_yesno(tw.formulations_agree)})"
        )
        payload["twisted_union"] = tw.as_dict()
    _emit(args, "union", lines, payload)
    return CommandResult(0 if rep.braided else 1, payload)


def _parse_coeff_lines(text: str, s):
    """The `coef i j -> k l : scalar` extension lines."""
    coeffs: dict = {}
    kept = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped.startswith("coef"):
            kept.append(raw)
            continue
        parts = stripped.split()
        if len(parts) != 8 or parts[3] != "->" or parts[6] != ":":
            raise ParseError(
                f"line {lineno}: expected 'coef i j -> k l : p/q', got {raw!r}"
            )
        a, b = _resolve(s, parts[1]), _resolve(s, parts[2])
        c, d = _resolve(s, parts[4]), _resolve(s, parts[5])
        if s.r(a, b) != (c, d):
            raise ParseError(
                f"line {lineno}: map sends ({parts[1]}, {parts[2]}) to "
                f"{tuple(s.names[t] for t in s.r(a, b))}, not ({parts[4]}, {parts[5]})"
            )
        try:
            value = Fraction(parts[7])
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"line {lineno}: bad scalar {parts[7]!r}")
        if (a, b) in coeffs and coeffs[(a, b)] != value:
            raise ParseError(f"line {lineno}: conflicting coefficient for ({parts[1]}, {parts[2]})")
        coeffs[(a, b)] = value
    # unlisted mates inherit the reciprocal
    for (a, b), v in list(coeffs.items()):
        mate = s.r(a, b)
        if mate not in coeffs:
            coeffs[mate] = 1 / v
        elif coeffs[mate] != 1 / v:
            raise ParseError(
                f"coefficients on ({s.names[a]}, {s.names[b]}) and its image "
                "violate reciprocity"
            )
    return coeffs


def _cmd_linear(args) -> CommandResult:
    text = Path(args.file).read_text()
    body = "\n".join(
        line for line in text.splitlines()
        if not line.split("#", 1)[0].strip().startswith("coef")
    )
    s = parse_solution(body)
    coeffs = _parse_coeff_lines(text, s)
    R = BinomialLinearMap(s, coeffs)
    ybe = check_linear_ybe(R)
    q = check_qybe_unitarity(R)
    lines = [
        f"linear YBE (braid form): {_yesno(ybe['ok'])}",
        f"QYBE: {_yesno(q.qybe)}; unitarity: {_yesno(q.unitary)}",
    ]
    if not ybe["ok"]:
        lines.append(f"witness: {ybe['witness']}")
    if not q.unitary:
        lines.append(f"unitarity witness: {q.unitarity_witness}")
    payload = {"file": args.file, "ybe": ybe["ok"], "qybe": q.qybe,
               "unitary": q.unitary}

    agree = True
    rep = classify(s)
    if rep.symmetric and rep.nondegenerate:
        search = find_skew_ordering(s)
        if search.ok:
            p = search.presentation
            changes = {
                lhs: coeffs[(p.order[lhs[0]], p.order[lhs[1]])]
                for lhs in p.rules
            }
            rt = skew_lemma_roundtrip(presentation_with_coefficients(p, changes))
            agree = rt.agree
            lines.append(
                f"Groebner equivalence: YBE {rt.ybe_ok} / overlaps {rt.groebner_ok} "
                f"({'agree' if rt.agree else 'DISAGREE'})"
            )
            payload["roundtrip"] = {
                "ybe": rt.ybe_ok, "groebner": rt.groebner_ok, "agree": rt.agree,
            }
    _emit(args, "linear", lines, payload)
    return CommandResult(0 if ybe["ok"] and agree else 1, payload)


def _cmd_enumerate(args) -> CommandResult:
    from .enumeration import enumerate_square_free, survey

    entries = enumerate_square_free(args.n, jobs=args.jobs)
    rows = survey(args.n, entries=entries)
    nontriv = sum(1 for e in entries if not e.is_trivial)
    lines = [f"n={args.n}: {len(entries)} classes ({nontriv} nontrivial)"]
    header = f"{'id':<8} {'M':>3} {'orbits':>6} {'level':>5} {'ordering':>8} {'|G_L|':>6} {'pairs':>5}"
    lines.append(header)
    for row in rows:
        lines.append(
            f"{row['id']:<8} {row['M']:>3} {row['orbits']:>6} {row['level']:>5} "
            f"{_yesno(row['ordering_found']):>8} {row['group_order']:>6} "
            f"{row['nontrivial_pairs']:>5}"
        )
    payload = {"n": args.n, "classes": len(entries), "nontrivial": nontriv,
               "survey": rows}
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for row, entry in zip(rows, entries):
            (outdir / f"{row['id']}.ybe").write_text(serialize_solution(entry.solution))
        (outdir / "survey.json").write_text(json.dumps(rows, indent=2))
        lines.append(f"wrote {len(entries)} solution files to {outdir}")
    _emit(args, "enumerate", lines, payload)
    return CommandResult(0, payload)


def _cmd_conjecture(args) -> CommandResult:
    from .enumeration import enumerate_square_free

    lines = []
    rows = []
    all_good = True
    for n in range(1, args.n + 1):
        entries = enumerate_square_free(n, jobs=args.jobs)
        audit = audit_retractability(e.solution for e in entries)
        rows.append({"n": n, **{k: v for k, v in audit.items() if k != "details"}})
        lines.append(f"n={n}: {audit['retractable']}/{audit['total']} retractable")
        if audit["irretractible"]:
            all_good = False
            lines.append(f"  COUNTEREXAMPLE candidates: {audit['details']}")
    lines.append(
        "every enumerated square-free solution is retractable"
        if all_good else
        "counterexamples found; see above (informational, not a failure)"
    )
    _emit(args, "conjecture", lines, {"per_n": rows, "all_retractable": all_good})
    return CommandResult(0, {"per_n": rows, "all_retractable": all_good})


# ---------------------------------------------------------------------------
# argument plumbing

def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog=PROG,
        description="Set-theoretic Yang-Baxter toolkit: verify, rewrite, count, decompose.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, file=True):
        if file:
            p.add_argument("file", help="solution file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--bound", type=int, default=R_ORDER_BOUND,
                       help="cap for the order-of-r search")
        p.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
        p.add_argument("--jobs", type=int, default=1, help="parallel shards where supported")

    p = sub.add_parser("verify", help="classify a solution file")
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("analyze", help="actions, orbits, cyclic conditions, tower")
    common(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("order", help="search for a certified skew ordering")
    common(p)
    p.set_defaults(func=_cmd_order)

    p = sub.add_parser("nf", help="normal form of a word")
    common(p)
    p.add_argument("word", help="e.g. \"x3 x2 x1\" or \"x3^2 x1\"")
    p.set_defaults(func=_cmd_nf)

    p = sub.add_parser("hilbert", help="normal monomial counts per degree")
    common(p)
    p.add_argument("--maxdeg", type=int, default=6)
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("istructure", help="left/right I-structure values")
    common(p)
    p.add_argument("monomial", nargs="?", default=None,
                   help="free abelian monomial, e.g. \"u2^2 u4\"")
    p.add_argument("--maxdeg", type=int, default=4)
    p.set_defaults(func=_cmd_istructure)

    p = sub.add_parser("group", help="G_L, finite quotient, Sylow structure")
    common(p)
    p.set_defaults(func=_cmd_group)

    p = sub.add_parser("retract", help="retraction tower and level")
    common(p)
    p.set_defaults(func=_cmd_retract)

    p = sub.add_parser("union", help="assemble and classify a union")
    p.add_argument("filex")
    p.add_argument("filey")
    p.add_argument("crossfile", help="xmap/ymap cross-action lines")
    p.add_argument("--json", action="store_true")
    p.add_argument("--bound", type=int, default=R_ORDER_BOUND)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_union)

    p = sub.add_parser("linear", help="binomial lift: YBE, QYBE, unitarity")
    common(p)
    p.set_defaults(func=_cmd_linear)

    p = sub.add_parser("enumerate", help="catalog of square-free solutions")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", default=None, help="write one file per class")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("conjecture", help="retractability audit (informational)")
    p.add_argument("-n", type=int, default=4)
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_conjecture)

    return top


def dispatch(argv) -> CommandResult:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return CommandResult(2 if e.code not in (0, None) else 0)
    try:
        return args.func(args)
    except (ParseError, OSError) as e:
        print(f"{PROG}: error: {e}", file=sys.stderr)
        return CommandResult(2)
    except NotASolutionError as e:
        print(f"{PROG}: {e}", file=sys.stderr)
        return CommandResult(1)
    except YbeError as e:
        print(f"{PROG}: FALSIFIED: {e}", file=sys.stderr)
        return CommandResult(1)


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]).exit_code)


if __name__ == "__main__":
    main()
