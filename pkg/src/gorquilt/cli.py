"""Command-line front end.

Exit status: 0 for verified results, 1 for negative verdicts or oracle
mismatches, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import itertools
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Optional, Sequence

from . import bz, hilbert, quilt, reps, rootdatum
from .polyhedral import cone as pc
from .polyhedral.io import format_cone, parse_cone, to_json


class UsageError(Exception):
    pass


def _ints(text: str, flag: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "-", "0-"):
        return ()
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"{flag}: expected comma-separated integers, got {text!r}") from None


def _fractions(text: str, flag: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(v) for v in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{flag}: expected comma-separated rationals, got {text!r}") from None


class Report:
    """Collects human lines and a machine record; prints one or the other."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.lines: list[str] = []
        self.record: dict = {}

    def line(self, text: str = "") -> None:
        self.lines.append(text)

    def emit(self) -> None:
        if self.as_json:
            print(to_json(self.record))
        else:
            for ln in self.lines:
                print(ln)


# --------------------------------------------------------------------------
# rootdatum


def _descriptor(spec: str, adjoint: bool) -> rootdatum.IsogenyDescriptor:
    parts = [p for p in re.split(r"[x*]", spec) if p]
    try:
        types = [rootdatum.SimpleType.parse(p) for p in parts]
    except ValueError:
        if adjoint:
            raise UsageError("--adjoint needs Lie types such as A2 or A1xA1") from None
        try:
            return rootdatum.named_group(spec)
        except ValueError as exc:
            raise UsageError(f"group: {exc}") from None
    return rootdatum.adjoint(*types, name=spec) if adjoint else rootdatum.simply_connected(*types, name=spec)


def _type(text: str) -> rootdatum.SimpleType:
    try:
        return rootdatum.SimpleType.parse(text)
    except ValueError as exc:
        raise UsageError(f"type: {exc}") from None


def cmd_rootdatum(args, rep: Report) -> int:
    if args.action in ("pi1", "predict"):
        d = _descriptor(args.group, args.adjoint)
        pi1 = rootdatum.pi1_derived_group(d)
        rep.record = {"group": args.group, "adjoint": args.adjoint, "pi1": pi1.to_dict()}
        if args.action == "pi1":
            rep.line(str(pi1))
        else:
            pred = rootdatum.predict_properties(d)
            rep.record.update(pred.to_dict())
            rep.line(f"pi1(DG)                    {pi1}")
            for k, v in pred.to_dict().items():
                rep.line(f"{k:<27}{str(v).lower()}")
        return 0
    t = _type(args.type)
    lam = _ints(args.weight, "weight")
    if len(lam) != t.rank or any(v < 0 for v in lam):
        raise UsageError(f"weight: need {t.rank} nonnegative coordinates for {t}")
    if args.action == "dual":
        dual = rootdatum.dual_weight(t, lam)
        rep.record = {"type": str(t), "weight": list(lam), "dual": list(dual), "self_dual": dual == lam}
        rep.line(",".join(map(str, dual)))
    else:
        ok = rootdatum.in_root_lattice(t, lam)
        rep.record = {"type": str(t), "weight": list(lam), "in_root_lattice": ok}
        rep.line(str(ok).lower())
    return 0


# --------------------------------------------------------------------------
# cone


def _load_cone(path: str) -> pc.ConePresentation:
    try:
        with open(path) as fh:
            return parse_cone(fh.read())
    except OSError as exc:
        raise UsageError(f"cone file: {exc}") from None
    except ValueError as exc:
        raise UsageError(f"cone file: {exc}") from None


def _cone_grading(c: pc.ConePresentation, text: Optional[str]) -> tuple:
    if text:
        g = _fractions(text, "--grading")
        if len(g) != c.ambient_dim:
            raise UsageError(f"--grading: need {c.ambient_dim} entries")
        return g
    return (1,) * c.ambient_dim


def _fmt(v) -> str:
    return " ".join(str(x) for x in v)


def cmd_cone(args, rep: Report) -> int:
    c = _load_cone(args.file)
    rep.record = {"cone": format_cone(c), "action": args.action}
    if args.action == "facets":
        fs = pc.facets(c)
        rep.record["facets"] = fs
        for f in fs:
            rep.line(_fmt(f))
    elif args.action == "rays":
        rs = pc.rays(c)
        rep.record["rays"] = rs
        for r in rs:
            rep.line(_fmt(r))
    elif args.action == "hilbertbasis":
        hb = pc.hilbert_basis(c)
        rep.record["hilbert_basis"] = hb
        for h in hb:
            rep.line(_fmt(h))
    elif args.action == "classgroup":
        cl = pc.class_group(c)
        rep.record["class_group"] = cl.to_dict()
        rep.line(str(cl))
    elif args.action == "gorenstein":
        cert = pc.gorenstein_facet_test(c)
        rep.record["certificate"] = cert.to_dict()
        rep.line(f"verdict  {cert.verdict}")
        if cert.omega is not None:
            rep.line(f"omega    {_fmt(cert.omega)}")
        code = 0 if cert.is_gorenstein else 1
        if args.degree is not None:
            grading = _cone_grading(c, args.grading)
            bf = pc.gorenstein_search(c, grading, args.degree)
            rep.record["bruteforce"] = bf.to_certificate().to_dict()
            rep.line(f"brute force to degree {args.degree}: {'gorenstein' if bf.confirmed else 'not_gorenstein'}")
            if bf.confirmed != cert.is_gorenstein:
                rep.line("MISMATCH between facet test and brute force")
                code = 1
        return code
    elif args.action == "series":
        grading = _cone_grading(c, args.grading)
        h = hilbert.hilbert_series(c, grading)
        w = hilbert.stanley_symmetry(h, pc.dimension(c))
        rep.record.update({"series": h.to_dict(), "symmetry_exponent": w})
        rep.line(str(h))
        rep.line(f"symmetry exponent: {w if w is not None else 'none'}")
    return 0


# --------------------------------------------------------------------------
# bz


def _weight(text: str, m: int, flag: str) -> tuple[int, ...]:
    w = _ints(text, flag)
    if len(w) != m - 1:
        raise UsageError(f"{flag}: need {m - 1} coordinates for m={m}")
    return w


def cmd_bz(args, rep: Report) -> int:
    m = args.m
    if m < 2:
        raise UsageError("m: must be at least 2")
    if args.action == "count":
        lam, mu, nu = (_weight(w, m, n) for w, n in zip(args.weights, ("lambda", "mu", "nu")))
        n = bz.count_fiber(m, lam, mu, nu)
        rep.record = {"m": m, "weights": [lam, mu, nu], "count": n}
        rep.line(str(n))
        if args.check:
            ref = reps.triple_invariant_dim(m, lam, mu, nu)
            rep.record["oracle"] = ref
            if ref != n:
                rep.line(f"MISMATCH: oracle gives {ref}")
                return 1
        return 0
    if args.action == "omega":
        w = bz.omega_bz(m)
        p = bz.pi3(m, w)
        rep.record = {"m": m, "omega": w, "pi3": p}
        rep.line(bz.format_point(m, w))
        rep.line("pi3: " + " | ".join(",".join(map(str, x)) for x in p))
        return 0
    cert = bz.bz_gorenstein(m, check_degree=args.degree)
    rep.record = {"m": m, "certificate": cert.to_dict()}
    rep.line(f"verdict  {cert.verdict}")
    rep.line(f"omega    all ones ({len(cert.omega)} entries)")
    rep.line(f"brute force checked to degree {cert.checked_degree_bound}")
    return 0 if cert.is_gorenstein else 1


# --------------------------------------------------------------------------
# quilt


def _spec(args) -> quilt.QuiltSpec:
    try:
        g = quilt.load_graph(args.graph)
    except (OSError, ValueError) as exc:
        raise UsageError(f"--graph: {exc}") from None
    lat = args.lattice
    if lat not in quilt.LATTICES and not lat.isdigit():
        raise UsageError("--lattice: expected sl, psl or a divisor of m")
    try:
        return quilt.quilt_cone(g, args.m, lat)
    except ValueError as exc:
        raise UsageError(f"--lattice: {exc}") from None


def cmd_quilt(args, rep: Report) -> int:
    spec = _spec(args)
    c = spec.compiled
    rep.record = {"graph": spec.graph.hash, "m": spec.m, "lattice": spec.lattice_name}
    if args.action == "compile":
        proj, emb = pc.span_project(c)
        rep.record.update({
            "ambient_dim": c.ambient_dim,
            "equations": len(c.equations),
            "dimension": pc.dimension(c),
            "trinodes": len(spec.forest.trinodes),
            "projected": format_cone(proj),
            "pivots": list(emb.pivots),
        })
        rep.line(f"trinodes {len(spec.forest.trinodes)}, variables {c.ambient_dim}, equations {len(c.equations)}, dimension {pc.dimension(c)}")
        rep.line(format_cone(c).rstrip())
        return 0
    if args.action == "certify":
        cert = quilt.certify_gorenstein(spec, args.degree)
        cl = quilt.class_group_of_degeneration(spec)
        proj, emb = pc.span_project(c)
        omega_proj = emb.project(cert.omega) if cert.omega else None
        rep.record.update({"certificate": cert.to_dict(), "class_group": cl.to_dict(), "omega_projected": omega_proj})
        rep.line(f"verdict      {cert.verdict}")
        if omega_proj is not None:
            rep.line(f"omega        {_fmt(omega_proj)} (projected coordinates)")
            rep.line(f"brute force  checked to degree {cert.checked_degree_bound}")
        rep.line(f"class group  {cl}")
        return 0 if cert.is_gorenstein else 1
    if args.action == "count":
        ne = len(spec.forest.half_edges)
        if len(args.weights) != ne:
            raise UsageError(f"--weights: graph has {ne} edges, got {len(args.weights)} weights")
        ew = {e: _weight(w, spec.m, f"weight {e}") for e, w in enumerate(args.weights)}
        n = quilt.graded_dim(spec, ew)
        ref = quilt.product_of_triples(spec, ew) if spec.modulus == 1 else None
        rep.record.update({"weights": [ew[e] for e in range(ne)], "count": n, "vertex_product": ref})
        rep.line(str(n))
        if ref is not None and ref != n:
            rep.line(f"MISMATCH: vertex product gives {ref}")
            return 1
        return 0
    if args.action == "series":
        grading = None
        if args.grading:
            grading = _fractions(args.grading, "--grading")
        h, w = quilt.quilt_hilbert_series(spec, grading)
        rep.record.update({"series": h.to_dict(), "symmetry_exponent": w})
        rep.line(str(h))
        rep.line(f"symmetry exponent: {w if w is not None else 'none'}")
        return 0 if w is not None else 1
    cl = quilt.class_group_of_degeneration(spec)
    rep.record["class_group"] = cl.to_dict()
    rep.line(str(cl))
    return 0


# --------------------------------------------------------------------------
# oracle


def cmd_oracle(args, rep: Report) -> int:
    if args.action == "lr":
        lam, mu, nu = (reps.normalize(_ints(p, "partition")) for p in args.parts)
        v = reps.lr_coefficient(lam, mu, nu)
        rep.record = {"lambda": lam, "mu": mu, "nu": nu, "c": v}
        rep.line(str(v))
        return 0
    m = args.m
    ws = [_weight(w, m, f"weight {i}") for i, w in enumerate(args.weights)]
    if args.action == "triple":
        if len(ws) != 3:
            raise UsageError("triple: need exactly three weights")
        a = reps.triple_invariant_dim(m, *ws)
        b = reps.schur_triple_dim(m, *ws)
        rep.record = {"m": m, "weights": ws, "lr": a, "schur": b}
        rep.line(str(a))
        if a != b:
            rep.line(f"MISMATCH: Schur method gives {b}")
            return 1
        return 0
    if len(ws) < 2:
        raise UsageError("tree: need at least two leaf weights")
    edges, leaves = caterpillar(len(ws))
    v = reps.tree_invariant_dim(m, edges, dict(zip(leaves, ws)))
    rep.record = {"m": m, "weights": ws, "dim": v}
    rep.line(str(v))
    return 0


def caterpillar(n: int) -> tuple[list[tuple], list[str]]:
    """Edges and leaf names of the caterpillar tree with ``n`` leaves."""
    leaves = [f"l{i}" for i in range(n)]
    if n == 2:
        return [(leaves[0], leaves[1])], leaves
    spine = [f"s{i}" for i in range(n - 2)]
    edges = [(spine[0], leaves[0]), (spine[0], leaves[1])]
    for i in range(1, n - 2):
        edges.append((spine[i - 1], spine[i]))
        edges.append((spine[i], leaves[i + 1]))
    edges.append((spine[-1], leaves[-1]))
    return edges, leaves


# --------------------------------------------------------------------------
# self test


def _bz_case(case):
    m, a, b, c = case
    return case, bz.count_fiber(m, a, b, c), reps.triple_invariant_dim(m, a, b, c), reps.schur_triple_dim(m, a, b, c)


def selftest(jobs: int, rep: Report) -> int:
    results: dict[str, list[int]] = {}

    def tally(name: str, ok: bool) -> None:
        results.setdefault(name, [0, 0])[0 if ok else 1] += 1

    cases = []
    for m, R in ((2, 4), (3, 2)):
        ws = list(itertools.product(range(R + 1), repeat=m - 1))
        cases.extend((m, a, b, c) for a, b, c in itertools.product(ws, repeat=3))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            out = list(ex.map(_bz_case, cases, chunksize=64))
    else:
        out = [_bz_case(cs) for cs in cases]
    for _, n, a, b in sorted(out):
        tally("bz vs oracles", n == a == b)

    orth = pc.ConePresentation(3, (), ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    parity = pc.LatticeDescription(3, congruences=(((1, -1, 0), 2), ((0, 1, -1), 2)))
    suite = [
        ("orthant", orth, (1, 1, 1)),
        ("parity orthant", pc.restrict_lattice(orth, parity), (1, 1, 1)),
        ("rays (1,0),(1,3)", pc.cone_from_rays([(1, 0), (1, 3)]), (1, 0)),
        ("bz m=3", bz.bz_cone(3), (1,) * 9),
        ("theta m=2 psl", quilt.quilt_cone(quilt.BUILTIN_GRAPHS["theta"](), 2, "psl").compiled, None),
    ]
    for name, c, g in suite:
        if g is None:
            g = quilt.default_grading(quilt.quilt_cone(quilt.BUILTIN_GRAPHS["theta"](), 2, "psl"))
        cert = pc.gorenstein_facet_test(c)
        D = max(8, 3 * pc.degree(g, cert.omega)) if cert.is_gorenstein else 8
        bf = pc.gorenstein_search(c, g, D)
        tally("facet test vs brute force", cert.is_gorenstein == bf.confirmed)
        h = hilbert.hilbert_series(c, g, validate_to=-1)
        tally("series vs enumeration", h.coefficients(8) == pc.count_by_degree(c, g, 8))
    total_fail = 0
    for name, (ok, bad) in results.items():
        rep.line(f"{name:<28} pass {ok:>5}  fail {bad:>3}")
        total_fail += bad
    rep.record = {k: {"pass": v[0], "fail": v[1]} for k, v in results.items()}
    return 0 if total_fail == 0 else 1


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gorquilt", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="emit one JSON record instead of text")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    p.add_argument("--selftest", action="store_true", help="run the cross-oracle checks and exit")
    sub = p.add_subparsers(dest="command")

    rd = sub.add_parser("rootdatum", help="root data, pi1 and factoriality predictions")
    rds = rd.add_subparsers(dest="action", required=True)
    for name in ("pi1", "predict"):
        q = rds.add_parser(name)
        q.add_argument("group", help="Lie type (A2, A1xA1) or group name (SL3, PGL3, SO4, GL2, Sp4)")
        q.add_argument("--adjoint", action="store_true", help="quotient by the full center")
    for name in ("dual", "rootlattice"):
        q = rds.add_parser(name)
        q.add_argument("type")
        q.add_argument("weight", help="comma-separated fundamental-weight coordinates")

    cn = sub.add_parser("cone", help="operations on a cone file")
    cn.add_argument("action", choices=["facets", "rays", "hilbertbasis", "gorenstein", "classgroup", "series"])
    cn.add_argument("file")
    cn.add_argument("--grading", help="comma-separated grading (default: coordinate sum)")
    cn.add_argument("--degree", type=int, help="brute-force cross-check to this degree")

    b = sub.add_parser("bz", help="Berenstein-Zelevinsky triangles")
    bs = b.add_subparsers(dest="action", required=True)
    q = bs.add_parser("count")
    q.add_argument("m", type=int)
    q.add_argument("weights", nargs=3)
    q.add_argument("--check", action="store_true", help="compare with the tensor-product oracle")
    q = bs.add_parser("omega")
    q.add_argument("m", type=int)
    q = bs.add_parser("gorenstein")
    q.add_argument("m", type=int)
    q.add_argument("--degree", type=int)

    qu = sub.add_parser("quilt", help="glued BZ cones over trivalent graphs")
    qu.add_argument("action", choices=["compile", "certify", "count", "series", "classgroup"])
    qu.add_argument("--graph", required=True, help="graph file or builtin: theta, dumbbell, tree3, tree4")
    qu.add_argument("-m", type=int, required=True)
    qu.add_argument("--lattice", default="sl", help="sl, psl, or the order d of a central quotient")
    qu.add_argument("--degree", type=int, help="brute-force degree bound for certify")
    qu.add_argument("--weights", nargs="*", default=[], help="one comma list per edge, in file order")
    qu.add_argument("--grading", help="comma-separated grading for series")

    o = sub.add_parser("oracle", help="tensor-product multiplicities")
    os_ = o.add_subparsers(dest="action", required=True)
    q = os_.add_parser("lr")
    q.add_argument("parts", nargs=3, help="partitions lambda mu nu as comma lists")
    q = os_.add_parser("triple")
    q.add_argument("m", type=int)
    q.add_argument("weights", nargs=3)
    q = os_.add_parser("tree")
    q.add_argument("m", type=int)
    q.add_argument("weights", nargs="+", help="leaf weights of a caterpillar tree")
    return p


HANDLERS = {"rootdatum": cmd_rootdatum, "cone": cmd_cone, "bz": cmd_bz, "quilt": cmd_quilt, "oracle": cmd_oracle}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    rep = Report(args.json)
    try:
        if args.selftest:
            code = selftest(max(1, args.jobs), rep)
        elif args.command is None:
            parser.print_usage(sys.stderr)
            return 2
        else:
            code = HANDLERS[args.command](args, rep)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    rep.emit()
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
