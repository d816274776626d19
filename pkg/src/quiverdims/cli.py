"""Command line interface.  Exit codes: 0 all checks pass, 2 only intervals
or open questions remain, 1 something did not match."""
from __future__ import annotations

import argparse
import os
import sys

from .algebra import radical_degree, is_ordered
from .catalog import CATALOG_NAMES, catalog
from .complexes import gldim
from .exceptional import SCRIPT_NAMES, rdim_bounds, run_script, script_text
from .linalg import parse_field
from .psi import av_closed_forms, av_dims, kw_bounds, psi_graded_dims, verify_exact, width
from .quiver import classify_underlying
from .report import Report, TABLES, bound_hints, ddim_bounds_for, reproduce
from .serre import fcy_certificate, functorial_fcy, ls_us_estimate, nilpotence_degree
from .textformat import dump_algebra, load_algebra


def _algebra(args):
    field = parse_field(args.field)
    if args.file:
        return load_algebra(args.file, field)
    if args.catalog:
        return catalog(args.catalog, field)
    raise SystemExit("give --catalog NAME or --file PATH (catalog: " + ", ".join(CATALOG_NAMES) + ")")


def _emit(rep: Report, fmt: str):
    if fmt in ("csv", "both"):
        sys.stdout.write(rep.to_csv())
    if fmt in ("md", "both"):
        sys.stdout.write(rep.to_markdown())


def _q(x):
    return "-" if x is None else str(x)


def cmd_algebra(args):
    a = _algebra(args)
    if args.dump:
        sys.stdout.write(dump_algebra(a))
        return 0
    print(f"name: {a.name}")
    print(f"vertices: {len(a.vertices)}  arrows: {len(a.quiver.arrows)}  dimension: {a.dim}")
    print(f"underlying graph: {classify_underlying(a.quiver).name}")
    print(f"ordered: {not a.cyclic and is_ordered(a)}")
    print(f"radical degree: {radical_degree(a)}")
    print(f"global dimension: {gldim(a, args.cap)}")
    print("Cartan matrix dim e_v A e_u (rows v, columns u):")
    for v in a.vertices:
        print("  " + " ".join(f"{len(a.piece(v, u)):3d}" for u in a.vertices) + f"   {v}")
    return 0


def cmd_serre_dim(args):
    a = _algebra(args)
    est = ls_us_estimate(a, args.steps, args.cap)
    rep = Report(f"serre-dim {a.name}")
    for m, inf, sup, ls, us in est.rows:
        rep.add(a.name, f"m={m}", None, "", (inf, sup), f"-sup/m = {ls}, -inf/m = {us}")
    rep.add(a.name, "LSdim", None, "", _q(est.ls), est.provenance)
    rep.add(a.name, "USdim", None, "", _q(est.us), est.provenance)
    _emit(rep, args.format)
    return 0 if est.exact else 2


def cmd_fcy(args):
    a = _algebra(args)
    cert = fcy_certificate(a, args.max_n, args.max_shift, args.cap)
    print(f"{a.name}: {cert if cert else 'none'}")
    status = 0
    if cert and args.functorial:
        ok = functorial_fcy(a, *cert, cap=args.cap)
        print(f"functorial check: {'pass' if ok else 'fail'}")
        status = 0 if ok else 1
    if args.expect:
        want = None if args.expect == "none" else tuple(int(x) for x in args.expect.split(","))
        if want != cert:
            print(f"expected {args.expect}")
            status = 1
    return status


def cmd_nilpotence(args):
    a = _algebra(args)
    r, dims = nilpotence_degree(a, args.max_r)
    print(f"{a.name}: dims of (A*)^(x)r for r = 1..: {dims}")
    print(f"first vanishing power: {r if r else 'none up to ' + str(args.max_r)}")
    return 0


def cmd_mutate(args):
    if args.script in SCRIPT_NAMES and not os.path.exists(args.script):
        text, name = script_text(args.script), args.script
    else:
        with open(args.script) as fh:
            text, name = fh.read(), os.path.basename(args.script)
    field = parse_field(args.field)
    a = catalog(args.catalog, field) if args.catalog else None
    rep = run_script(text, a, name=name)
    for s in rep.steps:
        print(f"{'ok  ' if s.ok else 'FAIL'} line {s.line_no}: {s.command}" + (f"  [{s.detail}]" if s.detail else ""))
    print(f"final: {rep.collection!r}")
    return 0 if rep.ok else 1


def cmd_bounds(args):
    a = _algebra(args)
    r = rdim_bounds(a, bound_hints(a))
    d = ddim_bounds_for(a)
    for led in (r, d):
        print(f"{led.quantity}: {led.interval()}")
        print(f"  lower {led.lower}: {led.lower_cert}")
        print(f"  upper {led.upper}: {led.upper_cert}")
        for f in led.facts:
            print(f"  fact: {f}")
    return 0 if r.exact and d.exact else 2


def _parse_V(entry: str):
    degs = []
    for part in entry.split(","):
        d, n = part.split(":")
        degs += [int(d)] * int(n)
    return tuple(sorted(degs))


def cmd_psi(args):
    V = _parse_V(args.V)
    if len(V) < 2:
        print("dim V must be at least 2")
        return 1
    w = width(V)
    status = 0
    print(f"V degrees {list(V)}, width {w}")
    for n in range(0, args.n + 1):
        g = psi_graded_dims(V, n)
        print(f"  psi_{n}: " + ", ".join(f"{d}:{c}" for d, c in sorted(g.items())))
    if args.direct:
        for i in range(0, args.n):
            r = verify_exact(V, i)
            print(f"  exact sequence at i={i}: {'pass' if r.ok else 'FAIL'}")
            status |= not r.ok
    for k in range(1, args.n // 2 + 1):
        kb = kw_bounds(V, k, direct=args.direct)
        print(f"  k={k}: {kb['computed']} {'pass' if kb['match'] else 'FAIL'}")
        status |= not kb["match"]
    (ls, us), rows = av_dims(V, args.m)
    for m, inf, sup, lsm, usm in rows:
        cf = av_closed_forms(V, m)
        ok = cf == {"sup": sup, "inf": inf}
        status |= not ok
        print(f"  m={m}: inf {inf} sup {sup}  -sup/m {lsm}  -inf/m {usm}  {'pass' if ok else 'FAIL'}")
    print(f"dims: ({ls}, {us})")
    return int(bool(status))


def cmd_reproduce(args):
    ids = sorted(TABLES) if args.table == "all" else [args.table]
    code = 0
    for t in ids:
        rep = reproduce(t)
        if args.out:
            os.makedirs(args.out, exist_ok=True)
            with open(os.path.join(args.out, f"{t}.csv"), "w") as fh:
                fh.write(rep.to_csv())
            with open(os.path.join(args.out, f"{t}.md"), "w") as fh:
                fh.write(rep.to_markdown())
        _emit(rep, args.format)
        for r in rep.failing():
            print(f"FAILED: {r.algebra} {r.quantity}: expected {r.expected}, got {r.computed}", file=sys.stderr)
        code = 1 if 1 in (code, rep.exit_code) else max(code, rep.exit_code)
    return code


def build_parser():
    p = argparse.ArgumentParser(prog="quiverdims", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--catalog", help="catalog entry, e.g. b_power:2,2 or dynkin:E6")
    common.add_argument("--file", help="quiver presentation file")
    common.add_argument("--field", default="q", help="q (rationals) or fp:<p>")
    common.add_argument("--cap", type=int, default=None, help="resolution length cap")
    common.add_argument("--format", choices=["csv", "md", "both"], default="md")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("algebra", parents=[common], help="basic invariants of an algebra")
    s.add_argument("--dump", action="store_true", help="print the algebra in file format")
    s.set_defaults(func=cmd_algebra)

    s = sub.add_parser("serre-dim", parents=[common], help="Serre iterates and LS/US dimension")
    s.add_argument("--steps", type=int, default=6)
    s.set_defaults(func=cmd_serre_dim)

    s = sub.add_parser("fcy", parents=[common], help="least n with S^n = [m]")
    s.add_argument("--max-n", type=int, default=12)
    s.add_argument("--max-shift", type=int, default=None)
    s.add_argument("--functorial", action="store_true", help="also check S^n = [m] on morphisms")
    s.add_argument("--expect", help="'n,m' or 'none'")
    s.set_defaults(func=cmd_fcy)

    s = sub.add_parser("nilpotence", parents=[common], help="tensor powers of the dual bimodule")
    s.add_argument("--max-r", type=int, default=6)
    s.set_defaults(func=cmd_nilpotence)

    s = sub.add_parser("mutate", parents=[common], help="replay a mutation script")
    s.add_argument("script", help=f"path, or one of {', '.join(SCRIPT_NAMES)}")
    s.set_defaults(func=cmd_mutate)

    s = sub.add_parser("bounds", parents=[common], help="Rdim and Ddim intervals")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("psi", parents=[common], help="trace-kernel spaces of a graded V")
    s.add_argument("--V", required=True, help='degree:dim list, e.g. "-1:1,0:1,1:1"')
    s.add_argument("--m", type=int, default=8)
    s.add_argument("--n", type=int, default=6)
    s.add_argument("--direct", action="store_true", help="also build psi explicitly and check exactness")
    s.set_defaults(func=cmd_psi)

    s = sub.add_parser("reproduce", parents=[common], help="recompute a table")
    s.add_argument("table", choices=sorted(TABLES) + ["all"])
    s.add_argument("--out", help="directory for CSV and markdown copies")
    s.set_defaults(func=cmd_reproduce)
    return p


def _glue_negative_values(argv):
    """Let '--V -1:1,0:1' through: argparse would read '-1:1' as an option."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--V":
            val = next(it, None)
            out.append(tok if val is None else f"--V={val}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_negative_values(argv))
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
