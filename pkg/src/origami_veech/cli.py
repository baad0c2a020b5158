"""Command-line front end.

Exit codes: 0 success, 1 verification failure (a theorem check found a
violation), 2 input error, 3 budget exceeded.
"""

import argparse
import math
import sys
from concurrent.futures import ProcessPoolExecutor

from . import congruence as cg
from . import report as rp
from . import surface as sf
from .action import orbit, veech_generators
from .analysis import cusp_data
from .congruence import coprime_cusp_certificate, deficiency
from .surface import BudgetError, NotReducedError, NotTransitiveError

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _family(name, params):
    try:
        params = [int(p) for p in params]
    except ValueError:
        raise ValueError("family parameters must be integers: %r" % (params,))
    builders = {"L": (sf.L, 2), "Cr2": (sf.Cr2, 1), "Ogn": (sf.Ogn, 2)}
    if name not in builders:
        raise ValueError("unknown family %r (choose from L, Cr2, Ogn)" % name)
    fn, arity = builders[name]
    if len(params) != arity:
        raise ValueError("family %s takes %d parameter(s)" % (name, arity))
    return fn(*params)


def _load_origami(args):
    if getattr(args, "family", None):
        return _family(args.family[0], args.family[1:])
    if not args.spec:
        raise ValueError("an origami spec or --family is required")
    return sf.parse_origami(args.spec)


def table1_representatives(max_squares):
    """(squares, orbit_label, origami) per row, in the table's order."""
    rows = []
    for n in range(3, max_squares + 1):
        if n % 2 == 0 or n == 3:
            rows.append((n, "", sf.L(2, n - 1)))
        else:
            rows.append((n, "B%d" % n, sf.L(3, n - 2)))
            rows.append((n, "A%d" % n, sf.L(2, n - 1)))
    return rows


def _table1_row(job):
    n, label, o, budget = job
    rep = rp.analyze(o, budget=budget)
    return rp.csv_row(rep, squares=n, orbit_label=label)


def cmd_analyze(args, out):
    o = _load_origami(args)
    rep = rp.analyze(
        o,
        extra_moduli=args.mod,
        with_certificates=args.certificates,
        budget=args.budget,
    )
    if args.json:
        print(rp.to_json(rep, indent=2), file=out)
    elif args.csv:
        print(rp.CSV_HEADER, file=out)
        print(rp.csv_row(rep), file=out)
    else:
        print("origami     %s  (n=%d)" % (rep.origami["text"], rep.origami["n"]), file=out)
        print("geometry    genus %d, stratum %s, reduced %s"
              % (rep.geometry["genus"], tuple(rep.geometry["stratum"]),
                 rep.geometry["reduced"]), file=out)
        for direction in ("horizontal", "vertical"):
            cyls = rep.geometry["cylinders"][direction]
            print("cylinders   %-10s %s" % (direction, ["%dx%d" % (w, h) for w, h in cyls]), file=out)
        print("orbit       d = %d" % rep.orbit["d"], file=out)
        print("cusps       widths %s, level %d, normalised pair %s, -I %s"
              % (rep.cusps["widths"], rep.cusps["level"],
                 tuple(rep.cusps["normalised_pair"]), rep.cusps["minus_identity"]), file=out)
        print("curve       mu %d, e2 %d, e3 %d, s %d, genus %d"
              % (rep.curve["mu"], rep.curve["e2"], rep.curve["e3"],
                 rep.curve["s"], rep.curve["genus"]), file=out)
        print("deficiency  m %d: image order %s, e %d, f %d; congruence %s, totally non-congruence %s"
              % (rep.deficiency["m"], rep.deficiency["image_order"],
                 rep.deficiency["e"], rep.deficiency["f"],
                 rep.deficiency["congruence"], rep.deficiency["totally_noncongruence"]), file=out)
        for block in rep.extra_moduli:
            print("deficiency  m %d: image order %s, e %d, f %d"
                  % (block["m"], block["image_order"], block["e"], block["f"]), file=out)
        for cert in rep.certificates:
            print("certificate %s: %s -> %s" % (cert["kind"], cert["data"], cert["verdict"]), file=out)
    return EXIT_OK


def cmd_orbit(args, out):
    o = _load_origami(args)
    table = orbit(o)
    print("orbit size d = %d" % table.size, file=out)
    for i, pt in enumerate(table.points):
        print("%4d  %s" % (i + 1, sf.format_origami(pt)), file=out)
    print("sigma_T  = %s" % table.sigma_T, file=out)
    print("sigma_T' = %s" % table.sigma_Tprime, file=out)
    cd = cusp_data(table)
    for c in cd.cusps:
        print("cusp at point %d: width %d (a=%d, b=%d)"
              % (c.point, c.width, c.a_width, c.b_width), file=out)
    print("level = %d" % cd.level, file=out)
    return EXIT_OK


def cmd_table1(args, out):
    if args.max_squares < 3:
        raise ValueError("--max-squares must be at least 3")
    jobs = [
        (n, label, o, args.budget)
        for n, label, o in table1_representatives(args.max_squares)
    ]
    print(rp.CSV_HEADER, file=out)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for row in pool.map(_table1_row, jobs):
                print(row, file=out)
    else:
        for job in jobs:
            print(_table1_row(job), file=out)
    return EXIT_OK


def cmd_theorems(args, out):
    budget = args.budget
    failures = []

    def check(name, actual, expected):
        ok = actual == expected
        print("%-40s %s (got %s, expected %s)"
              % (name, "PASS" if ok else "FAIL", actual, expected), file=out)
        if not ok:
            failures.append(name)

    if args.thm == 1:
        for o in [sf.L(2, 2), sf.L(2, 3), sf.L(3, 3), sf.L(2, 4), sf.L(3, 5)]:
            table = orbit(o)
            vg = veech_generators(table)
            cd = cusp_data(table)
            repo = cg.verify_theorem1(vg, cd, args.m_max, budget)
            check("thm1 %s minimality up to m=%d" % (sf.format_origami(o), args.m_max),
                  repo.violations, ())
    elif args.thm == 2:
        for j in range(5, args.j_max + 1, 2):
            o = sf.L(3, j - 2)
            table = orbit(o)
            cert = coprime_cusp_certificate(table)
            check("thm2 B%d coprime-cusp certificate" % j, cert is not None, True)
            if cert is not None:
                vg = veech_generators(table)
                cd = cusp_data(table)
                res = deficiency(vg, cd.level, budget)
                check("thm2 B%d e_l" % j, res.e, 1)
                print("  certificate: %s" % (cert.data,), file=out)
    elif args.thm == 3:
        for j in range(3, args.j_max + 1):
            reps = []
            if j % 2 == 0 or j == 3:
                reps.append(("j=%d" % j, sf.L(2, j - 1), 3))
            else:
                reps.append(("B%d" % j, sf.L(3, j - 2), 1))
                if j <= 13:
                    reps.append(("A%d" % j, sf.L(2, j - 1), 3))
            for label, o, expect in reps:
                table = orbit(o)
                vg = veech_generators(table)
                cd = cusp_data(table)
                res = deficiency(vg, cd.level, budget)
                check("thm3 %s (%s) level index e" % (label, sf.format_origami(o)),
                      res.e, expect)
                if expect == 1:
                    cert = coprime_cusp_certificate(table)
                    if cert is not None:
                        print("  certificate: %s" % (cert.data,), file=out)
    elif args.thm == 5:
        pairs = args.gn or [(3, 7), (3, 11), (3, 13), (4, 11), (4, 13)]
        for g, n in pairs:
            if math.gcd(n, 3) != 1 or math.gcd(n, 2 * g - 2) != 1:
                raise ValueError(
                    "thm5 needs gcd(n,3)=1 and gcd(n,2g-2)=1; got (g,n)=(%d,%d)" % (g, n)
                )
            o = sf.Ogn(g, n)
            table = orbit(o)
            vg = veech_generators(table)
            cd = cusp_data(table)
            res = deficiency(vg, cd.level, budget)
            check("thm5 O(%d,%d) level index e" % (g, n), res.e, 1)
            cert = coprime_cusp_certificate(table)
            check("thm5 O(%d,%d) coprime-cusp certificate" % (g, n),
                  cert is not None and cert.verdict, True)
            if cert is not None:
                print("  certificate: %s" % (cert.data,), file=out)
    else:
        raise ValueError("--thm must be one of 1, 2, 3, 5")
    return EXIT_VERIFICATION if failures else EXIT_OK


def cmd_families(args, out):
    o = _family(args.name, args.params)
    print("family      %s(%s)" % (args.name, ",".join(map(str, args.params))), file=out)
    print("origami     %s  (n=%d)" % (sf.format_origami(o), o.n), file=out)
    print("genus       %d" % sf.genus(o), file=out)
    print("stratum     %s" % (sf.stratum(o),), file=out)
    print("reduced     %s" % sf.is_reduced(o), file=out)
    for direction in ("horizontal", "vertical"):
        cyls = sf.cylinders(o, direction)
        print("cylinders   %-10s %s" % (direction, ["%dx%d" % (c.width, c.height) for c in cyls]), file=out)
    if sf.stratum(o) == (2,) and sf.is_reduced(o):
        print("h2 orbit    %s" % sf.classify_h2_orbit(o), file=out)
    return EXIT_OK


def cmd_deficiency_scan(args, out):
    o = _load_origami(args)
    table = orbit(o)
    vg = veech_generators(table)
    cd = cusp_data(table)
    print("level l = %d, d = %d" % (cd.level, table.size), file=out)
    print("m,e,f", file=out)
    for m in range(1, args.max_m + 1):
        try:
            res = deficiency(vg, m, args.budget)
        except BudgetError:
            print("%d,skipped,skipped" % m, file=out)
            continue
        print("%d,%d,%d" % (m, res.e, res.f), file=out)
    return EXIT_OK


def _add_origami_args(p):
    p.add_argument("spec", nargs="?", help="origami as '(cycles)|(cycles)' [n=<int>]")
    p.add_argument("--family", nargs="+", metavar=("NAME", "PARAM"),
                   help="family member instead of a spec: L a b | Cr2 j | Ogn g n")
    p.add_argument("--budget", type=int, default=cg.DEFAULT_BUDGET,
                   help="maximum CRT domain size in points")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="origami-veech",
        description="Veech groups, Wohlfahrt levels and congruence deficiency "
                    "of square-tiled surfaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full pipeline on one origami")
    _add_origami_args(p)
    p.add_argument("--mod", type=int, action="append", default=[],
                   help="extra modulus for a deficiency block (repeatable)")
    p.add_argument("--certificates", action="store_true",
                   help="search and report a coprime-cusp certificate")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("orbit", help="list the SL2(Z) orbit and cusps")
    _add_origami_args(p)
    p.set_defaults(fn=cmd_orbit)

    p = sub.add_parser("table1", help="reproduce the survey table as CSV")
    p.add_argument("--max-squares", type=int, default=11)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=cg.DEFAULT_BUDGET)
    p.set_defaults(fn=cmd_table1)

    p = sub.add_parser("theorems", help="run a theorem's verification suite")
    p.add_argument("--thm", type=int, required=True, choices=[1, 2, 3, 5])
    p.add_argument("--m-max", type=int, default=24, help="thm 1 modulus bound")
    p.add_argument("--j-max", type=int, default=11, help="thm 2/3 square bound")
    p.add_argument("--gn", type=_parse_gn, action="append", default=None,
                   help="thm 5 pair g,n (repeatable)")
    p.add_argument("--budget", type=int, default=cg.DEFAULT_BUDGET)
    p.set_defaults(fn=cmd_theorems)

    p = sub.add_parser("families", help="describe a family member")
    p.add_argument("name", choices=["L", "Cr2", "Ogn"])
    p.add_argument("params", nargs="+", type=int)
    p.set_defaults(fn=cmd_families)

    p = sub.add_parser("deficiency-scan", help="e_m, f_m for m = 1..max-m")
    _add_origami_args(p)
    p.add_argument("--max-m", type=int, default=24)
    p.set_defaults(fn=cmd_deficiency_scan)
    return parser


def _parse_gn(text):
    g, n = text.split(",")
    return (int(g), int(n))


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args, out)
    except BudgetError as exc:
        print("budget exceeded: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET
    except (NotTransitiveError, NotReducedError, ValueError) as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
