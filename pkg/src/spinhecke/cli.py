"""Command-line interface.

    spinhecke nf EXPR             normal form of an expression
    spinhecke mul EXPR EXPR       product, in normal form
    spinhecke map NAME EXPR       apply a structural map to an expression
    spinhecke cocycle-table       dump the sign cocycle mu(w, w')
    spinhecke verify [--suite ID] run verification suites (exit 0 iff clean)
    spinhecke list-suites         list suite ids with parameter grids

Global flags (accepted after any subcommand): --type {A,B,D}, --rank N,
--algebra {ahc,spin,cover,lusztig,finite-spin,clifford}, --u RAT, --v RAT
(specialize coefficients at output time), --json.
"""

import argparse
import json
import sys
from fractions import Fraction

from .covering import upsilon_minus, upsilon_plus
from .parser import Context, ParseError, eval_text, render, specialize_element
from .spin_affine import phi_affine, psi_affine
from .spin_weyl import spin_algebra
from .suites import SUITES, list_suites, run_suite

ALGEBRAS = ("ahc", "spin", "cover", "lusztig", "finite-spin", "clifford")

# verify --module NAME runs the suites belonging to one kernel module
MODULES = {
    "clifford": ["beta-braid"],
    "spin-weyl": ["cocycle-crosscheck", "spin-assoc", "phi-psi-fin-inverse"],
    "affine-hc": ["ahc-relations", "ahc-assoc", "ind-consistency",
                  "ahc-involutions", "thm-intertwiner", "thm-intertwiner-braid",
                  "center-ahc"],
    "spin-affine": ["sah-relations", "sah-assoc", "sah-involutions", "spincomm",
                    "spintert", "spinterbraided", "phi-psi-inverse",
                    "isom-intertw", "center-sah"],
    "covering": ["cover-relations", "cover-assoc", "upsilon"],
}

# map name -> (input algebra or None to use --algebra, function(ctx, elt))
MAPS = {
    "phi": ("ahc", lambda ctx, e: phi_affine(e)),
    "psi": ("tensor-spin", lambda ctx, e: psi_affine(e)),
    "phi-fin": ("semidirect", lambda ctx, e: ctx.alg.phi_fin(e)),
    "psi-fin": ("tensor-fin", lambda ctx, e: ctx.alg.psi_fin(e)),
    "omega": ("finite-spin", lambda ctx, e: ctx.alg.omega(e)),
    "up": ("cover", lambda ctx, e: upsilon_plus(e)),
    "um": ("cover", lambda ctx, e: upsilon_minus(e)),
    "tau1": (None, lambda ctx, e: ctx.alg.apply_involution("tau1", e)),
    "tau2": (None, lambda ctx, e: ctx.alg.apply_involution("tau2", e)),
    "sigma": ("ahc", lambda ctx, e: ctx.alg.apply_involution("sigma", e)),
}


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", choices=("A", "B", "D"), dest="family",
                        default=argparse.SUPPRESS)
    common.add_argument("--rank", type=int, default=argparse.SUPPRESS)
    common.add_argument("--algebra", choices=ALGEBRAS, default=argparse.SUPPRESS)
    common.add_argument("--u", default=argparse.SUPPRESS,
                        help="specialize u to this rational at output time")
    common.add_argument("--v", default=argparse.SUPPRESS,
                        help="specialize v to this rational at output time")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    top = argparse.ArgumentParser(prog="spinhecke", description=__doc__,
                                  formatter_class=argparse.RawDescriptionHelpFormatter)
    top.set_defaults(family="A", rank=2, algebra="ahc", u=None, v=None, json=False)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", parents=[common], help="normal form of an expression")
    p.add_argument("expr")
    p = sub.add_parser("mul", parents=[common], help="normal form of a product")
    p.add_argument("expr1")
    p.add_argument("expr2")
    p = sub.add_parser("map", parents=[common], help="apply a structural map")
    p.add_argument("name", choices=sorted(MAPS))
    p.add_argument("expr")
    sub.add_parser("cocycle-table", parents=[common],
                   help="dump the full sign cocycle for the configured group")
    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", default=None, help="run one suite id (default: all)")
    p.add_argument("--module", default=None, choices=sorted(MODULES),
                   help="run every suite belonging to one kernel module")
    sub.add_parser("list-suites", parents=[common], help="list known suite ids")
    return top


def _specialization(args):
    u0 = Fraction(args.u) if args.u is not None else None
    v0 = Fraction(args.v) if args.v is not None else None
    return u0, v0


def _finish(elt, args):
    u0, v0 = _specialization(args)
    if u0 is not None or v0 is not None:
        elt = specialize_element(elt, u0, v0)
    text = render(elt)
    if args.json:
        print(json.dumps({"result": text}))
    else:
        print(text)
    return 0


def _cmd_nf(args):
    ctx = Context(args.algebra, args.family, args.rank)
    return _finish(eval_text(args.expr, ctx), args)


def _cmd_mul(args):
    ctx = Context(args.algebra, args.family, args.rank)
    a = eval_text(args.expr1, ctx)
    b = eval_text(args.expr2, ctx)
    return _finish(a * b, args)


def _cmd_map(args):
    domain, fn = MAPS[args.name]
    if domain is None:
        if args.algebra not in ("ahc", "spin"):
            raise ParseError(
                "%s needs --algebra ahc or spin (got %r)" % (args.name, args.algebra)
            )
        domain = args.algebra
    ctx = Context(domain, args.family, args.rank)
    elt = eval_text(args.expr, ctx)
    return _finish(fn(ctx, elt), args)


def _word_text(group, w):
    word = group.canonical_word(w)
    return "*".join("t%d" % j for j in word) if word else "1"


def _cmd_cocycle_table(args):
    alg = spin_algebra(args.family, args.rank)
    elements = alg.group.elements()
    rows = [
        {"w": _word_text(alg.group, w), "w2": _word_text(alg.group, w2),
         "mu": alg.cocycle(w, w2)}
        for w in elements
        for w2 in elements
    ]
    if args.json:
        print(json.dumps({"type": args.family, "rank": args.rank, "table": rows}))
    else:
        for row in rows:
            print("mu(%s, %s) = %+d" % (row["w"], row["w2"], row["mu"]))
    return 0


def _cmd_verify(args):
    family = args.family if "family" in getattr(args, "_explicit", ()) else None
    rank = args.rank if "rank" in getattr(args, "_explicit", ()) else None
    if args.suite is not None:
        if args.suite not in SUITES:
            print("unknown suite %r; see list-suites" % args.suite, file=sys.stderr)
            return 2
        names = [args.suite]
    elif args.module is not None:
        names = MODULES[args.module]
    else:
        names = sorted(SUITES)
    reports = []
    for name in names:
        reports.extend(run_suite(name, family, rank))
    failures = sum(len(r["failures"]) for r in reports)
    if args.json:
        print(json.dumps(reports))
    else:
        for r in reports:
            status = "ok" if not r["failures"] else "FAIL"
            print(
                "%-24s %s rank %s: %s (%d cases, %d ms)"
                % (r["suite"], r["params"]["type"], r["params"]["rank"], status,
                   r["cases"], r["millis"])
            )
            for f in r["failures"]:
                print("    lhs:  %s" % f["lhs"])
                print("    rhs:  %s" % f["rhs"])
                print("    diff: %s" % f["diff"])
        print("total: %d reports, %d failing cases" % (len(reports), failures))
    return 0 if failures == 0 else 1


def _cmd_list_suites(args):
    info = list_suites()
    if args.json:
        print(json.dumps(info))
    else:
        for entry in info:
            grid = ", ".join("%s%d" % (p["type"], p["rank"]) for p in entry["params"])
            print("%-24s %s" % (entry["suite"], entry["description"]))
            print("%-24s   params: %s" % ("", grid))
    return 0


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    # record which of the shared flags were given explicitly (verify uses
    # --type/--rank as filters only when present)
    explicit = set()
    tokens = sys.argv[1:] if argv is None else argv
    if "--type" in tokens:
        explicit.add("family")
    if "--rank" in tokens:
        explicit.add("rank")
    args._explicit = explicit
    handlers = {
        "nf": _cmd_nf,
        "mul": _cmd_mul,
        "map": _cmd_map,
        "cocycle-table": _cmd_cocycle_table,
        "verify": _cmd_verify,
        "list-suites": _cmd_list_suites,
    }
    try:
        return handlers[args.command](args)
    except (ParseError, ValueError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
