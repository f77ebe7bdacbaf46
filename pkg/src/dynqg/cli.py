"""Command-line driver: build instances, reduce and map expressions, run suites."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .coeff import CoeffError, standard_homs
from .instances import SUITES, build_instance, push_bundle, run_suite, verify_base_change_web
from .ncalg import DegenerateRelations, ReductionBudgetExceeded
from .parser import ParseError
from .report import Report
from .specfile import SpecError, load, save

HOMS = ("pi-q-m", "pi-1", "pi-minus-inf", "pi-plus-inf", "pi-q-minus-inf", "pi-q-plus-inf", "pi-1-cx")


class UsageError(Exception):
    pass


def _params(items) -> dict:
    out = {}
    for item in items or []:
        if "=" not in item:
            raise UsageError(f"--param expects NAME=VALUE, got {item!r}")
        k, v = item.split("=", 1)
        try:
            out[k.strip()] = Fraction(v.strip())
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--param {k}: not a rational number: {v!r}")
    unknown = set(out) - {"q"}
    if unknown:
        raise UsageError(f"unknown parameter(s) {sorted(unknown)}")
    return out


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=1, ensure_ascii=False))
    else:
        print(text)


def _emit_report(args, rep: Report) -> int:
    _emit(args, rep.to_dict(), rep.to_text())
    return 0 if rep.ok else 1


def _parse_expr(bundle, text: str):
    """Element of A, or of A (x) A when the fiber separator occurs."""
    if "(x)" in text:
        fib = bundle.hopf.fiber2
        return fib, fib.reduce(fib.parse(text))
    P = bundle.pres
    return P, P.reduce(P.parse(text))


def cmd_instance(args) -> int:
    params = _params(args.param)
    bundle = build_instance(args.name, params.get("q"))
    save(bundle, args.out)
    _emit(args, {"instance": args.name, "out": args.out, "generators": [g.name for g in bundle.pres.gens]},
          f"wrote {args.name} to {args.out}")
    return 0


def cmd_reduce(args) -> int:
    bundle = load(args.spec)
    alg, x = _parse_expr(bundle, args.expr)
    s = alg.format(x)
    _emit(args, {"input": args.expr, "normal_form": s}, s)
    return 0


def cmd_map(args) -> int:
    bundle = load(args.spec)
    h = bundle.hopf
    P = bundle.pres
    x = P.reduce(P.parse(args.expr))
    m = args.morphism
    if m == "delta":
        alg, y = h.fiber2, h.Delta(x)
    elif m == "epsilon":
        alg, y = h.crossed, h.eps(x)
    elif m == "antipode":
        alg, y = P, h.S(x)
    elif m.startswith("theta:"):
        if bundle.characters is None:
            raise UsageError("this spec file has no character matrix")
        try:
            k = int(m.split(":", 1)[1])
        except ValueError:
            raise UsageError(f"theta needs an integer power, got {m!r}")
        alg, y = h.crossed, bundle.characters.theta(k)(x)
    else:
        raise UsageError(f"unknown morphism {m!r}")
    s = alg.format(y)
    _emit(args, {"input": args.expr, "morphism": m, "image": s}, s)
    return 0


def cmd_check(args) -> int:
    bundle = load(args.spec)
    return _emit_report(args, run_suite(bundle, args.suite, args.max_overlap))


def cmd_base_change(args) -> int:
    bundle = load(args.spec)
    params = _params(args.param)
    q = params.get("q")
    if args.hom.startswith("pi-q-") and q is None:
        raise UsageError(f"{args.hom} needs --param q=NUM")
    homs = standard_homs(q)
    phi = homs[args.hom]
    if not phi.source.same_as(bundle.base):
        raise UsageError(f"{args.hom} is defined on the {phi.source.name} base, not on {bundle.base.name}")
    out = push_bundle(bundle, phi)
    rep = run_suite(out, "hopf")
    save(out, args.out)
    rep.add(f"wrote {args.out}", True)
    return _emit_report(args, rep)


def cmd_web(args) -> int:
    q = _params(args.param).get("q", Fraction(2, 3))
    return _emit_report(args, verify_base_change_web(q))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dynqg", description="Workbench for free orthogonal/unitary dynamical quantum groups.")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("instance", parents=[fmt], help="write a shipped instance as a spec file")
    s.add_argument("name", choices=("sudq2", "frt-su2", "su-q2", "classical"))
    s.add_argument("--param", action="append", metavar="q=NUM")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_instance)

    s = sub.add_parser("reduce", parents=[fmt], help="normal form of an expression")
    s.add_argument("spec")
    s.add_argument("-e", "--expr", required=True)
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("map", parents=[fmt], help="apply Delta, epsilon, S or a character")
    s.add_argument("spec")
    s.add_argument("--morphism", required=True, metavar="delta|epsilon|antipode|theta:K")
    s.add_argument("-e", "--expr", required=True)
    s.set_defaults(func=cmd_map)

    s = sub.add_parser("check", parents=[fmt], help="run a verification suite")
    s.add_argument("spec")
    s.add_argument("--suite", choices=SUITES + ("all",), default="all")
    s.add_argument("--max-overlap", type=int, default=3)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("base-change", parents=[fmt], help="transport along a base homomorphism")
    s.add_argument("spec")
    s.add_argument("--hom", required=True, choices=HOMS)
    s.add_argument("--param", action="append", metavar="q=NUM")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_base_change)

    s = sub.add_parser("web-verify", parents=[fmt], help="verify the base-change web of SU_Q^dyn(2)")
    s.add_argument("--param", action="append", metavar="q=NUM")
    s.set_defaults(func=cmd_web)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, SpecError, ParseError, OSError) as exc:
        print(f"dynqg: error: {exc}", file=sys.stderr)
        return 2
    except (CoeffError, DegenerateRelations, ReductionBudgetExceeded, ValueError, ZeroDivisionError) as exc:
        print(f"dynqg: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
