"""Command-line front end.

Exit status: 0 on success or a passing check, 1 on a failing check (or an
exhausted fuel budget), 2 on usage and parse errors.  The ``obstruction``
command exits 0 when the expected failure is reproduced.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import terms
from .coalgebra import (
    CheckReport,
    check_coassociativity,
    check_counit,
    check_relations,
    coproduct,
    cp_square_check,
    geometric_scheme,
    obstruction_report,
    obstruction_reproduced,
    singer_scheme,
)
from .modular import check_prime
from .parse import ParseError, parse_expression, word_to_json
from .terms import Element, FuelExhausted, Grading, admissible_basis, bidegree_of, word_str
from .tensor import TensorElement


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def element_json(e: Element) -> dict:
    g = Grading.standard(e.p)
    return {
        "p": e.p,
        "terms": [
            {"c": c, "w": word_to_json(w), "deg": list(bidegree_of(w, g))}
            for w, c in e.sorted_terms()
        ],
    }


def tensor_json(t: TensorElement, extra: dict) -> dict:
    out = {"p": t.p}
    out.update(extra)
    out["terms"] = [{"c": c, "l": word_to_json(l), "r": word_to_json(r)} for (l, r), c in t.sorted_terms()]
    return out


def _scheme(args):
    if args.scheme == "singer":
        return singer_scheme(args.p)
    return geometric_scheme(args.p, args.parity_beta, args.parity_p0)


def _report_out(args, rep: CheckReport, ok: bool, verdict: str = None) -> int:
    d = rep.to_dict()
    d = {"p": args.p, **d}
    if verdict:
        d["verdict"] = verdict
    if args.fmt == "json":
        print(_dump(d))
    else:
        print(f"[{'PASS' if ok else 'FAIL'}] {rep.scheme} {rep.family} ({rep.range}): "
              f"{d['verdict']}, {rep.checked} checked")
        for line in rep.trace:
            print("  " + line)
        for f in rep.failures:
            print(f"  failure {' '.join(map(str, f.instance))} parities={f.parities}: {f.residual}")
        for n in rep.notes:
            print("  note: " + n)
    return 0 if ok else 1


def cmd_normalize(args) -> int:
    e = terms.normalize(parse_expression(args.expr, args.p))
    print(_dump(element_json(e)) if args.fmt == "json" else str(e))
    return 0


def cmd_mul(args) -> int:
    x = parse_expression(args.left, args.p)
    y = parse_expression(args.right, args.p)
    e = terms.multiply(x, y)
    print(_dump(element_json(e)) if args.fmt == "json" else str(e))
    return 0


def cmd_basis(args) -> int:
    words = [word_str(w) for w in admissible_basis(args.p, args.n, args.s)]
    if args.fmt == "json":
        print(_dump(words))
    else:
        print("\n".join(words))
    return 0


def cmd_coprod(args) -> int:
    scheme = _scheme(args)
    t = coproduct(parse_expression(args.expr, args.p), scheme)
    if args.fmt == "json":
        print(_dump(tensor_json(t, {"scheme": scheme.name, "parities": list(scheme.parities)})))
    else:
        print(str(t))
    return 0


def _families(args):
    if args.beta_free:
        return ("pp",)
    return ("beta_squared", "pp", "pbp")


def cmd_check_relations(args) -> int:
    rep = check_relations(_scheme(args), args.p, args.max, args.max, _families(args), jobs=args.jobs)
    return _report_out(args, rep, rep.passed)


def cmd_check_coproduct(args) -> int:
    scheme = _scheme(args)
    rep = check_relations(scheme, args.p, args.max, args.max, _families(args), jobs=args.jobs)
    if not scheme.grading.symbolic:
        for s in range(args.s_max + 1):
            rep = rep.merge(check_counit(scheme, args.p, args.n_max, s))
        rep = rep.merge(check_coassociativity(scheme, args.p, args.n_max, args.s_max))
    return _report_out(args, rep, rep.passed)


def cmd_check_counit(args) -> int:
    rep = check_counit(singer_scheme(args.p), args.p, args.max, args.s)
    return _report_out(args, rep, rep.passed)


def cmd_check_coassoc(args) -> int:
    rep = check_coassociativity(singer_scheme(args.p), args.p, args.max, args.s_max)
    return _report_out(args, rep, rep.passed)


def cmd_obstruction(args) -> int:
    rep = obstruction_report(args.p)
    ok = obstruction_reproduced(rep)
    verdict = "nonzero residual, obstruction reproduced" if ok else "obstruction NOT reproduced"
    return _report_out(args, rep, ok, verdict)


def cmd_cp_check(args) -> int:
    rep = cp_square_check(args.p)
    return _report_out(args, rep, rep.passed)


def _prime(s: str) -> int:
    try:
        return check_prime(int(s))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-p", type=_prime, required=True, help="odd prime")
    common.add_argument("--fuel", type=int, default=None,
                        help="rewrite-step budget per normalization (default: $BP_ENGINE_FUEL or 1000000)")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for relation sweeps")
    common.set_defaults(fmt="json")

    scheme = argparse.ArgumentParser(add_help=False)
    scheme.add_argument("--scheme", choices=("singer", "geometric"), default="singer")
    scheme.add_argument("--parity-beta", type=int, choices=(0, 1), default=0)
    scheme.add_argument("--parity-p0", type=int, choices=(0, 1), default=0)

    parser = argparse.ArgumentParser(prog="bpengine", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("normalize", parents=[common], help="reduce an expression to admissible form")
    sp.add_argument("expr")
    sp.set_defaults(func=cmd_normalize)

    sp = sub.add_parser("mul", parents=[common], help="product of two expressions")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.set_defaults(func=cmd_mul)

    sp = sub.add_parser("basis", parents=[common], help="admissible basis in bidegree (n, s)")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-s", type=int, required=True)
    sp.set_defaults(func=cmd_basis)

    sp = sub.add_parser("coprod", parents=[common, scheme], help="coproduct of an expression")
    sp.add_argument("expr")
    sp.set_defaults(func=cmd_coprod)

    for name, func in (("check-relations", cmd_check_relations), ("check-coproduct", cmd_check_coproduct)):
        sp = sub.add_parser(name, parents=[common, scheme])
        sp.add_argument("--max", type=int, default=6, help="bound on a and b")
        sp.add_argument("--beta-free", action="store_true", help="only the P^a P^b relations")
        if name == "check-coproduct":
            sp.add_argument("--n-max", type=int, default=12)
            sp.add_argument("--s-max", type=int, default=2)
        sp.set_defaults(func=func)

    sp = sub.add_parser("check-counit", parents=[common])
    sp.add_argument("--max", type=int, default=12, help="bound on internal degree")
    sp.add_argument("-s", type=int, default=1)
    sp.set_defaults(func=cmd_check_counit)

    sp = sub.add_parser("check-coassoc", parents=[common])
    sp.add_argument("--max", type=int, default=12, help="bound on internal degree")
    sp.add_argument("--s-max", type=int, default=2)
    sp.set_defaults(func=cmd_check_coassoc)

    sp = sub.add_parser("obstruction", parents=[common], help="square of b|P0 + P0|b over all parities")
    sp.set_defaults(func=cmd_obstruction)

    sp = sub.add_parser("cp-check", parents=[common], help="square in the subalgebra generated by P^i, bP^i")
    sp.set_defaults(func=cmd_cp_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.fuel is not None:
        if args.fuel <= 0:
            print("error: --fuel must be positive", file=sys.stderr)
            return 2
        terms.set_default_fuel(args.fuel)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except FuelExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        terms.set_default_fuel(None)


if __name__ == "__main__":
    sys.exit(main())
