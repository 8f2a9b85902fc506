"""Command-line interface: ``tautkit <command> [options]``.

Every command prints its result as plain text, or with ``--json`` as one
object {"command", "inputs", "value", "provenance"} with sorted keys.
Exit status: 0 success, 1 self-check disagreement (``elsv``), 2 invalid
input, 3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import faber, graphs, hurwitz, intersections, invariance
from .errors import ResourceCapError, TautkitError
from .exact import Partition, euler_char_mg, euler_char_mgn

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _ints(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _profile(text: str) -> Partition:
    parts = _ints(text)
    if not parts or any(p < 1 for p in parts):
        raise argparse.ArgumentTypeError(f"profile must list positive integers, got {text!r}")
    return Partition.of(parts)


def _q(x: Fraction | int) -> str:
    return str(Fraction(x))


class _Result:
    def __init__(self, value: Any, provenance: str, text: str | None = None, status: int = EXIT_OK):
        self.value = value
        self.provenance = provenance
        self.text = text if text is not None else (value if isinstance(value, str) else json.dumps(value, sort_keys=True))
        self.status = status


# --------------------------------------------------------------------------
# commands


def cmd_hurwitz(args) -> _Result:
    alpha = args.profile
    caps = dict(max_degree=args.max_degree, max_branch=args.max_branch)
    if args.faber_hurwitz:
        return _Result(_q(hurwitz.faber_hurwitz_coeff(args.genus, alpha)), "recursion")
    if args.double is not None:
        v = hurwitz.double_hurwitz_bruteforce(
            args.genus, alpha, args.double, connected=not args.disconnected, **caps
        )
        return _Result(_q(v), "bruteforce")
    if args.closed_form:
        if args.genus != 0:
            raise ValueError("the closed form is for genus 0")
        return _Result(_q(hurwitz.hurwitz_genus0(alpha)), "closed-form")
    v = hurwitz.hurwitz_bruteforce(
        args.genus, alpha, connected=not args.disconnected, workers=args.workers, **caps
    )
    return _Result(_q(v), "bruteforce")


def _cache_table(path: str | None) -> intersections.IntersectionTable:
    path = path or os.environ.get("TAUTKIT_CACHE")
    if path:
        return intersections.IntersectionTable(path)
    return intersections.default_table()


def cmd_psi(args) -> _Result:
    table = _cache_table(args.cache)
    key = intersections.CorrelatorKey(args.genus, tuple(args.exps))
    value = intersections.witten_correlator(key, table=table)
    table.flush()
    prov = "closed-form" if key.g == 0 else "kdv"
    return _Result(_q(value), prov)


def cmd_hodge(args) -> _Result:
    rows = intersections.hodge_from_hurwitz(
        args.genus, args.points, max_degree=args.max_degree, max_branch=args.max_branch
    )
    value = [{"a": list(h.a), "k": h.k, "value": _q(h.value)} for h in rows]
    text = "\n".join(
        f"psi^{list(h.a)} lambda_{h.k}: {_q(h.value)}" for h in rows
    )
    return _Result(value, "elsv", text)


def cmd_elsv(args) -> _Result:
    alpha = tuple(args.profile)
    n = len(alpha)
    caps = dict(max_degree=args.max_degree, max_branch=args.max_branch)
    if intersections.is_stable_gn(args.genus, n):
        table = intersections.hodge_from_hurwitz(args.genus, n, **caps)
    else:
        table = []
    forward = intersections.elsv_forward(args.genus, alpha, table)
    brute = hurwitz.hurwitz_bruteforce(args.genus, alpha, **caps)
    agree = forward == brute
    value = {"elsv": _q(forward), "bruteforce": _q(brute), "agree": agree}
    text = f"elsv {_q(forward)}\nbruteforce {_q(brute)}\n{'agree' if agree else 'DISAGREE'}"
    return _Result(value, "elsv", text, EXIT_OK if agree else EXIT_MISMATCH)


def cmd_faber(args) -> _Result:
    if args.solve:
        sol = faber.kappa_solve(args.genus)
        if not sol.determined:
            value = {"unresolved": [str(m) for m in sol.unresolved]}
            text = "underdetermined: " + ", ".join(value["unresolved"])
        else:
            value = {str(m): _q(c) for m, c in sorted(sol.values.items())}
            text = "\n".join(f"{m} = {c} k{args.genus - 2}" for m, c in value.items())
        return _Result(value, "closed-form", text)
    if args.d is None:
        raise ValueError("faber needs --d or --solve")
    ident = faber.faber_identity(args.genus, args.d)
    rhs = {str(m): c for m, c in ident.rhs.items()}
    value = {"lhs_coeff": _q(ident.lhs_coeff), "rhs": rhs}
    text = " + ".join(f"{c}*{m}" for m, c in rhs.items()) + f" = {_q(ident.lhs_coeff)} k{args.genus - 2}"
    return _Result(value, "closed-form", text)


def cmd_graphs(args) -> _Result:
    classes = graphs.enumerate_stable(
        args.genus,
        args.legs,
        connected=not args.disconnected,
        dim=args.dim,
        trees_only=args.trees,
        max_dim=args.max_dim,
    )
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            for i, c in enumerate(classes):
                fh.write(graphs.to_dot(c.canonical, name=f"G{i}"))
    if args.count:
        return _Result(len(classes), "bruteforce", str(len(classes)))
    value = [c.to_json() for c in classes]
    text = "\n".join(json.dumps(v, sort_keys=True) for v in value)
    return _Result(value, "bruteforce", text)


def cmd_rl(args) -> _Result:
    if args.fixture == "m05":
        S = invariance.cross_ratio_relation_m05()
    elif args.input:
        if args.input == "-":
            S = invariance.GraphSum.from_json(sys.stdin.read())
        else:
            with open(args.input, encoding="utf-8") as fh:
                S = invariance.GraphSum.from_json(fh.read())
    else:
        raise ValueError("rl needs --input or --fixture")
    out = invariance.rl_apply(S, args.l)
    if args.points:
        out = invariance.point_normal_form(out)
    value = json.loads(out.to_json())
    text = "\n".join(json.dumps(t, sort_keys=True) for t in value) if value else "0"
    return _Result(value, "recursion", text)


def cmd_euler(args) -> _Result:
    if args.legs is None:
        return _Result(_q(euler_char_mg(args.genus)), "closed-form")
    return _Result(_q(euler_char_mgn(args.genus, args.legs)), "closed-form")


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit one JSON record")
    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument("--max-degree", type=int, default=hurwitz.DEFAULT_MAX_DEGREE)
    caps.add_argument("--max-branch", type=int, default=hurwitz.DEFAULT_MAX_BRANCH)

    p = argparse.ArgumentParser(prog="tautkit", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", default=False, help="emit one JSON record")
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hurwitz", parents=[common, caps], help="Hurwitz numbers")
    h.add_argument("--genus", type=int, required=True)
    h.add_argument("--profile", type=_profile, required=True)
    h.add_argument("--disconnected", action="store_true")
    h.add_argument("--double", type=_profile, default=None, help="second profile over 0")
    h.add_argument("--closed-form", action="store_true", help="genus-0 closed formula")
    h.add_argument("--faber-hurwitz", action="store_true", help="join-cut coefficient of Z_{g,1}")
    h.add_argument("--workers", type=int, default=1)
    h.set_defaults(func=cmd_hurwitz)

    s = sub.add_parser("psi", parents=[common], help="psi-class intersection numbers")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--exps", type=_ints, required=True)
    s.add_argument("--cache", default=None, help="append-only cache file")
    s.set_defaults(func=cmd_psi)

    o = sub.add_parser("hodge", parents=[common, caps], help="Hodge integrals from Hurwitz numbers")
    o.add_argument("--genus", type=int, required=True)
    o.add_argument("--points", type=int, required=True)
    o.set_defaults(func=cmd_hodge)

    e = sub.add_parser("elsv", parents=[common, caps], help="ELSV versus brute force")
    e.add_argument("--genus", type=int, required=True)
    e.add_argument("--profile", type=_profile, required=True)
    e.set_defaults(func=cmd_elsv)

    f = sub.add_parser("faber", parents=[common], help="kappa identities")
    f.add_argument("--genus", type=int, required=True)
    f.add_argument("--d", type=_ints, default=None)
    f.add_argument("--solve", action="store_true")
    f.set_defaults(func=cmd_faber)

    g = sub.add_parser("graphs", parents=[common], help="stable dual graphs")
    g.add_argument("--genus", type=int, required=True)
    g.add_argument("--legs", type=int, required=True)
    g.add_argument("--dim", type=int, default=None)
    g.add_argument("--disconnected", action="store_true")
    g.add_argument("--trees", action="store_true")
    g.add_argument("--dot", default=None)
    g.add_argument("--count", action="store_true")
    g.add_argument("--max-dim", type=int, default=graphs.DEFAULT_MAX_DIM)
    g.set_defaults(func=cmd_graphs)

    r = sub.add_parser("rl", parents=[common], help="apply the r_l operator")
    r.add_argument("--l", type=int, required=True)
    r.add_argument("--input", default=None, help="GraphSum JSON file, or - for stdin")
    r.add_argument("--fixture", choices=["m05"], default=None)
    r.add_argument("--points", action="store_true", help="reduce a dimension-0 result to degrees")
    r.set_defaults(func=cmd_rl)

    x = sub.add_parser("euler", parents=[common], help="orbifold Euler characteristics")
    x.add_argument("--genus", type=int, required=True)
    x.add_argument("--legs", type=int, default=None)
    x.set_defaults(func=cmd_euler)
    return p


def _inputs(args) -> dict:
    skip = {"func", "json", "command"}
    out = {}
    for k, v in sorted(vars(args).items()):
        if k in skip:
            continue
        out[k] = list(v) if isinstance(v, tuple) else v
    return out


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        result = args.func(args)
    except ResourceCapError as exc:
        print(f"tautkit: resource cap: {exc}", file=err)
        return EXIT_CAP
    except (TautkitError, ValueError, OSError) as exc:
        print(f"tautkit: {exc}", file=err)
        return EXIT_USAGE
    if args.json:
        record = {
            "command": args.command,
            "inputs": _inputs(args),
            "value": result.value,
            "provenance": result.provenance,
        }
        out.write(json.dumps(record, sort_keys=True) + "\n")
    else:
        out.write(f"{result.text}\n")
    return result.status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
