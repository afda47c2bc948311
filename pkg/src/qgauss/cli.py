"""Command-line front end.

Exit codes: 0 success, 1 failed verification, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import counting
from .birkhoff import (
    DEFAULT_MAX_IDEALS,
    decompose_birkhoff,
    ideals,
    is_cover_free,
    load_poset,
    parse_subset,
)
from .errors import QGaussError
from .omega_lattice import (
    decompose_r,
    q1q_binomial,
    r_analogue_binomial,
    rank_factor_text,
)
from .qpoly import gaussian_oracle
from .verify import CHECKS, run_check
from .words import DEFAULT_MAX_N, inv, macmahon_sum

METHODS = ("product", "inversion", "q1q", "r_analogue")


def _emit(args, text: str, data) -> None:
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _max_n(args) -> int:
    if args.max_n != DEFAULT_MAX_N:
        print(f"warning: enumeration cap raised to n <= {args.max_n}", file=sys.stderr)
    return args.max_n


def _factored_sum(n: int, k: int, r: int, cap: int) -> str:
    blocks = decompose_r(n, k, r, cap)
    return " + ".join(rank_factor_text(inv(b.bottom), r, b.block_stats) for b in blocks) or "0"


def cmd_gauss(args) -> int:
    if args.method == "r_analogue" and (args.r is None or args.r < 2):
        raise QGaussError("--method r_analogue needs --r >= 2")
    if args.n < 0:
        raise QGaussError("--n must be non-negative")
    if args.method == "product":
        poly = gaussian_oracle(args.n, args.k)
    elif args.method == "inversion":
        poly = macmahon_sum(args.n, args.k, _max_n(args))
    elif args.method == "q1q":
        poly = q1q_binomial(args.n, args.k, _max_n(args))
    else:
        poly = r_analogue_binomial(args.n, args.k, args.r, _max_n(args))
    data = {"n": args.n, "k": args.k, "method": args.method, "coeffs": list(poly.coeffs),
            "text": poly.to_text()}
    text = poly.to_text()
    if args.method in ("q1q", "r_analogue"):
        r = 2 if args.method == "q1q" else args.r
        data["r"] = r
        data["factored"] = _factored_sum(args.n, args.k, r, args.max_n) if 0 <= args.k <= args.n else "0"
        if args.factored:
            text = f"{data['factored']}\n= {text}"
    _emit(args, text, data)
    return 0


def cmd_table(args) -> int:
    if args.nmax < 0:
        raise QGaussError("--nmax must be non-negative")
    tri = counting.build_triangle(args.stat, args.nmax)
    _emit(args, tri.to_text(), tri.to_json())
    return 0


def cmd_decompose(args) -> int:
    if args.r < 1:
        raise QGaussError("--r must be at least 1")
    blocks = decompose_r(args.n, args.k, args.r, _max_n(args))
    lines = []
    for b in blocks:
        members = "{" + ", ".join(map(str, b.members)) + "}" if not args.counts else f"{len(b)} members"
        lines.append(f"{b.bottom} -> {members} : {b.rank_text()}")
    data = {"n": args.n, "k": args.k, "r": args.r, "blocks": [b.to_json() for b in blocks]}
    _emit(args, "\n".join(lines), data)
    return 0


def cmd_poset(args) -> int:
    P = load_poset(args.file)
    if args.max_ideals != DEFAULT_MAX_IDEALS:
        print(f"warning: ideal cap set to {args.max_ideals}", file=sys.stderr)
    if args.action == "birkhoff":
        js = ideals(P, args.max_ideals)
        text = f"{len(js)} ideals\n" + "\n".join(map(str, js))
        _emit(args, text, {"count": len(js), "ideals": [sorted(I.members) for I in js]})
        return 0
    subset = parse_subset(args.subset or "")
    if not is_cover_free(P, subset):
        raise QGaussError(f"subset {sorted(subset)} contains a cover pair")
    if args.action == "decompose":
        blocks = decompose_birkhoff(P, subset, args.max_ideals)
        text = "\n".join(
            f"[{b.bottom}, {b.top}] -> {{{', '.join(map(str, b.interval))}}} : {b.rank_poly}"
            for b in blocks
        )
        data = {"blocks": [
            {"bottom": sorted(b.bottom.members), "top": sorted(b.top.members),
             "interval": [sorted(I.members) for I in b.interval],
             "rank_poly": list(b.rank_poly.coeffs)}
            for b in blocks
        ]}
        _emit(args, text, data)
        return 0
    report = run_check("birkhoff_decomposition", {"poset": P, "subset": subset})
    _emit(args, report.to_text(), report.to_json())
    return 0 if report.passed else 1


def cmd_verify(args) -> int:
    params = {"n_max": args.nmax, "r": args.r, "seed": args.seed, "subset": None}
    if args.max_n != DEFAULT_MAX_N:
        params["max_n"] = _max_n(args)
    if args.file:
        params["poset"] = load_poset(args.file)
        if args.subset is not None:
            params["subset"] = parse_subset(args.subset)
    report = run_check(args.check, params, verbose=args.verbose)
    _emit(args, report.to_text(), report.to_json())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qgauss", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, enum=True):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if enum:
            p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                           help=f"word enumeration cap (default {DEFAULT_MAX_N})")

    p = sub.add_parser("gauss", help="compute a q-binomial coefficient")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="product")
    p.add_argument("--r", type=int)
    p.add_argument("--factored", action="store_true", help="also print the factored sum")
    common(p)
    p.set_defaults(func=cmd_gauss)

    p = sub.add_parser("table", help="print the er or frst triangle")
    p.add_argument("--stat", choices=("er", "frst"), required=True)
    p.add_argument("--nmax", type=int, default=10)
    common(p, enum=False)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("decompose", help="decompose the word lattice into fibres")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--counts", action="store_true", help="print member counts only")
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("poset", help="ideals and Boolean decomposition of J(P)")
    p.add_argument("--file", required=True)
    p.add_argument("--subset", help="comma-separated cover-free subset, e.g. 2,5,7")
    p.add_argument("--action", choices=("birkhoff", "decompose", "verify"), default="birkhoff")
    p.add_argument("--max-ideals", type=int, default=DEFAULT_MAX_IDEALS)
    common(p, enum=False)
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("verify", help="run a named verification check")
    p.add_argument("--check", choices=sorted(CHECKS), required=True)
    p.add_argument("--nmax", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--file")
    p.add_argument("--subset")
    p.add_argument("--verbose", action="store_true", help="report every counterexample")
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except QGaussError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
