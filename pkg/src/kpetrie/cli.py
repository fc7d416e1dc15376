"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 cross-method disagreement,
64 flag or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .oracle import cyclotomic_eval_schur
from .partitions import SkewShape, contains, format_partition, parse_partition
from .petrie import (
    petrie_core,
    petrie_det,
    petrie_tiling,
    pieri_expand,
    plethystic_mn_expand,
    specialize_roots,
)
from .tilings import census, enumerate_proper_tilings, k_core, render_shape, render_tiling, ribbon_decomposition
from .verify import SUITES, run_suites

EX_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def build_parser() -> _Parser:
    parser = _Parser(prog="kpetrie", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("petrie", help="compute one k-Petrie number")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=parse_partition, required=True)
    p.add_argument("--mu", type=parse_partition, default=())
    p.add_argument(
        "--method", choices=("det", "tiling", "core", "all"), default="all"
    )

    p = sub.add_parser("expand", help="Schur expansion of G(k, m) times s_mu")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mu", type=parse_partition, default=())
    p.add_argument("--method", choices=("det", "tiling"), default="det")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("mn", help="Schur expansion of (p_k o h_n) times s_nu")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--nu", type=parse_partition, default=())
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("tilings", help="list or tally proper tilings")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=parse_partition, required=True)
    p.add_argument("--mu", type=parse_partition, default=())
    p.add_argument("--n", type=int, default=None, help="restrict to |nu/mu| = N")
    p.add_argument("--render", action="store_true")
    p.add_argument("--census", action="store_true")

    p = sub.add_parser("kcore", help="k-core and optional ribbon chain")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=parse_partition, required=True)
    p.add_argument("--chain", action="store_true")

    p = sub.add_parser(
        "specialize", help="skew Schur value at omega, ..., omega^(k-1)"
    )
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=parse_partition, required=True)
    p.add_argument("--mu", type=parse_partition, default=())

    p = sub.add_parser("verify", help="run verification sweeps")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-size", type=int, default=9)
    p.add_argument("--max-k", type=int, default=5)

    p = sub.add_parser("render", help="ASCII diagram of a skew shape")
    p.add_argument("--lambda", dest="lam", type=parse_partition, required=True)
    p.add_argument("--mu", type=parse_partition, default=())

    return parser


def _require_nested(parser, mu, lam):
    if not contains(mu, lam):
        parser.error(
            f"mu={format_partition(mu)} does not fit inside lambda={format_partition(lam)}"
        )


def _cmd_petrie(parser, args) -> int:
    if args.method == "core" and args.mu:
        parser.error('--method core needs an empty --mu')
    values = {}
    if args.method in ("det", "all"):
        values["det"] = petrie_det(args.k, args.lam, args.mu)
    if args.method in ("tiling", "all"):
        values["tiling"] = petrie_tiling(args.k, args.lam, args.mu)
    if args.method == "core" or (args.method == "all" and not args.mu):
        values["core"] = petrie_core(args.k, args.lam)
    if len(set(values.values())) > 1:
        print(f"method disagreement: {values}", file=sys.stderr)
        return 2
    print(next(iter(values.values())))
    return 0


def _expansion_json(expansion, **meta):
    payload = dict(meta)
    payload["terms"] = expansion.to_terms()
    return json.dumps(payload)


def _cmd_expand(parser, args) -> int:
    expansion = pieri_expand(args.k, args.m, args.mu, method=args.method)
    if args.json:
        print(_expansion_json(expansion, k=args.k, m=args.m, mu=list(args.mu)))
    else:
        print(expansion)
    return 0


def _cmd_mn(parser, args) -> int:
    expansion = plethystic_mn_expand(args.k, args.n, args.nu)
    if args.json:
        print(_expansion_json(expansion, k=args.k, n=args.n, nu=list(args.nu)))
    else:
        print(expansion)
    return 0


def _cmd_tilings(parser, args) -> int:
    _require_nested(parser, args.mu, args.lam)
    shape = SkewShape(args.lam, args.mu)
    if args.census:
        rows = census(args.k, shape)
        print("n total odd even")
        for n, cc in rows.items():
            if args.n is not None and n != args.n:
                continue
            print(f"{n} {cc.total} {cc.odd} {cc.even}")
        return 0
    mu_size = sum(args.mu)
    shown = 0
    for t in enumerate_proper_tilings(args.k, shape):
        n = sum(t.nu) - mu_size
        if args.n is not None and n != args.n:
            continue
        shown += 1
        parity = "odd" if t.is_odd() else "even"
        print(
            f"nu={format_partition(t.nu)} n={n} ribbons={len(t.ribbons)} "
            f"rows={t.ribbon_rows()} parity={parity}"
        )
        if args.render and shape.outer:
            print(render_tiling(shape, t))
            print()
    print(f"total {shown}")
    return 0


def _cmd_kcore(parser, args) -> int:
    core = k_core(args.lam, args.k)
    print(format_partition(core))
    if args.chain:
        cur = core
        print(f"chain: {format_partition(cur)}")
        for step in ribbon_decomposition(args.lam, args.k):
            print(f"  + {step.size()}-ribbon -> {format_partition(step.outer)}")
    return 0


def _cmd_specialize(parser, args) -> int:
    _require_nested(parser, args.mu, args.lam)
    shape = SkewShape(args.lam, args.mu)
    value = specialize_roots(args.k, shape)
    oracle = cyclotomic_eval_schur(args.k, shape)
    oracle_text = (
        str(oracle.rational_value()) if oracle.is_rational_integer() else repr(oracle)
    )
    print(f"specialize: {value}")
    print(f"oracle: {oracle_text}")
    if oracle != value:
        print("MISMATCH", file=sys.stderr)
        return 2
    return 0


def _cmd_verify(parser, args) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    failed = False
    for result in run_suites(names, max_size=args.max_size, max_k=args.max_k):
        print(result.summary())
        for line in result.failures[:10]:
            print(f"  {line}")
        if len(result.failures) > 10:
            print(f"  ... and {len(result.failures) - 10} more")
        failed = failed or not result.passed
    return 1 if failed else 0


def _cmd_render(parser, args) -> int:
    _require_nested(parser, args.mu, args.lam)
    print(render_shape(SkewShape(args.lam, args.mu)))
    return 0


_COMMANDS = {
    "petrie": _cmd_petrie,
    "expand": _cmd_expand,
    "mn": _cmd_mn,
    "tilings": _cmd_tilings,
    "kcore": _cmd_kcore,
    "specialize": _cmd_specialize,
    "verify": _cmd_verify,
    "render": _cmd_render,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EX_USAGE
    try:
        return _COMMANDS[args.command](parser, args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EX_USAGE
    except ValueError as exc:
        print(f"kpetrie: error: {exc}", file=sys.stderr)
        return EX_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
