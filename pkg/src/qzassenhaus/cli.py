"""
Command-line front end.

    qzx derive --variant escalating --order 4 --format latex
    qzx verify --symbolic --order 6
    qzx verify --numeric --order 4 --q 0.7 --seed 42
    qzx limit --variant escalating --order 4
    qzx report

Exit status: 0 when every selected check passes, 1 on a verification
failure, 2 on a usage or configuration error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .disentangler import (
    ClassicalLimitError,
    Factorization,
    annihilated,
    classical_limit,
    derive_qbch,
    derive_zassenhaus,
    transform_variant,
    verify_reconstruction,
)
from .export import dumps, loads, to_latex, to_text
from .gseries import max_order
from .qfield import PoleError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _derive(variant: str, order: int) -> Factorization:
    if variant == "qbch":
        return derive_qbch(order)
    return derive_zassenhaus(variant, order)


def _render(f: Factorization, fmt: str, config: dict) -> str:
    if fmt == "latex":
        return to_latex(f) + "\n"
    if fmt == "json":
        return dumps(f, config)
    return to_text(f)


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _order_type(text: str) -> int:
    cap = max_order()
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"order must be an integer, got {text!r}") from None
    if not 2 <= n <= cap:
        raise argparse.ArgumentTypeError(f"order must lie in [2, {cap}] (cap {cap}), got {n}")
    return n


def cmd_derive(args) -> int:
    f = _derive(args.variant, args.order)
    if args.convention != "jackson":
        if args.variant == "qbch":
            raise _UsageError("--convention applies only to product variants")
        f = transform_variant(f, args.convention)
    config = {"command": "derive", "variant": args.variant, "order": args.order,
              "convention": args.convention}
    _emit(_render(f, args.format, config), args.output)
    return EXIT_OK


def cmd_limit(args) -> int:
    if args.input:
        f = loads(Path(args.input).read_text(encoding="utf-8"))
        config = {"command": "limit", "input": args.input}
    else:
        if not args.variant or not args.order:
            raise _UsageError("limit needs --input or both --variant and --order")
        f = _derive(args.variant, args.order)
        config = {"command": "limit", "variant": args.variant, "order": args.order}
    try:
        g = classical_limit(f)
    except ClassicalLimitError as exc:
        print(f"pole in classical limit: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(_render(g, args.format, config), args.output)
    return EXIT_OK


def _symbolic_checks(N: int):
    for variant in ("escalating", "uniform", "qbch"):
        f = _derive(variant, N)
        res = verify_reconstruction(f)
        first = res.first_nonzero()
        yield (f"{variant}: reconstruction residual zero through x^{N}",
               first is None, "zero" if first is None else f"first nonzero grade {first}")
        ann = annihilated(f)
        bad = [g for g, ok in ann.items() if not ok]
        yield (f"{variant}: exponents vanish under BA -> q AB (grades 2-{N})",
               not bad, "all grades" if not bad else f"failing grades {bad}")
        hom = [x.grade for x in f.factors if not x.exponent.is_homogeneous(x.grade)]
        yield (f"{variant}: exponent at grade n homogeneous of degree n",
               not hom, "ok" if not hom else f"failing grades {hom}")
        if variant == "escalating":
            for target in ("e_lower", "E_upper"):
                g = transform_variant(f, target)
                first = verify_reconstruction(g).first_nonzero()
                yield (f"{variant} in {target} convention: reconstruction",
                       first is None, "zero" if first is None else f"first nonzero grade {first}")
                bad = [k for k, ok in annihilated(g).items() if not ok]
                yield (f"{variant} in {target} convention: collapse relation",
                       not bad, "all grades" if not bad else f"failing grades {bad}")


def _numeric_checks(N: int, cfg):
    from .matoracle import residual_order
    for variant in ("escalating", "uniform", "qbch"):
        r = residual_order(_derive(variant, N), cfg)
        yield (f"{variant}: residual slope >= {r.required:g} (dim {cfg.dim}, q {cfg.q0}, seed {cfg.seed})",
               r.passed, f"slope {r.slope:.3f}")


def cmd_verify(args) -> int:
    N = args.order
    selected = []
    if args.numeric:
        from .matoracle import OracleConfig
        if args.q == 1.0:
            raise _UsageError("--q must differ from 1; use the limit subcommand for q = 1")
        try:
            cfg = OracleConfig(dim=args.dim, q0=args.q, seed=args.seed, exact=args.exact)
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
        selected.append(("numeric", lambda: _numeric_checks(N, cfg)))
    if args.symbolic or not args.numeric:
        selected.insert(0, ("symbolic", lambda: _symbolic_checks(N)))
    failures = 0
    try:
        for group, checks in selected:
            print(f"[{group}]")
            for name, ok, detail in checks():
                failures += not ok
                print(f"  {'PASS' if ok else 'FAIL'}  {name}: {detail}")
    except PoleError as exc:
        print(f"  FAIL  pole at the chosen q: {exc}")
        return EXIT_FAIL
    print(f"{'all checks passed' if not failures else f'{failures} check(s) failed'}")
    return EXIT_OK if not failures else EXIT_FAIL


def cmd_report(args) -> int:
    from .literature import discrepancy_report
    for c in discrepancy_report():
        print(c.line())
    return EXIT_OK


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qzx", description="Derive and verify q-analogues of the Zassenhaus formula.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("derive", help="derive a factorization")
    d.add_argument("--variant", choices=("escalating", "uniform", "qbch"), default="escalating")
    d.add_argument("--order", type=_order_type, default=4)
    d.add_argument("--format", choices=("text", "latex", "json"), default="text")
    d.add_argument("--convention", choices=("jackson", "e_lower", "E_upper"), default="jackson")
    d.add_argument("-o", "--output", help="write to a file instead of stdout")
    d.set_defaults(func=cmd_derive)

    v = sub.add_parser("verify", help="run symbolic and/or numeric verification")
    v.add_argument("--symbolic", action="store_true", help="exact reconstruction and collapse checks")
    v.add_argument("--numeric", action="store_true", help="random-matrix residual scaling")
    v.add_argument("--order", type=_order_type, default=4)
    v.add_argument("--dim", type=int, default=4, help="matrix size (default 4)")
    v.add_argument("--q", type=float, default=0.7, help="numeric value of q, not 1 (default 0.7)")
    v.add_argument("--seed", type=int, default=42, help="RNG seed for the matrices")
    v.add_argument("--exact", action="store_true", help="exact rational matrix arithmetic")
    v.set_defaults(func=cmd_verify)

    lim = sub.add_parser("limit", help="classical q -> 1 limit of a factorization")
    lim.add_argument("--variant", choices=("escalating", "uniform", "qbch"))
    lim.add_argument("--order", type=_order_type)
    lim.add_argument("--input", help="JSON document written by 'derive --format json'")
    lim.add_argument("--format", choices=("text", "latex", "json"), default="text")
    lim.add_argument("-o", "--output", help="write to a file instead of stdout")
    lim.set_defaults(func=cmd_limit)

    r = sub.add_parser("report", help="compare published low-order coefficients with the solver")
    r.set_defaults(func=cmd_report)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"qzx: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError) as exc:
        print(f"qzx: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
