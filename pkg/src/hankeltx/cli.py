"""Command-line front end.

Exit codes: 0 success / all identities pass, 1 an identity failed,
2 configuration, parse or I/O error.  ``HANKELTX_FORMAT`` sets the default
output format; ``--format`` overrides it.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import closedforms as cf
from .bfile import FORMATS, emit, parse_bfile
from .errors import ConfigError, HankelError
from .seqcore import Params, Seq, shift, u_sequence
from .transforms import aerate, aerate_alpha, binomial_transform, hankel_transform, scale_pointwise
from .verify import DEFAULT_GRID, IDENTITIES, TABLE_TARGETS, RunConfig, render_reports, run_table, run_verify

ENV_FORMAT = "HANKELTX_FORMAT"


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _read_seq(path: str) -> Seq:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_bfile(text)


def read_grid(path: str) -> tuple:
    """One ``alpha beta`` (or ``alpha,beta``) pair per line; ``#`` comments."""
    grid = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            grid.append(Params.parse(line))
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError(f"{path}:{lineno}: {exc}") from None
    return tuple(grid)


def _seq_format(args) -> str:
    fmt = args.format or os.environ.get(ENV_FORMAT) or "bfile"
    if fmt not in FORMATS:
        raise ConfigError(f"unknown output format {fmt!r}")
    return fmt


def _report_format(args) -> str:
    if args.format:
        if args.format not in ("csv", "json"):
            raise ConfigError("reports and tables are written as csv or json")
        return args.format
    env = os.environ.get(ENV_FORMAT)
    return env if env in ("csv", "json") else "csv"


def _write(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") or not text else text + "\n")


def _params(args) -> Params:
    if args.alpha is None or args.beta is None:
        raise ConfigError("--alpha and --beta are required")
    return Params(args.alpha, args.beta)


def cmd_gen(args) -> int:
    s = u_sequence(_params(args), args.len)
    if args.shift:
        s = shift(s, args.shift)
    fmt = _seq_format(args)
    _write(emit(s, fmt))
    return 0


def cmd_transform(args) -> int:
    s = _read_seq(args.input)
    op = args.op
    if op == "binomial":
        out = binomial_transform(s, _need(args.alpha, "--alpha"))
    elif op == "aerate":
        out = aerate(s)
    elif op == "aerate-alpha":
        out = aerate_alpha(s, _need(args.alpha, "--alpha"))
    elif op == "scale":
        out = scale_pointwise(s, _need(args.r, "--r"))
    else:
        out = shift(s, _need(args.k, "--k"))
    fmt = _seq_format(args)
    _write(emit(out, fmt))
    return 0


def _need(value, flag):
    if value is None:
        raise ConfigError(f"{flag} is required for this operation")
    return value


def cmd_hankel(args) -> int:
    fmt = _seq_format(args)
    _write(emit(hankel_transform(_read_seq(args.input)), fmt))
    return 0


_SEQUENCE_TARGETS = {
    "h": cf.h_closed,
    "hstar": cf.hstar_closed,
    "hstarstar": cf.hstarstar_closed,
    "hhat": cf.hhat_closed,
    "hcheck": cf.hcheck_closed,
}


def cmd_closed(args) -> int:
    target = args.target
    if target in _SEQUENCE_TARGETS:
        p = _params(args)
        out = Seq(tuple(_SEQUENCE_TARGETS[target](p, n) for n in range(args.nmax + 1)))
    elif target == "krattenthaler":
        rows = [int(x) for x in _need(args.rows, "--rows").split(",") if x.strip()]
        print(cf.krattenthaler_det(rows))
        return 0
    else:
        fn = cf.lemma72_closed if target == "lem72" else cf.lemma73_closed
        beta, k = _need(args.beta, "--beta"), _need(args.k, "--k")
        if args.l is not None:
            print(fn(beta, k, args.l))
            return 0
        out = Seq(tuple(fn(beta, k, l) for l in range(k)))
    fmt = _seq_format(args)
    _write(emit(out, fmt))
    return 0


def cmd_verify(args) -> int:
    if args.grid:
        grid = read_grid(args.grid)
    elif args.default_grid:
        grid = DEFAULT_GRID
    else:
        raise ConfigError("give --grid FILE or --default-grid")
    only = tuple(x.strip() for x in args.only.split(",") if x.strip()) if args.only else ()
    cfg = RunConfig(
        command="verify",
        n_max=args.nmax,
        output_format=_report_format(args),
        seed=args.seed,
        grid=grid,
        only=only,
        force=args.force,
        literal_eq5=args.literal_eq5,
    )
    reports = run_verify(cfg)
    sys.stdout.write(render_reports(reports, cfg.output_format))
    return 0 if all(r.passed for r in reports) else 1


def cmd_table(args) -> int:
    cfg = RunConfig(
        command="table",
        params=_params(args),
        n_max=args.nmax,
        output_format=_report_format(args),
        target=args.target,
    )
    sys.stdout.write(run_table(cfg))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hankeltx",
        description="Exact Hankel transforms of reverted series and aerated sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, rational_flags=("alpha", "beta")):
        for name in rational_flags:
            p.add_argument(f"--{name}", type=_rational)
        p.add_argument("--format", choices=FORMATS)

    p = sub.add_parser("gen", help="reversion u_n of x/(1 + alpha x + beta x^2)")
    common(p)
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--shift", type=int, default=0, help="drop the first K terms (1: u*, 2: u**)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("transform", help="apply a sequence transform to a b-file")
    common(p, ("alpha", "r"))
    p.add_argument("--op", required=True, choices=["binomial", "aerate", "aerate-alpha", "scale", "shift"])
    p.add_argument("--k", type=int)
    p.add_argument("--in", dest="input", required=True, help="b-file path or - for stdin")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("hankel", help="Hankel transform of a b-file")
    common(p, ())
    p.add_argument("--in", dest="input", required=True)
    p.set_defaults(func=cmd_hankel)

    p = sub.add_parser("closed", help="evaluate a closed form")
    common(p)
    p.add_argument("--target", required=True,
                   choices=list(_SEQUENCE_TARGETS) + ["krattenthaler", "lem72", "lem73"])
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--rows", help="comma-separated offsets for krattenthaler")
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.set_defaults(func=cmd_closed)

    p = sub.add_parser("verify", help="check identities over a parameter grid",
                       epilog="identities: " + ", ".join(sorted(IDENTITIES)))
    p.add_argument("--format", choices=FORMATS)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--grid", help="file with one 'alpha beta' pair per line")
    g.add_argument("--default-grid", action="store_true")
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--only", help="comma-separated identity ids")
    p.add_argument("--seed", type=int, default=0, help="seed for the random integer corpus")
    p.add_argument("--force", action="store_true", help="allow --nmax above 8")
    p.add_argument("--literal-eq5", action="store_true",
                   help="use the 2^(n+1)-normalised form for thm22 (expected to fail)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="closed form against brute-force determinants")
    common(p)
    p.add_argument("--target", required=True, choices=TABLE_TARGETS)
    p.add_argument("--nmax", type=int, default=6)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (HankelError, OSError, ValueError) as exc:
        print(f"hankeltx: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
