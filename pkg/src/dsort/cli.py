"""Command-line surface for the DS/RDS engines.

Subcommands mirror the library: ``lds`` and ``layers`` run the procedural
core on one sequence, ``exact-ds``/``exact-rds`` tabulate the exact
expectations, ``simulate`` and ``asymptotics`` run seeded Monte Carlo, and
``selftest`` executes the named invariant suites.  Report subcommands emit
CSV (or a field-for-field JSON mirror) and can render a figure alongside
via ``--plot``; identical flags always produce byte-identical files.

Exit codes: 0 success, 2 parse/usage error, 3 engine bound exceeded,
4 selftest failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import montecarlo, plancherel, selftest, stirling
from .core import ds_layers
from .errors import (
    DsortError,
    DuplicateValues,
    NotAPermutation,
    OutOfTableRange,
    ParseError,
    SizeLimitExceeded,
)
from .lds import lds_fast
from .numfmt import decimal_str, rational_str

SEED_ENV_VAR = "DSORT_SEED"
RDS_EXACT_BOUND = 500


def _parse_number(token: str, position: int):
    try:
        return int(token)
    except ValueError:
        pass
    try:
        return float(token)
    except ValueError:
        raise ParseError(f"cannot parse token {token!r} at position {position}") from None


def parse_sequence(text: str) -> list:
    """Numbers from inline text or from a file via ``@path``.

    Accepts comma and/or whitespace separators; integers stay integers.
    """
    if text.startswith("@"):
        path = Path(text[1:])
        try:
            text = path.read_text()
        except OSError as exc:
            raise ParseError(f"cannot read sequence file {str(path)!r}: {exc}") from None
    tokens = text.replace(",", " ").split()
    return [_parse_number(tok, i) for i, tok in enumerate(tokens, start=1)]


def parse_n_values(text: str) -> list[int]:
    """Sizes from ``N``, ``A:B`` (inclusive), or a comma list."""
    out: list[int] = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            raise ParseError(f"empty size entry in {text!r}")
        if ":" in piece:
            lo_txt, _, hi_txt = piece.partition(":")
            try:
                lo, hi = int(lo_txt), int(hi_txt)
            except ValueError:
                raise ParseError(f"cannot parse size range {piece!r}") from None
            if lo > hi:
                raise ParseError(f"empty size range {piece!r}")
            out.extend(range(lo, hi + 1))
        else:
            try:
                out.append(int(piece))
            except ValueError:
                raise ParseError(f"cannot parse size {piece!r}") from None
    if any(n < 0 for n in out):
        raise ParseError("sizes must be nonnegative")
    return out


def _fmt_value(v) -> str:
    return str(v) if isinstance(v, int) else repr(v)


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _rows_to_csv(header: list[str], rows: list[dict]) -> str:
    def cell(v) -> str:
        if v is None:
            return ""
        if isinstance(v, float):
            return repr(v)
        return str(v)

    lines = [",".join(header)]
    lines += [",".join(cell(r[h]) for h in header) for r in rows]
    return "\n".join(lines) + "\n"


def _rows_to_json(rows: list[dict]) -> str:
    return json.dumps(rows, indent=2) + "\n"


def _write_report(args, header: list[str], rows: list[dict]) -> None:
    if args.format == "json":
        _emit(_rows_to_json(rows), args.output)
    else:
        _emit(_rows_to_csv(header, rows), args.output)


def _default_seed() -> int:
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ParseError(f"{SEED_ENV_VAR} must be an integer, got {env!r}") from None
    return 0


# ---------------------------------------------------------------- commands


def _cmd_lds(args) -> int:
    seq = parse_sequence(" ".join(args.sequence))
    print(lds_fast(seq))
    if args.layers:
        for values in ds_layers(seq).layer_values(seq):
            print("[" + ",".join(_fmt_value(v) for v in values) + "]")
    return 0


def _cmd_layers(args) -> int:
    seq = parse_sequence(" ".join(args.sequence))
    dec = ds_layers(seq)
    if args.indices:
        for layer in dec.layers:
            print("{" + ",".join(str(i) for i in layer) + "}")
    else:
        for values in dec.layer_values(seq):
            print("[" + ",".join(_fmt_value(v) for v in values) + "]")
    return 0


def _exact_values(variant: str, ns: list[int]) -> list[tuple[int, Fraction]]:
    if variant == "rds":
        top = max(ns)
        if top > RDS_EXACT_BOUND:
            raise SizeLimitExceeded(f"n={top} above exact RDS bound {RDS_EXACT_BOUND}")
        table = stirling.stirling_table(top)
        d = stirling.rds_expectation(top, table)
        return [(n, d[n]) for n in ns]
    return [(n, plancherel.exact_ds_expectation(n).value) for n in ns]


def _cmd_exact(args, variant: str) -> int:
    ns = parse_n_values(args.n)
    pairs = _exact_values(variant, ns)
    rows = [
        {
            "n": n,
            "exact_value_rational": rational_str(v),
            "exact_value_decimal": decimal_str(v, args.precision),
        }
        for n, v in pairs
    ]
    _write_report(args, ["n", "exact_value_rational", "exact_value_decimal"], rows)
    if args.plot:
        from . import plotting

        plotting.plot_exact(pairs, args.plot, variant)
    return 0


def _try_exact(variant: str, n: int) -> Fraction | None:
    try:
        return _exact_values(variant, [n])[0][1]
    except (SizeLimitExceeded, OutOfTableRange):
        return None


def _cmd_simulate(args) -> int:
    ns = parse_n_values(args.n)
    rng = montecarlo.RngSpec(seed=args.seed)
    rows = []
    for n in ns:
        run = montecarlo.mc_ds if args.variant == "ds" else montecarlo.mc_rds
        summary = run(n, args.trials, rng)
        exact = _try_exact(args.variant, n)
        rows.append(
            {
                "variant": args.variant,
                "n": n,
                "trials": args.trials,
                "seed": args.seed,
                "mean": summary.mean,
                "std_error": summary.std_error,
                "exact_value_decimal": None if exact is None else decimal_str(exact, args.precision),
                "abs_error": None if exact is None else abs(summary.mean - float(exact)),
                "_exact_float": None if exact is None else float(exact),
                "_std_error": summary.std_error,
            }
        )
    header = ["variant", "n", "trials", "seed", "mean", "std_error",
              "exact_value_decimal", "abs_error"]
    public = [{k: r[k] for k in header} for r in rows]
    _write_report(args, header, public)
    if args.plot:
        from . import plotting

        plotting.plot_simulation(
            [
                {"variant": r["variant"], "n": r["n"], "mean": r["mean"],
                 "std_error": r["_std_error"], "exact": r["_exact_float"]}
                for r in rows
            ],
            args.plot,
        )
    return 0


def _cmd_asymptotics(args) -> int:
    ns = parse_n_values(args.n)
    if any(n < 1 for n in ns):
        raise ParseError("asymptotics requires sizes >= 1")
    rng = montecarlo.RngSpec(seed=args.seed)
    scan = montecarlo.asymptotic_scan(ns, args.trials, rng)
    rows = [
        {
            "n": r.n,
            "trials": args.trials,
            "seed": args.seed,
            "mean": r.mean,
            "two_sqrt_n": r.two_sqrt_n,
            "ratio": r.ratio,
            "scaled_fluct": r.scaled_fluct,
        }
        for r in scan
    ]
    header = ["n", "trials", "seed", "mean", "two_sqrt_n", "ratio", "scaled_fluct"]
    _write_report(args, header, rows)
    if args.plot:
        from . import plotting

        plotting.plot_asymptotics(scan, args.plot)
    return 0


def _cmd_selftest(args) -> int:
    only = args.only.split(",") if args.only else None
    try:
        results = selftest.run_suites(only)
    except KeyError as exc:
        raise ParseError(str(exc.args[0])) from None
    failed = 0
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"[{status}] {res.name}: {res.detail}")
        failed += 0 if res.passed else 1
    if failed:
        print(f"{failed} suite(s) failed", file=sys.stderr)
        return 4
    return 0


# ---------------------------------------------------------------- parser


def _precision(text: str) -> int:
    val = int(text)
    if not 1 <= val <= 50:
        raise argparse.ArgumentTypeError("precision must be in [1, 50]")
    return val


def _add_report_flags(sub, with_precision=True) -> None:
    sub.add_argument("--output", help="write the report to this file instead of stdout")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--plot", metavar="PATH", help="also render a figure to PATH")
    if with_precision:
        sub.add_argument("--precision", type=_precision, default=12,
                         help="decimal digits for exact values (default 12)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dsort",
        description="Disappear-Sort pass counts: exact engines and Monte Carlo.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("lds", help="DS pass count of one sequence")
    p.add_argument("sequence", nargs="+",
                   help="numbers (comma/space separated) or @file")
    p.add_argument("--layers", action="store_true",
                   help="also print the layer decomposition")

    p = subs.add_parser("layers", help="layer decomposition of one sequence")
    p.add_argument("sequence", nargs="+")
    p.add_argument("--indices", action="store_true",
                   help="print 1-based position sets instead of values")

    for variant in ("ds", "rds"):
        p = subs.add_parser(f"exact-{variant}",
                            help=f"exact expected {variant.upper()} pass counts")
        p.add_argument("--n", required=True,
                       help="size, range A:B, or comma list")
        _add_report_flags(p)

    p = subs.add_parser("simulate", help="Monte Carlo pass-count estimates")
    p.add_argument("--variant", choices=("ds", "rds"), required=True)
    p.add_argument("--n", required=True, help="size, range A:B, or comma list")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=None,
                   help=f"RNG seed (default: ${SEED_ENV_VAR} or 0)")
    _add_report_flags(p)

    p = subs.add_parser("asymptotics", help="square-root scaling diagnostics")
    p.add_argument("--n", default="100,400,1600,6400",
                   help="comma list of sizes (default 100,400,1600,6400)")
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--seed", type=int, default=None)
    _add_report_flags(p, with_precision=False)

    p = subs.add_parser("selftest", help="run named invariant suites")
    p.add_argument("--only", help="comma list of suites (default: all); "
                   f"available: {', '.join(selftest.SUITES)}")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "trials", 1) is not None and getattr(args, "trials", 1) < 1:
        parser.error("--trials must be >= 1")
    if getattr(args, "seed", 0) is None:
        try:
            args.seed = _default_seed()
        except ParseError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2

    try:
        if args.command == "lds":
            return _cmd_lds(args)
        if args.command == "layers":
            return _cmd_layers(args)
        if args.command == "exact-ds":
            return _cmd_exact(args, "ds")
        if args.command == "exact-rds":
            return _cmd_exact(args, "rds")
        if args.command == "simulate":
            return _cmd_simulate(args)
        if args.command == "asymptotics":
            return _cmd_asymptotics(args)
        if args.command == "selftest":
            return _cmd_selftest(args)
        parser.error(f"unknown command {args.command!r}")
    except (ParseError, DuplicateValues, NotAPermutation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SizeLimitExceeded, OutOfTableRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except DsortError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
