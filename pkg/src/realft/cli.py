"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 non-finite data, 4 I/O failure, 5 convolution precondition failure.
"""

import argparse
import sys

import numpy as np

from . import bench, fileformat, verify
from .arrays import NonFiniteError, ParityError, ShapeMismatchError
from .convolution import CONVOLVERS, linear_convolve
from .drft import rft
from .quadrature import MAX_HERMITE_ORDER, Grid1D, fitted_eigen, hermite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_NONFINITE = 3
EXIT_IO = 4
EXIT_PRECONDITION = 5


def _err(msg):
    print(f"realft: {msg}", file=sys.stderr)


def cmd_transform(args):
    x, fmt = fileformat.load(args.input)
    fileformat.save(args.output, rft(x), args.format or fmt)
    return EXIT_OK


def cmd_convolve(args):
    a, fmt = fileformat.load(args.a)
    b, _ = fileformat.load(args.b)
    if args.pad:
        out = linear_convolve(a, b, args.method)
    else:
        out = CONVOLVERS[args.method](a, b)
    fileformat.save(args.output, out, args.format or fmt)
    return EXIT_OK


def cmd_hermite(args):
    grid = Grid1D(args.half_width, args.count)
    psi = hermite(args.k, grid)
    if args.output or not args.check:
        table = np.column_stack((grid.nodes, psi.values))
        fileformat.save(args.output or "-", table, "text")
    if args.check:
        sign, residual = fitted_eigen(args.k, grid)
        print(f"k={args.k} sign={sign:+d} residual={residual:.3e}")
    return EXIT_OK


def _parse_sizes(tokens):
    sizes = []
    for tok in tokens:
        for part in tok.split(","):
            part = part.strip()
            if part:
                sizes.append(tuple(int(n) for n in part.lower().split("x")))
    return sizes


def _write_text(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_verify(args):
    config = verify.SuiteConfig(seed=args.seed, trials=args.trials)
    if args.sizes:
        config.sizes = tuple(_parse_sizes(args.sizes))
    report = verify.run_suite(config)
    _write_text(args.report, report.to_json())
    for r in report.results:
        if not r.passed:
            _err(f"FAIL {r.name}: {r.max_observed_error:.3e} > {r.tolerance:.3e}")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_bench(args):
    sizes = [s[0] for s in _parse_sizes(args.sizes)]
    rows = bench.run_bench(sizes, repeat=args.repeat)
    for row in rows:
        if row["warning"]:
            _err(f"N={row['size']}: not a power of two, naive timing only")
    if args.report == "-":
        bench.write_csv(rows, sys.stdout)
    else:
        with open(args.report, "w", newline="") as fh:
            bench.write_csv(rows, fh)
    return EXIT_OK


def _hermite_order(text):
    k = int(text)
    if not 0 <= k <= MAX_HERMITE_ORDER:
        raise argparse.ArgumentTypeError(f"order must be in [0, {MAX_HERMITE_ORDER}]")
    return k


def build_parser():
    parser = argparse.ArgumentParser(prog="realft", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    fmt_help = "output format (default: same as input)"

    p = sub.add_parser("transform", help="real Fourier transform of an array file")
    p.add_argument("input")
    p.add_argument("output", help="output path, - for stdout")
    p.add_argument("--inverse", action="store_true",
                   help="inverse transform (identical: the transform is an involution)")
    p.add_argument("--format", choices=("text", "binary"), help=fmt_help)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("convolve", help="circular convolution of two array files")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("output", help="output path, - for stdout")
    p.add_argument("--method", choices=tuple(CONVOLVERS), default="direct")
    p.add_argument("--pad", action="store_true",
                   help="zero-pad to a power of two >= Na+Nb-1 for linear convolution")
    p.add_argument("--format", choices=("text", "binary"), help=fmt_help)
    p.set_defaults(func=cmd_convolve)

    p = sub.add_parser("hermite", help="sample a Hermite function")
    p.add_argument("k", type=_hermite_order)
    p.add_argument("-L", "--half-width", type=float, default=16.0)
    p.add_argument("-N", "--count", type=int, default=2048)
    p.add_argument("--check", action="store_true", help="print fitted eigen-sign and residual")
    p.add_argument("-o", "--output", help="write samples (x, psi) here")
    p.set_defaults(func=cmd_hermite)

    p = sub.add_parser("verify", help="run the seeded property suite")
    p.add_argument("report", nargs="?", default="-")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--sizes", nargs="+", help="shapes such as 64 12 8x8 (comma lists allowed)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time naive vs fast transform")
    p.add_argument("report", nargs="?", default="-")
    p.add_argument("--sizes", nargs="+", default=["256,1024,4096,8192"])
    p.add_argument("--repeat", type=int, default=5)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NonFiniteError as exc:
        _err(str(exc))
        return EXIT_NONFINITE
    except (ParityError, ShapeMismatchError) as exc:
        _err(str(exc))
        return EXIT_PRECONDITION
    except fileformat.ArrayFormatError as exc:
        _err(str(exc))
        return EXIT_PARSE
    except OSError as exc:
        _err(str(exc))
        return EXIT_IO
    except ValueError as exc:
        _err(str(exc))
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
