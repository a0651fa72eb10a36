"""Command-line front end: ``centraldiff {weights,diff,spectrum,sin-demo}``.

All commands emit plain data (CSV by default, JSON with ``--format json``)
to stdout or ``--output``. Output is only written once the whole result
has been computed, so a failing command leaves no partial file behind.

Exit codes: 0 success, 2 argument or validation error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import __version__
from .differentiator import (
    differentiate_periodic,
    sin_demo_estimate,
    sin_demo_sum,
    sin_limit_partial_sums,
)
from .spectral import spectral_differentiate, spectrum_deviation
from .vandermonde import solve_weight_system
from .weights import (
    MAX_HALF_WIDTH,
    first_derivative_weights,
    second_derivative_weights,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3

DEFAULT_SPECTRUM_N = (1, 11, 21)
DEFAULT_PERIOD = 2000


class UsageError(Exception):
    pass


def _fmt(x):
    # repr of a Python float is the shortest string that round-trips.
    return repr(float(x))


def _fraction_str(q):
    return f"{q.numerator}/{q.denominator}"


def _csv_text(header, rows, with_header):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if with_header:
        writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(obj):
    return json.dumps(obj, indent=2) + "\n"


def _check_n(n):
    if not 1 <= n <= MAX_HALF_WIDTH:
        raise UsageError(f"--n must be in 1..{MAX_HALF_WIDTH}, got {n}")


def _weight_set(n, order):
    _check_n(n)
    if order == 1:
        return first_derivative_weights(n)
    if order == 2:
        return second_derivative_weights(n)
    if order >= 3 and order % 2 == 1 and order <= 2 * n - 1:
        return solve_weight_system(n, (order - 1) // 2)
    raise UsageError(
        f"--order must be 1, 2 or an odd order <= 2n-1={2 * n - 1}, got {order}"
    )


def cmd_weights(args):
    ws = _weight_set(args.n, args.order)
    if args.format == "json":
        return _json_text(
            {
                "n": ws.n,
                "order": ws.order,
                "weights": [
                    {"m": m, "exact": _fraction_str(w), "decimal": float(w)}
                    for m, w in enumerate(ws.weights, 1)
                ],
            }
        )
    rows = [
        (m, _fraction_str(w), _fmt(w)) for m, w in enumerate(ws.weights, 1)
    ]
    return _csv_text(("m", "exact", "decimal"), rows, not args.no_header)


def read_signal(path):
    """Read a one-column ``value`` or two-column ``index,value`` CSV.

    A leading non-numeric row is taken as a header. Two-column input is
    reordered by index.
    """
    with open(path, newline="") as fh:
        rows = [r for r in csv.reader(fh) if r and any(c.strip() for c in r)]
    if not rows:
        raise UsageError(f"{path}: no samples")
    try:
        float(rows[0][-1])
    except ValueError:
        rows = rows[1:]
    width = {len(r) for r in rows}
    if len(width) != 1 or width.pop() not in (1, 2):
        raise UsageError(f"{path}: expected one or two columns on every row")
    try:
        if len(rows[0]) == 1:
            values = [float(r[0]) for r in rows]
        else:
            pairs = sorted((int(r[0]), float(r[1])) for r in rows)
            idx = [k for k, _ in pairs]
            if idx != list(range(idx[0], idx[0] + len(idx))):
                raise UsageError(f"{path}: indices must be consecutive")
            values = [v for _, v in pairs]
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None
    values = np.asarray(values)
    if not np.all(np.isfinite(values)):
        raise UsageError(f"{path}: non-finite sample")
    return values


def cmd_diff(args):
    if args.input is None:
        raise UsageError("--input is required")
    if args.order not in (1, 2):
        raise UsageError(f"--order must be 1 or 2, got {args.order}")
    if not args.h > 0:
        raise UsageError(f"--h must be positive, got {args.h}")
    _check_n(args.n)
    f = read_signal(args.input)
    if f.size < 2 * args.n + 1:
        raise UsageError(
            f"signal has {f.size} samples; need at least 2n+1={2 * args.n + 1}"
        )
    if args.mode == "spectral":
        out = spectral_differentiate(f, args.h, args.n, args.order)
    else:
        out = differentiate_periodic(f, args.h, args.n, args.order)
    if args.format == "json":
        return _json_text(
            {
                "n": args.n,
                "order": args.order,
                "h": args.h,
                "mode": args.mode,
                "values": [float(v) for v in out],
            }
        )
    rows = [(k, _fmt(v)) for k, v in enumerate(out)]
    return _csv_text(("k", "value"), rows, not args.no_header)


def _parse_n_list(text):
    try:
        ns = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"--n must be a comma-separated list of integers, got {text!r}")
    if not ns:
        raise UsageError("--n is empty")
    return ns


def cmd_spectrum(args):
    ns = list(DEFAULT_SPECTRUM_N) if args.n is None else _parse_n_list(args.n)
    N = args.N
    if args.order not in (1, 2):
        raise UsageError(f"--order must be 1 or 2, got {args.order}")
    for n in ns:
        _check_n(n)
        if N < 2 * n + 1:
            raise UsageError(f"--N={N} is shorter than 2n+1={2 * n + 1} for n={n}")
    series = [spectrum_deviation(n, N, args.order, method=args.dft) for n in ns]
    r = series[0].r
    ideal = series[0].ideal
    if args.format == "json":
        return _json_text(
            {
                "N": N,
                "order": args.order,
                "r": r.tolist(),
                "ideal": ideal.tolist(),
                "series": [
                    {
                        "n": s.n,
                        "response": s.response.tolist(),
                        "deviation": s.deviation.tolist(),
                    }
                    for s in series
                ],
            }
        )
    header = ["r", "ideal"]
    for s in series:
        header += [f"response_n{s.n}", f"deviation_n{s.n}"]
    rows = []
    for i in range(r.size):
        row = [int(r[i]), _fmt(ideal[i])]
        for s in series:
            row += [_fmt(s.response[i]), _fmt(s.deviation[i])]
        rows.append(row)
    return _csv_text(header, rows, not args.no_header)


def cmd_sin_demo(args):
    max_n = args.max_n
    if not 1 <= max_n <= MAX_HALF_WIDTH:
        raise UsageError(f"--max-n must be in 1..{MAX_HALF_WIDTH}, got {max_n}")
    rows = []
    for n in range(1, max_n + 1):
        est = sin_demo_estimate(n)
        rows.append(("stencil", n, _fraction_str(sin_demo_sum(n)), _fmt(est), _fmt(abs(est - 1.0))))
    for terms, val in enumerate(sin_limit_partial_sums(max_n), 1):
        rows.append(("series", terms, "", _fmt(val), _fmt(abs(val - 1.0))))
    rows.append(("limit", "", "1/1", _fmt(1.0), _fmt(0.0)))
    header = ("kind", "index", "exact_sum", "value", "abs_error")
    if args.format == "json":
        return _json_text([dict(zip(header, row)) for row in rows])
    return _csv_text(header, rows, not args.no_header)


COMMANDS = {
    "weights": cmd_weights,
    "diff": cmd_diff,
    "spectrum": cmd_spectrum,
    "sin-demo": cmd_sin_demo,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", "-o", default=None, help="write here instead of stdout")
    common.add_argument("--no-header", action="store_true", help="omit the CSV header row")

    parser = argparse.ArgumentParser(
        prog="centraldiff",
        description="Central difference weights, periodic differentiation and kernel spectra.",
        allow_abbrev=False,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("weights", parents=[common], allow_abbrev=False,
                       help="exact weight table for a (2n+1)-point stencil")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", type=int, default=1)

    p = sub.add_parser("diff", parents=[common], allow_abbrev=False,
                       help="differentiate a periodic sampled signal")
    p.add_argument("--input", "-i", default=None)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", type=int, default=1)
    p.add_argument("--h", type=float, default=1.0)
    p.add_argument("--mode", choices=("direct", "spectral"), default="direct")

    p = sub.add_parser("spectrum", parents=[common], allow_abbrev=False,
                       help="kernel spectra and deviation from the ideal response")
    p.add_argument("--n", default=None, help="comma-separated half-widths (default 1,11,21)")
    p.add_argument("--N", type=int, default=DEFAULT_PERIOD)
    p.add_argument("--order", type=int, default=1)
    p.add_argument("--dft", choices=("fft", "direct"), default="fft",
                   help="transform used for the kernel spectra")

    p = sub.add_parser("sin-demo", parents=[common], allow_abbrev=False,
                       help="derivative of sin at 0 with h = pi/2 for growing stencils")
    p.add_argument("--max-n", type=int, default=21)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        print(f"centraldiff {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"centraldiff {args.command}: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        if args.output is None:
            sys.stdout.write(text)
        else:
            with open(args.output, "w", newline="") as fh:
                fh.write(text)
    except OSError as exc:
        print(f"centraldiff {args.command}: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
