"""Command-line entry point: ``ivbounds {price,invert,bounds,asym,figure}``.

Exit codes: 0 success, 2 domain error, 3 non-convergence, 4 I/O error.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import asymptotics as asym
from . import bounds, figures
from .errors import ConvergenceError, DomainError
from .figures import fmt
from .pricing import call_price, check_price
from .solver import METHODS, SolverConfig, implied_y

EXIT_DOMAIN = 2
EXIT_CONVERGENCE = 3
EXIT_IO = 4

FIGURE_HELP = """figure names and reconstructed grids:
  chat      close-far transform c -> c_hat at k=0.2, c = i/(n+1)
  long      c in [0.01, 0.999] log-spaced in 1-c, k=0.2
  short     c in [1e-12, 0.5] log-spaced, k=0.2
  wing-vg   k in [0, 2.5] under variance gamma (sigma .1213, nu .1686, theta -.1436, T 5)
  left-jtd  k in [-3.5, 0] under jump to default (sigma .6, lam .05, T=4)
  cobweb    fixed-point iterates at k=0.2, c=0.3
the plots give only prose hints about their ranges; these grids are
reconstructions."""


def _out(line: str = "") -> None:
    sys.stdout.write(line + "\n")


def cmd_price(args) -> int:
    _out(fmt(call_price(args.k, args.y)))
    return 0


def _print_bracket(br) -> None:
    _out(f"bracket_lower {fmt(br.lower)}")
    _out(f"bracket_upper {fmt(br.upper)}")
    _out(f"provenance {' '.join(br.provenance)}")


def cmd_invert(args) -> int:
    cfg = SolverConfig(method=args.method, tolerance=args.tol, record_trace=True)
    rep = implied_y(args.k, args.c, cfg)
    _out(f"y {fmt(rep.y)}")
    _out(f"iterations {rep.iterations}")
    _out(f"residual {fmt(rep.residual)}")
    _out(f"method {rep.method}")
    if rep.notes:
        _out(f"notes {' '.join(rep.notes)}")
    br = rep.bracket_used if rep.bracket_used is not None else bounds.best_bracket(args.k, args.c)
    _print_bracket(br)
    if rep.trace:
        _out("trace " + " ".join(fmt(v) for v in rep.trace))
    return 0


def cmd_bounds(args) -> int:
    k, c = args.k, args.c
    check_price(k, c)
    _print_bracket(bounds.best_bracket(k, c))
    _out(f"cto1 {fmt(bounds.lower_cto1(k, c))} {fmt(bounds.upper_cto1(k, c))}")
    gul = bounds.bracket_gul(k, c)
    _out(f"gul {fmt(gul.lower)} {fmt(gul.upper)}")
    _out(f"lee - {fmt(bounds.upper_lee(k, c))}")
    if c > 0.0 and k != 0.0:
        sh = bounds.bracket_short1(k, c)
        _out(f"short1 {fmt(sh.lower)} {fmt(sh.upper)}")
    return 0


def cmd_asym(args) -> int:
    k, c = args.k, args.c
    check_price(k, c)
    p = c + math.expm1(k)
    _out(f"price-to-one {fmt(asym.asym_price_to_one(c))}" if c > 0 else "price-to-one -")
    if k != 0.0:
        try:
            _out(f"price-to-zero {fmt(asym.asym_price_to_zero(k, c))}")
        except DomainError:
            _out("price-to-zero -")
        x = c if k > 0 else p
        try:
            _out(f"{'right' if k > 0 else 'left'}-wing {fmt(asym.asym_wing(k, x))}")
        except DomainError:
            _out(f"{'right' if k > 0 else 'left'}-wing -")
        u = c if k > 0 else math.exp(-k) * p
        if 0.0 < u < 1.0:
            _out(f"fixed-u-{'right' if k > 0 else 'left'} {fmt(asym.asym_fixed_u(k, u))} (u={fmt(u)})")
    return 0


def cmd_figure(args) -> int:
    header, rows = figures.build(args.name, args.grid_points)
    if args.out in (None, "-"):
        sys.stdout.write(figures.to_csv(header, rows))
    else:
        figures.write_csv(args.out, header, rows)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ivbounds",
        description="Black-Scholes implied total standard deviation with certified bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("price", help="normalized call price C(k, y)")
    p.add_argument("--k", type=float, required=True, help="log-moneyness")
    p.add_argument("--y", type=float, required=True, help="total standard deviation")
    p.set_defaults(func=cmd_price)

    p = sub.add_parser("invert", help="implied total standard deviation Y(k, c)")
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--c", type=float, required=True, help="normalized call price")
    p.add_argument("--method", choices=METHODS, default="bisection")
    p.add_argument("--tol", type=float, default=1e-12, help="price residual tolerance")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("bounds", help="best certified bracket and each bound")
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--c", type=float, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("asym", help="asymptotic formulas evaluated at (k, c)")
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--c", type=float, required=True)
    p.set_defaults(func=cmd_asym)

    p = sub.add_parser(
        "figure",
        help="write the data behind one figure as CSV",
        epilog=FIGURE_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--name", choices=figures.FIGURES, required=True)
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--grid-points", type=int, default=None)
    p.set_defaults(func=cmd_figure)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CONVERGENCE
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
