"""Command-line interface: ``kitecc <subcommand> [options]``."""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .cc import mass_map
from .curves import degeneracy_masses, psi_profile, trace_degeneracy_curve
from .domain import INV_SQRT3, SQRT3, MassTriple, Region, classify_region
from .errors import KiteError
from .index import F_value, hessian_report
from .scan import WHATS, mass_lines, scan_region, to_csv, to_json, to_svg
from .solver import solve
from .stability import GAP_TOL, REAL_TOL, spectrum, trace_stability_boundary


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _g(v):
    return "%.17g" % v


def _table(header, rows):
    lines = [",".join(header)]
    lines += [",".join(v if isinstance(v, str) else _g(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _masses(args):
    if args.m1 is None or args.m3 is None:
        raise UsageError("--m1 and --m3 are required")
    return MassTriple.from_m1_m3(args.m1, args.m3)


def _shape(args):
    if args.xhat is None or args.yhat is None:
        raise UsageError("--xhat and --yhat are required")
    return (args.xhat, args.yhat)


def _meta(args, **extra):
    meta = {"version": __version__, "real_tol": args.real_tol, "gap_tol": args.gap_tol}
    meta.update(extra)
    return meta


def _records(header, rows, args, **meta):
    """Render plain records as csv or json."""
    if args.format == "json":
        recs = [dict(zip(header, row)) for row in rows]
        return json.dumps({"meta": _meta(args, **meta), "rows": recs}, indent=1) + "\n"
    if args.format == "svg":
        raise UsageError("svg output is only available for scan")
    return _table(header, rows)


def cmd_solve(args):
    masses = _masses(args)
    res = solve(masses, args.type)
    rows = [(s.xhat, s.yhat, reg.value, r) for s, r, reg in zip(res.solutions, res.residuals, res.regions)]
    return _records(("xhat", "yhat", "region", "residual"), rows, args, type=args.type)


def cmd_massmap(args):
    shape = _shape(args)
    ms = mass_map(shape)
    return _records(("m1", "m3", "m"), [ms.as_tuple()], args)


def cmd_index(args):
    shape = _shape(args)
    ms = mass_map(shape)
    rep = hessian_report(shape, ms)
    row = (classify_region(shape).value, F_value(shape), rep.lambda_hat, rep.product, rep.index_sign)
    return _records(("region", "F", "lambda_hat", "product", "index"), [row], args)


def cmd_stability(args):
    shape = _shape(args)
    rep = spectrum(shape, None, args.real_tol, args.gap_tol)
    k = rep.klass
    row = (k[0], k[1], k[2], rep.max_real, int(rep.stable))
    text = _records(("n_complex", "n_real", "n_imag", "max_real", "stable"), [row], args)
    if args.format == "csv":
        ev = sorted(rep.eigenvalues, key=lambda z: (z.real, z.imag))
        text += "".join(f"# eigenvalue {_g(z.real)} {_g(z.imag)}\n" for z in ev)
    return text


def cmd_scan(args):
    region = Region.parse(args.region)
    if not region.is_open_region:
        raise UsageError(f"cannot scan {region.value}")
    if args.lines:
        rows = mass_lines(region, args.lines)
    else:
        rows = scan_region(region, args.grid, args.what, args.n_jobs, args.real_tol, args.gap_tol)
    if args.format == "json":
        return to_json(rows, _meta(args, grid=args.grid, region=region.value, what=args.what))
    if args.format == "svg":
        return to_svg(rows, region)
    return to_csv(rows)


def cmd_trace_degeneracy(args):
    curve = trace_degeneracy_curve(args.step)
    rows = []
    for (x, y) in curve:
        f = F_value((x, y))
        ms = degeneracy_masses([(x, y)])
        if ms:
            rows.append((x, y, ms[0].m1, ms[0].m3, ms[0].m, f))
        else:
            rows.append((x, y, "", "", "", f))
    return _records(("xhat", "yhat", "m1", "m3", "m", "F"), rows, args, step=args.step)


def _grid_or(args, default):
    return args.grid if args.grid_given else default


def cmd_trace_stability_boundary(args):
    n = _grid_or(args, 50)
    xs = np.linspace(INV_SQRT3, SQRT3, n + 2)[1:-1]
    pts = trace_stability_boundary(xs, real_tol=args.real_tol, gap_tol=args.gap_tol)
    return _records(("xhat", "yhat", "psi"), pts, args, grid=n)


def cmd_psi_profile(args):
    n = _grid_or(args, 50)
    pts, inf_est = psi_profile(n)
    if args.format == "json":
        return _records(("xhat", "yhat", "psi"), pts, args, grid=n, psi_infimum_estimate=inf_est)
    return _records(("xhat", "yhat", "psi"), pts, args) + f"inf_psi_estimate,{_g(inf_est)}\n"


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--m1", type=float)
    common.add_argument("--m3", type=float)
    common.add_argument("--xhat", type=float)
    common.add_argument("--yhat", type=float)
    common.add_argument("--grid", type=int, default=None)
    common.add_argument("--out")
    common.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    common.add_argument("--real-tol", type=float, default=REAL_TOL)
    common.add_argument("--gap-tol", type=float, default=GAP_TOL)

    p = _Parser(prog="kitecc", description="Kite central configurations of the four-body problem.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("solve", parents=[common], help="find kite central configurations for given masses")
    s.add_argument("--type", choices=("convex", "concave"), default="convex")
    s.set_defaults(func=cmd_solve)
    sub.add_parser("massmap", parents=[common], help="masses that make a shape central").set_defaults(func=cmd_massmap)
    sub.add_parser("index", parents=[common], help="index of a central configuration").set_defaults(func=cmd_index)
    sub.add_parser("stability", parents=[common], help="linear stability of the relative equilibrium").set_defaults(
        func=cmd_stability)
    s = sub.add_parser("scan", parents=[common], help="grid scan of a region")
    s.add_argument("--region", required=True)
    s.add_argument("--what", choices=WHATS, default="index")
    s.add_argument("--lines", type=int, default=0, help="mass-map image along this many vertical lines")
    s.add_argument("--n-jobs", type=int, default=1)
    s.set_defaults(func=cmd_scan)
    s = sub.add_parser("trace-degeneracy", parents=[common], help="curve of degenerate concave configurations")
    s.add_argument("--step", type=float, default=0.01)
    s.set_defaults(func=cmd_trace_degeneracy)
    sub.add_parser("trace-stability-boundary", parents=[common],
                   help="boundary of the linearly stable convex strip").set_defaults(func=cmd_trace_stability_boundary)
    sub.add_parser("psi-profile", parents=[common],
                   help="dominant mass ratio along the stability boundary").set_defaults(func=cmd_psi_profile)
    return p


def run_cli(argv=None):
    """Parse ``argv`` and run a subcommand; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        args.grid_given = args.grid is not None
        if args.grid is None:
            args.grid = 300
        if args.grid < 2:
            raise UsageError("--grid must be at least 2")
        _emit(args.func(args), args.out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KiteError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main():
    raise SystemExit(run_cli())


if __name__ == "__main__":
    main()
