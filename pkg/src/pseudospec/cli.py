"""Command-line front end.

    pseudospec nodes     [--N 7 --alpha 0.5]
    pseudospec diffmat   [--N 7 --alpha 0.5 --order 1]
    pseudospec solve-fp  [--N 7 --alpha 0.5 --theta 0.5 --dt 1e-3 --t-final 1]
    pseudospec converge  [same flags as solve-fp]

All output is CSV with 17 significant digits, to ``--output`` or stdout.
Exit codes: 0 success, 2 usage/parameter error, 3 numerical failure.
"""
from __future__ import annotations

import argparse
import contextlib
import math
import sys

import numpy as np

from .errors import NumericalError, SingularMatrixError
from .fpsolver import SchemeConfig, convergence_study, run
from .grids import gauss_lobatto_grid
from .interp import diff_matrix

EXIT_OK, EXIT_USAGE, EXIT_NUMERICAL = 0, 2, 3
CHECKPOINT_SPACING = 0.1


def fmt(v) -> str:
    if v is None:
        return ""
    # + 0.0 turns -0.0 into 0.0
    return f"{float(v) + 0.0:.17g}"


def cmd_nodes(args, out):
    grid = gauss_lobatto_grid(args.N, args.alpha)
    out.write("i,x,u\n")
    for i, (x, u) in enumerate(zip(grid.nodes_x, grid.nodes_u)):
        out.write(f"{i},{fmt(x)},{fmt(u)}\n")


def cmd_diffmat(args, out):
    if args.order not in (1, 2):
        raise ValueError(f"--order must be 1 or 2, got {args.order}")
    grid = gauss_lobatto_grid(args.N, args.alpha)
    for row in diff_matrix(grid, args.order):
        out.write(",".join(fmt(v) for v in row) + "\n")


def _config(args):
    return SchemeConfig(N=args.N, alpha=args.alpha, theta=args.theta, dt=args.dt, t_final=args.t_final)


def cmd_solve_fp(args, out):
    cfg = _config(args)
    n_marks = math.floor(cfg.t_final / CHECKPOINT_SPACING + 1e-9)
    marks = [k * CHECKPOINT_SPACING for k in range(n_marks + 1)]
    traj = run(cfg, checkpoints=marks)
    out.write("t,i,x,y_num,y_exact,abs_err\n")
    for cp in traj.checkpoints:
        for i, (x, yn, ye, err) in enumerate(zip(cp.x, cp.y_num, cp.y_exact, cp.abs_err)):
            out.write(f"{fmt(cp.t)},{i},{fmt(x)},{fmt(yn)},{fmt(ye)},{fmt(err)}\n")
    out.write(f"# max_abs_err={fmt(traj.max_abs_err)}\n")


def cmd_converge(args, out):
    rows = convergence_study(_config(args), factors=(4, 2, 1))
    out.write("dt,max_abs_err,observed_order\n")
    for dt, err, order in rows:
        out.write(f"{fmt(dt)},{fmt(err)},{fmt(order)}\n")


COMMANDS = {
    "nodes": cmd_nodes,
    "diffmat": cmd_diffmat,
    "solve-fp": cmd_solve_fp,
    "converge": cmd_converge,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--N", type=int, default=7, help="polynomial degree (N+1 nodes)")
    common.add_argument("--alpha", type=float, default=0.5, help="Gegenbauer parameter")
    common.add_argument("--theta", type=float, default=0.5, help="time weighting in [0, 1]")
    common.add_argument("--dt", type=float, default=1e-3, help="time step")
    common.add_argument("--t-final", dest="t_final", type=float, default=1.0, help="final time")
    common.add_argument("--order", type=int, default=1, help="derivative order for diffmat")
    common.add_argument("--output", default="-", help="output path, '-' for stdout")

    parser = argparse.ArgumentParser(prog="pseudospec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    try:
        with contextlib.ExitStack() as stack:
            if args.output == "-":
                out = sys.stdout
            else:
                out = stack.enter_context(open(args.output, "w", newline="\n"))
            COMMANDS[args.command](args, out)
    except SingularMatrixError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (NumericalError, ArithmeticError, np.linalg.LinAlgError) as exc:
        print(f"error: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
