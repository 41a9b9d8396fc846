"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 unparsable or invalid input,
4 budget exceeded.  Errors are a single ``error: <kind>: <message>`` line
on stderr.
"""

import argparse
import os
import sys

import numpy as np

from . import combinatorics, coverings, invariants, permgroup
from ._errors import BudgetExceededError
from ._validation import parse_shape

EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_BUDGET = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def format_complex(z):
    re, im = z.real + 0.0, z.imag + 0.0
    return f"{re:.12g}{im:+.12g}i"


def _cmd_hilbert(args, out):
    print(combinatorics.stable_hilbert(args.m, args.r), file=out)


def _cmd_dim_bound(args, out):
    print(combinatorics.tensor_invariant_dim_bound(args.m, args.r), file=out)


def _cmd_orbits(args, out):
    classes = permgroup.orbits(args.m, args.k, budget=args.budget)
    print(len(classes), file=out)
    if args.list:
        for cls in classes:
            print(cls, file=out)


def _cmd_cosets(args, out):
    reps = permgroup.double_cosets(args.m, args.r, budget=args.budget)
    print(len(reps), file=out)
    for s in reps:
        print(f"{permgroup.format_tuple(s)} -> {permgroup.theta(s)}", file=out)


def _cmd_eval(args, out):
    X = invariants.read_state(args.state)
    perms = permgroup.parse_tuple(args.class_, m=args.m)
    m = args.m if args.m is not None else (perms[0].degree if perms else 1)
    cls = permgroup.canonicalize(perms, m=m)
    print(format_complex(invariants.evaluate_invariant(cls, X, budget=args.budget)), file=out)


def _cmd_rank(args, out):
    print(invariants.hilbert_coefficient(args.m, args.shape, budget=args.budget), file=out)


def _cmd_check_invariance(args, out):
    rng = np.random.default_rng(args.seed)
    classes = permgroup.orbits(args.m, len(args.shape) - 1, budget=args.budget)
    worst = 0.0
    for _ in range(args.trials):
        X = invariants.random_state(args.shape, rng)
        us = [invariants.random_unitary(n, rng) for n in args.shape]
        UX = invariants.apply_group_element(us, X)
        for cls in classes:
            before = invariants.evaluate_invariant(cls, X, budget=args.budget)
            after = invariants.evaluate_invariant(cls, UX, budget=args.budget)
            worst = max(worst, abs(after - before) / (1 + abs(before)))
    print(f"{worst:.6e}", file=out)


def _cmd_covers(args, out):
    graph = coverings.read_graph(args.graph)
    classes = coverings.enumerate_cover_classes(graph, args.m, budget=args.budget)
    print(len(classes), file=out)
    if args.dot:
        os.makedirs(args.dot, exist_ok=True)
        width = max(3, len(str(len(classes))))
        for i, va in enumerate(classes, start=1):
            path = os.path.join(args.dot, f"cover_{i:0{width}d}.dot")
            with open(path, "w") as fh:
                fh.write(coverings.to_dot(va, name=f"cover_{i}"))


def build_parser():
    parser = _Parser(prog="entangle", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--budget", type=int, default=permgroup.DEFAULT_BUDGET)
        p.add_argument("--seed", type=int, default=0)
        return p

    p = add("hilbert", _cmd_hilbert, "stable invariant count for degree 2m, r parties")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    p = add("dim-bound", _cmd_dim_bound, "tensor-invariant dimension bound")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    p = add("orbits", _cmd_orbits, "conjugation classes of S_m^k")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--list", action="store_true")

    p = add("cosets", _cmd_cosets, "double cosets of S_m^r and their conjugation classes")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    p = add("eval", _cmd_eval, "evaluate one invariant at a state")
    p.add_argument("--class", dest="class_", required=True, help='e.g. "(1 2);(1 2 3)"')
    p.add_argument("--state", required=True, help="state JSON file")
    p.add_argument("--m", type=int, default=None, help="degree, if not implied by the class")

    p = add("rank", _cmd_rank, "exact dimension of degree-2m invariants at a shape")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--shape", type=parse_shape, required=True)

    p = add("check-invariance", _cmd_check_invariance, "max residual under random unitaries")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--shape", type=parse_shape, required=True)
    p.add_argument("--trials", type=int, default=10)

    p = add("covers", _cmd_covers, "count isomorphism classes of m-fold covers")
    p.add_argument("--graph", required=True, help="graph file: 'V E' then 'u v' per edge")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--dot", default=None, help="directory for one DOT file per class")
    return parser


def run(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(f"error: usage: {exc}", file=err)
        return EXIT_USAGE
    try:
        args.func(args, out)
    except BudgetExceededError as exc:
        print(f"error: budget: {exc}", file=err)
        return EXIT_BUDGET
    except (ValueError, KeyError, OSError) as exc:
        msg = str(exc).replace("\n", " ")
        print(f"error: parse: {msg}", file=err)
        return EXIT_PARSE
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
