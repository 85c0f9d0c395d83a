"""Command-line front end.

Subcommands: ``generate`` (forward model to CSV), ``recover`` (polynomial
pipeline), ``exact`` (brute-force recovery), ``bounds`` (closed-form bound
values), ``benchmark`` (error-versus-columns sweep to CSV). Every command is
deterministic given its full flag set including the seed; ``HHF_SEED`` is the
fallback when ``--seed`` is omitted.

Exit codes: 0 success, 2 invalid parameters, 3 I/O failure, 4 degenerate
input, 5 no consistent exact factorization, 6 fewer than two distinct
columns.
"""

import argparse
import json
import os
import sys

import numpy as np

from .bounds import plan_columns, theta_bound, u_recovery_bound
from .exact import DistinctColumnsError, exact_recover
from .experiments import sweep_columns
from .householder import linf_error_up_to_sign
from .matrix_io import (
    dump_json,
    load_matrix,
    load_vector,
    save_binary_matrix,
    save_real_matrix,
    save_vector,
)
from .recovery import DegenerateInputError, UnrecoverableError, recover_factors
from .sampling import make_instance

EXIT_OK = 0
EXIT_INVALID_PARAMS = 2
EXIT_IO = 3
EXIT_DEGENERATE = 4
EXIT_NO_SOLUTION = 5
EXIT_NO_DISTINCT_COLUMNS = 6

DEFAULT_SEED_ENV = "HHF_SEED"


def _default_seed():
    return int(os.environ.get(DEFAULT_SEED_ENV, "0"))


def _parse_int_list(text):
    return [int(v) for v in text.split(",") if v.strip()]


def _parse_float_list(text):
    return [float(v) for v in text.split(",") if v.strip()]


def _cmd_generate(args):
    seed = args.seed if args.seed is not None else _default_seed()
    u, X, Y = make_instance(
        args.n, args.p, args.theta, seed, min_abs_c=args.min_abs_c
    )
    os.makedirs(args.out, exist_ok=True)
    save_vector(os.path.join(args.out, "U.csv"), u)
    save_binary_matrix(os.path.join(args.out, "X.csv"), X)
    save_real_matrix(os.path.join(args.out, "Y.csv"), Y)
    dump_json(
        os.path.join(args.out, "meta.json"),
        {
            "n": args.n,
            "p": args.p,
            "theta": args.theta,
            "seed": seed,
            "min_abs_c": args.min_abs_c,
            "c": float(u.sum()),
        },
    )
    return EXIT_OK


def _cmd_recover(args):
    Y = load_matrix(os.path.join(args.in_dir, "Y.csv"))
    result = recover_factors(Y, threshold=args.zeta)
    report = {
        "theta_hat": result.theta_hat,
        "c_squared_hat": result.c_squared_hat,
        "u_hat": [float(v) for v in result.u_hat],
        "diagnostics": {
            "threshold": result.diagnostics.threshold,
            "clamped_theta": result.diagnostics.clamped_theta,
            "clamped_c_squared": result.diagnostics.clamped_c_squared,
            "negative_k_sum": result.diagnostics.negative_k_sum,
        },
    }
    u_path = os.path.join(args.in_dir, "U.csv")
    if os.path.exists(u_path):
        u_true = load_vector(u_path)
        report["linf_error"] = linf_error_up_to_sign(u_true, result.u_hat)
    x_path = os.path.join(args.in_dir, "X.csv")
    if os.path.exists(x_path):
        x_true = load_matrix(x_path)
        report["x_bit_error_rate"] = float(np.mean(x_true != result.x_hat))
    os.makedirs(args.out, exist_ok=True)
    dump_json(os.path.join(args.out, "result.json"), report)
    save_binary_matrix(os.path.join(args.out, "X_hat.csv"), result.x_hat)
    return EXIT_OK


def _cmd_exact(args):
    Y = load_matrix(os.path.join(args.in_dir, "Y.csv"))
    recovered = exact_recover(Y, n_max=args.n_max)
    if recovered is None:
        print("no consistent reflection/binary factorization", file=sys.stderr)
        return EXIT_NO_SOLUTION
    u, X = recovered
    os.makedirs(args.out, exist_ok=True)
    save_vector(os.path.join(args.out, "u_hat.csv"), u)
    save_binary_matrix(os.path.join(args.out, "X_hat.csv"), X)
    return EXIT_OK


def _cmd_bounds(args):
    values = {
        "theta_bound": theta_bound(args.n, args.p, args.t),
        "u_recovery_bound": u_recovery_bound(
            args.n, args.p, args.theta, args.min_abs_c, args.t
        ),
        "plan_columns": plan_columns(args.n, args.theta, args.min_abs_c, args.t),
    }
    print(json.dumps(values, indent=2))
    return EXIT_OK


def _cmd_benchmark(args):
    seed = args.seed if args.seed is not None else _default_seed()
    lines = ["p,theta,mean_linf_error,empirical_rate,bound_value"]
    for theta in args.theta:
        rows = sweep_columns(
            args.n,
            theta,
            args.p_values,
            args.trials,
            seed,
            min_abs_c=args.min_abs_c,
            t=args.t,
        )
        for p, report in rows:
            lines.append(
                f"{p},{theta!r},{report.mean_linf_error!r},"
                f"{report.empirical_rate!r},{report.bound_value!r}"
            )
    os.makedirs(args.out, exist_ok=True)
    with open(os.path.join(args.out, "figure1.csv"), "w", encoding="ascii") as fh:
        fh.write("\n".join(lines))
        fh.write("\n")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hhfact",
        description=(
            "Recover a Householder reflection and binary coefficients from "
            "their product."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a seeded ground-truth instance")
    gen.add_argument("--n", type=int, required=True, help="number of rows")
    gen.add_argument("--p", type=int, required=True, help="number of columns")
    gen.add_argument("--theta", type=float, required=True, help="coefficient density")
    gen.add_argument("--seed", type=int, default=None)
    gen.add_argument(
        "--min-abs-c",
        type=float,
        default=0.1,
        help="lower bound on |entry sum| of the sampled generator",
    )
    gen.add_argument("--out", required=True, help="output directory")
    gen.set_defaults(func=_cmd_generate)

    rec = sub.add_parser("recover", help="polynomial-time recovery from Y.csv")
    rec.add_argument("--in", dest="in_dir", required=True, help="input directory")
    rec.add_argument("--out", required=True, help="output directory")
    rec.add_argument("--zeta", type=float, default=0.5, help="hard-threshold level")
    rec.set_defaults(func=_cmd_recover)

    exa = sub.add_parser("exact", help="brute-force exact recovery from Y.csv")
    exa.add_argument("--in", dest="in_dir", required=True, help="input directory")
    exa.add_argument("--out", required=True, help="output directory")
    exa.add_argument("--n-max", type=int, default=20, help="enumeration size guard")
    exa.set_defaults(func=_cmd_exact)

    bnd = sub.add_parser("bounds", help="print closed-form bound values as JSON")
    bnd.add_argument("--n", type=int, required=True)
    bnd.add_argument("--p", type=int, required=True)
    bnd.add_argument("--theta", type=float, required=True)
    bnd.add_argument(
        "--min-abs-c",
        type=float,
        default=0.1,
        help="generator entry sum magnitude the bound is evaluated at",
    )
    bnd.add_argument("--t", type=float, default=0.1, help="error threshold")
    bnd.set_defaults(func=_cmd_bounds)

    ben = sub.add_parser("benchmark", help="error-versus-columns sweep to CSV")
    ben.add_argument("--n", type=int, required=True)
    ben.add_argument(
        "--theta",
        type=_parse_float_list,
        required=True,
        help="one density per curve, comma separated",
    )
    ben.add_argument(
        "--p-values",
        type=_parse_int_list,
        required=True,
        help="ascending column counts, comma separated",
    )
    ben.add_argument("--trials", type=int, default=20)
    ben.add_argument("--t", type=float, default=0.1, help="failure threshold")
    ben.add_argument("--min-abs-c", type=float, default=0.1)
    ben.add_argument("--seed", type=int, default=None)
    ben.add_argument("--out", required=True, help="output directory")
    ben.set_defaults(func=_cmd_benchmark)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DegenerateInputError as exc:
        print(f"degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except UnrecoverableError as exc:
        print(f"degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except DistinctColumnsError as exc:
        print(f"needs distinct columns: {exc}", file=sys.stderr)
        return EXIT_NO_DISTINCT_COLUMNS
    except OSError as exc:
        print(f"i/o failure: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return EXIT_INVALID_PARAMS


if __name__ == "__main__":
    sys.exit(main())
