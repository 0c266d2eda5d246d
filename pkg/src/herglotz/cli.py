"""Command-line front end.

Subcommands: ``check`` (positivity profile), ``solve`` (central extension
plus kernel Gram summary), ``eval`` and ``kernel`` (point evaluation),
``reduce`` (base-factor reduction), ``generate`` (seeded random fixture).
Exit statuses: 0 success, 2 parse/argument error, 3 infeasible data,
4 domain error, 5 internal tolerance failure.
"""

import argparse
import sys

import numpy as np

from .exceptions import (
    DimensionError,
    DomainError,
    FactorizationMismatchError,
    FixtureError,
    InsufficientDataError,
    NotHermitianError,
    NotPsdError,
    OutOfBallError,
    ProblemFormatError,
    RangeCompatibilityError,
    SingularBlockError,
)
from .extension import solve_cf
from .io import (
    ProblemFile,
    RunConfig,
    canonical_json,
    load_problem,
    matrix_to_pairs,
    serialize_problem,
)
from .series import (
    HerglotzSeries,
    eval_series,
    kernel_gram,
    kernel_value,
    random_realization,
    realization_coefficients,
    reduce,
    series_tail_bound,
)
from .toeplitz import positivity_profile

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INFEASIBLE = 3
EXIT_DOMAIN = 4
EXIT_TOLERANCE = 5


def _complex_flag(text):
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected 're,im' or 're', got {text!r}")


def _run_flags():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--eps", type=float, default=1e-8, help="positive extension shift")
    p.add_argument("--tol", type=float, default=1e-9, help="positivity tolerance")
    p.add_argument("--horizon", type=int, default=64, help="highest output coefficient index")
    p.add_argument("--truncation", type=int, default=256, help="series evaluation truncation")
    p.add_argument("--grid", type=int, default=16, help="number of kernel test points")
    p.add_argument("--seed", type=int, default=0, help="random generator seed (PCG64)")
    p.add_argument("--radius", type=float, default=0.9, help="declared evaluation radius")
    p.add_argument("--output", help="write the data product to this path")
    p.add_argument("--json", action="store_true", help="machine-readable report on stdout")
    return p


def build_parser():
    parser = argparse.ArgumentParser(
        prog="herglotz",
        description="Positive block-Toeplitz coefficient data: check, extend, evaluate, reduce.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    flags = _run_flags()

    p = sub.add_parser("check", parents=[flags], help="positivity profile of a problem file")
    p.add_argument("input", help="problem file (JSON)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solve", parents=[flags], help="central extension to the horizon")
    p.add_argument("input", help="problem file (JSON)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("eval", parents=[flags], help="evaluate the series at a point")
    p.add_argument("input", help="problem file (JSON)")
    p.add_argument("--z", type=_complex_flag, required=True, help="evaluation point 're,im'")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("kernel", parents=[flags], help="evaluate the kernel at a point pair")
    p.add_argument("input", help="problem file (JSON)")
    p.add_argument("--z", type=_complex_flag, required=True, help="first point 're,im'")
    p.add_argument("--w", type=_complex_flag, required=True, help="second point 're,im'")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("reduce", parents=[flags], help="base-factor reduction of the data")
    p.add_argument("input", help="problem file (JSON)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("generate", parents=[flags], help="seeded random fixture file")
    p.add_argument("--block-dim", type=int, default=1, help="coefficient block dimension d")
    p.add_argument("--state-dim", type=int, default=4, help="internal state dimension h")
    p.add_argument("--order", type=int, default=8, help="highest coefficient index N")
    p.add_argument("--zero-c", action="store_true", help="force the input map C to zero")
    p.set_defaults(func=cmd_generate)

    return parser


def _config(args):
    return RunConfig(
        eps=args.eps,
        tol=args.tol,
        horizon=args.horizon,
        truncation=args.truncation,
        grid=args.grid,
        seed=args.seed,
        radius=args.radius,
    )


def _sample_points(rng, count, radius):
    u = rng.uniform(0.0, 1.0, count)
    theta = rng.uniform(0.0, 2.0 * np.pi, count)
    return radius * np.sqrt(u) * np.exp(1j * theta)


def _print_matrix(m, out=sys.stdout):
    for row in np.asarray(m):
        print("  [" + ", ".join(f"{v.real:+.12e}{v.imag:+.12e}j" for v in row) + "]", file=out)


def _emit_product(text, args, summary_lines):
    # data product goes to --output or stdout; the summary never mixes with it
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        for line in summary_lines:
            print(line)
    else:
        sys.stdout.write(text)
        for line in summary_lines:
            print(line, file=sys.stderr)


def cmd_check(args):
    cfg = _config(args)
    pf = load_problem(args.input)
    seq = pf.to_sequence()
    reports = positivity_profile(seq, cfg.tol)
    all_psd = all(r.is_psd for r in reports)
    if args.json:
        obj = {
            "all_psd": all_psd,
            "block_dim": pf.block_dim,
            "command": "check",
            "levels": [
                {
                    "is_psd": r.is_psd,
                    "is_strictly_positive": r.is_strictly_positive,
                    "level": n,
                    "min_eigenvalue": r.min_eigenvalue,
                }
                for n, r in enumerate(reports)
            ],
            "tol": cfg.tol,
        }
        sys.stdout.write(canonical_json(obj))
    else:
        for n, r in enumerate(reports):
            verdict = "PSD" if r.is_psd else "not PSD"
            print(f"level {n}: min eigenvalue {r.min_eigenvalue:+.6e}  {verdict}")
        print(f"verdict: {'PSD' if all_psd else 'not PSD'}")
    return EXIT_OK if all_psd else EXIT_INFEASIBLE


def cmd_solve(args):
    cfg = _config(args)
    pf = load_problem(args.input)
    seq = pf.to_sequence()
    # extend once to the longer of horizon/truncation; the central extension
    # is deterministic, so the written horizon prefix is unaffected
    target = max(cfg.horizon, cfg.truncation, seq.order)
    full = solve_cf(seq, target, eps=cfg.eps, tol=cfg.tol, radius=cfg.radius)
    out_seq = full.seq.truncated(min(cfg.horizon, full.seq.order))
    rng = np.random.default_rng(cfg.seed)
    points = _sample_points(rng, cfg.grid, cfg.radius)
    report = kernel_gram(full, points)
    out_pf = ProblemFile.from_sequence(out_seq, metadata=pf.metadata)
    if args.json:
        obj = {
            "command": "solve",
            "kernel": {
                "grid": cfg.grid,
                "min_eigenvalue": report.min_eigenvalue,
                "points": [[z.real, z.imag] for z in points],
                "psd": report.is_psd,
                "tolerance_used": report.tolerance_used,
            },
            "problem": {
                "block_dim": out_pf.block_dim,
                "coefficients": [matrix_to_pairs(m) for m in out_pf.coefficients],
                "metadata": {str(k): str(v) for k, v in out_pf.metadata.items()},
            },
        }
        sys.stdout.write(canonical_json(obj))
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(serialize_problem(out_pf))
        return EXIT_OK
    summary = [
        f"extended coefficients: 0..{out_seq.order}",
        f"kernel gram min eigenvalue: {report.min_eigenvalue:+.6e} "
        f"(tolerance {report.tolerance_used:.3e}, {cfg.grid} points, seed {cfg.seed})",
    ]
    _emit_product(serialize_problem(out_pf), args, summary)
    return EXIT_OK


def _eval_series_from_file(pf, cfg):
    seq = pf.to_sequence()
    level = min(seq.order, cfg.truncation)
    return HerglotzSeries(seq.truncated(level), declared_radius=cfg.radius, certified=False)


def cmd_eval(args):
    cfg = _config(args)
    pf = load_problem(args.input)
    phi = _eval_series_from_file(pf, cfg)
    value = eval_series(phi, args.z)
    tail = series_tail_bound(phi, args.z)
    if args.json:
        obj = {
            "command": "eval",
            "tail_bound": tail,
            "value": matrix_to_pairs(value),
            "z": [args.z.real, args.z.imag],
        }
        sys.stdout.write(canonical_json(obj))
    else:
        print(f"value at z = {args.z}:")
        _print_matrix(value)
        print(f"truncation tail bound: {tail:.3e}")
    return EXIT_OK


def cmd_kernel(args):
    cfg = _config(args)
    pf = load_problem(args.input)
    phi = _eval_series_from_file(pf, cfg)
    value = kernel_value(phi, args.z, args.w)
    tail = (series_tail_bound(phi, args.z) + series_tail_bound(phi, args.w)) / abs(
        1 - args.z * np.conj(args.w)
    )
    if args.json:
        obj = {
            "command": "kernel",
            "tail_bound": tail,
            "value": matrix_to_pairs(value),
            "w": [args.w.real, args.w.imag],
            "z": [args.z.real, args.z.imag],
        }
        sys.stdout.write(canonical_json(obj))
    else:
        print(f"kernel at z = {args.z}, w = {args.w}:")
        _print_matrix(value)
        print(f"truncation tail bound: {tail:.3e}")
    return EXIT_OK


def cmd_reduce(args):
    cfg = _config(args)
    pf = load_problem(args.input)
    rf = reduce(pf.to_sequence(), tol=cfg.tol)
    rank = rf.t0.shape[0]
    obj = {
        "block_dim": pf.block_dim,
        "d_imag": matrix_to_pairs(rf.d_imag),
        "rank": rank,
        "residuals": [float(r) for r in rf.residuals],
        "t0": matrix_to_pairs(rf.t0),
        "t_coefficients": [matrix_to_pairs(t) for t in rf.t_seq.coefficients]
        if rf.t_seq is not None
        else [],
    }
    text = canonical_json(obj)
    if args.json:
        sys.stdout.write(canonical_json({"command": "reduce", "reduced": obj}))
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        return EXIT_OK
    summary = [
        f"rank: {rank}",
        f"max residual: {max(rf.residuals):.3e}",
    ]
    _emit_product(text, args, summary)
    return EXIT_OK


def cmd_generate(args):
    cfg = _config(args)
    if args.block_dim < 1 or args.state_dim < 1 or args.order < 0:
        raise ProblemFormatError("need block-dim >= 1, state-dim >= 1, order >= 0")
    rlz = random_realization(cfg.seed, args.block_dim, args.state_dim, zero_c=args.zero_c)
    seq = realization_coefficients(rlz, args.order)
    metadata = {
        "block_dim": str(args.block_dim),
        "generator": "numpy-pcg64",
        "order": str(args.order),
        "seed": str(cfg.seed),
        "state_dim": str(args.state_dim),
        "zero_c": "true" if args.zero_c else "false",
    }
    pf = ProblemFile.from_sequence(seq, metadata=metadata)
    if args.json:
        obj = {
            "command": "generate",
            "problem": {
                "block_dim": pf.block_dim,
                "coefficients": [matrix_to_pairs(m) for m in pf.coefficients],
                "metadata": metadata,
            },
        }
        sys.stdout.write(canonical_json(obj))
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(serialize_problem(pf))
        return EXIT_OK
    _emit_product(serialize_problem(pf), args, [f"generated 0..{args.order} (seed {cfg.seed})"])
    return EXIT_OK


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ProblemFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NotPsdError, RangeCompatibilityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (
        DimensionError,
        NotHermitianError,
        FactorizationMismatchError,
        SingularBlockError,
        OutOfBallError,
        FixtureError,
        InsufficientDataError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOLERANCE


if __name__ == "__main__":
    sys.exit(main())
