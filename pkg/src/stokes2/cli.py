"""``stokes2`` command-line interface.

Subcommands::

    stokes2 spectrum --omega1 X
    stokes2 sweep --from A --to B --steps N [--log] --quantity wall|force|dissipation --out FILE
    stokes2 profile --omega1 X --xmax M --points P [--time T] --out FILE
    stokes2 validate --omega1 X

Exit codes: 0 success, 1 I/O or unexpected numerical failure, 2 usage
error, 3 near-critical frequency, 4 validation failure.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .dispersion import lam
from .exceptions import NearCriticalError, Stokes2Error
from .factor import Factorizer
from .oracle import OracleConfig, solve_kinetic_bvp
from .solution import (
    coeff_a0,
    convert,
    dissipation,
    friction,
    velocity_profile,
    verify_wall_bc,
    wall_velocity,
    wall_velocity_integral,
    wall_velocity_small_omega,
)
from .spectrum import (
    NEAR_CRITICAL_BAND,
    classify,
    coefficient_G,
    critical_frequency,
    index_transition_frequency,
)

EXIT_OK, EXIT_ERROR, EXIT_USAGE, EXIT_NEAR_CRITICAL, EXIT_VALIDATION = 0, 1, 2, 3, 4

# default tolerances used by `validate`
TOLERANCES = {
    "wall_bc": 1e-5,
    "factorization": 1e-8,
    "representation": 1e-7,
    "jump": 1e-8,
    "a0_two_forms": 1e-10,
    "wall_two_paths": 1e-6,
    "oracle": 1e-3,
}


def _fmt(v):
    return format(float(v), ".17g")


def _positive(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not np.isfinite(v) or v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return v


def _count(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 2:
        raise argparse.ArgumentTypeError("must be at least 2")
    return v


@contextlib.contextmanager
def _open_out(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            yield fh


def _writer(fh):
    return csv.writer(fh, lineterminator="\n")


def _scales(args):
    if not getattr(args, "dimensional", False):
        return None
    missing = [k for k in ("n", "T", "m", "tau", "u0") if getattr(args, k) is None]
    if missing:
        raise SystemExit(f"--dimensional needs --{' --'.join(missing)}")
    return convert(args.n, args.T, args.m, args.tau, args.u0)


# spectrum ------------------------------------------------------------------

def cmd_spectrum(args):
    w = args.omega1
    info = classify(w)
    print(f"omega1                      {w:.10g}")
    print(f"critical frequency omega1*  {critical_frequency():.10f}")
    print(f"index transition s(mu0)     {index_transition_frequency():.10f}")
    print(f"kappa                       {info.kappa}")
    if info.eta0 is None:
        print("eta0                        no discrete zero")
    else:
        res = abs(complex(lam(info.eta0, w)))
        print(f"eta0                        {info.eta0.real:.15g} {info.eta0.imag:+.15g}i")
        print(f"|lambda(eta0)|              {res:.3e}")
    return EXIT_OK


# sweep -------------------------------------------------------------------

def sweep_grid(lo, hi, steps, log=False):
    """Sweep grid with points inside either near-critical band removed."""
    grid = np.geomspace(lo, hi, steps) if log else np.linspace(lo, hi, steps)
    keep = np.ones(grid.size, dtype=bool)
    for wc in (critical_frequency(), index_transition_frequency()):
        keep &= np.abs(grid - wc) >= NEAR_CRITICAL_BAND
    return grid[keep], grid[~keep]


def sweep_row(w, quantity, formula="exact"):
    """One sweep row ``(omega1, kappa, ...)``; module level so it pickles."""
    F = Factorizer(w)
    if quantity == "wall":
        if formula == "exact":
            W = wall_velocity(F).W
        else:
            W = wall_velocity_small_omega(w, sign=+1 if formula == "small-printed" else -1)
        return (w, F.kappa, abs(W), float(np.angle(W)))
    if quantity == "force":
        fr = friction(F)
        return (w, F.kappa, fr.A, fr.phi)
    return (w, F.kappa, dissipation(F))


def cmd_sweep(args):
    if not args.to > args.from_:
        raise SystemExit("--to must exceed --from")
    scales = _scales(args)
    grid, dropped = sweep_grid(args.from_, args.to, args.steps, args.log)
    for w in dropped:
        print(f"skipping omega1={w!r}: near-critical", file=sys.stderr)
    task = [(float(w), args.quantity, args.formula) for w in grid]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(sweep_row, *zip(*task)))
    else:
        rows = [sweep_row(*t) for t in task]
    header = ["omega1", "kappa", "power"] if args.quantity == "dissipation" else ["omega1", "kappa", "amplitude", "phase"]
    with _open_out(args.out) as fh:
        out = _writer(fh)
        out.writerow(header)
        for row in rows:
            row = list(row)
            if scales is not None:
                if args.quantity == "wall":
                    row[2] = scales.velocity(row[2])
                elif args.quantity == "force":
                    row[2] = scales.force(row[2])
                else:
                    row[2] = scales.power(row[2])
            out.writerow([_fmt(row[0]), str(row[1])] + [_fmt(v) for v in row[2:]])
    return EXIT_OK


# profile -------------------------------------------------------------------

def cmd_profile(args):
    scales = _scales(args)
    x = np.linspace(0.0, args.xmax, args.points)
    prof = velocity_profile(Factorizer(args.omega1), x)
    U = prof.U
    header = ["x1", "re_U", "im_U", "abs_U"]
    cols = [x, U.real, U.imag, np.abs(U)]
    if args.time is not None:
        header.append("U_t")
        cols.append(prof.at_time(args.time, args.omega1))
    if scales is not None:
        cols = [scales.length(cols[0])] + [scales.velocity(c) for c in cols[1:]]
    with _open_out(args.out) as fh:
        out = _writer(fh)
        out.writerow(header)
        for row in zip(*cols):
            out.writerow([_fmt(v) for v in row])
    return EXIT_OK


# validate ---------------------------------------------------------------

def validation_report(w, oracle=True, seed=0):
    """Residuals of the self-checks at one frequency: ``[(name, value, tol)]``."""
    F = Factorizer(w)
    rng = np.random.default_rng(seed)
    z = rng.uniform(-3, 3, 50) + 1j * rng.choice([-1, 1], 50) * rng.uniform(0.1, 3, 50)
    mu = np.linspace(0.05, 4.0, 200)
    G = coefficient_G(mu, w)
    jump = np.max(np.abs(F.X_plus(mu) / F.X_minus(mu) - G) / np.abs(G))
    rows = [
        ("wall_bc", verify_wall_bc(F, mu), TOLERANCES["wall_bc"]),
        ("factorization", float(np.max(F.check_factorization(z))), TOLERANCES["factorization"]),
        ("representation", float(np.max(F.representation_residual(z))), TOLERANCES["representation"]),
        ("jump", float(jump), TOLERANCES["jump"]),
        ("wall_two_paths", abs(wall_velocity(F).W - wall_velocity_integral(F)), TOLERANCES["wall_two_paths"]),
    ]
    if F.kappa == 1:
        rows.append(("a0_two_forms", abs(coeff_a0(F, "V") - coeff_a0(F, "X")), TOLERANCES["a0_two_forms"]))
    if oracle:
        xs = np.linspace(0.0, 10.0, 101)
        Uo = solve_kinetic_bvp(w, OracleConfig(method="gmres"), xs).U
        rows.append(("oracle", float(np.max(np.abs(Uo - velocity_profile(F, xs).U))), TOLERANCES["oracle"]))
    return F.kappa, rows


def cmd_validate(args):
    kappa, rows = validation_report(args.omega1, oracle=not args.no_oracle)
    print(f"omega1={args.omega1:.10g} kappa={kappa}")
    ok = True
    for name, val, tol in rows:
        passed = bool(val < tol)
        ok &= passed
        print(f"{'PASS' if passed else 'FAIL'}  {name:<16s} {val:.3e}  (tol {tol:.0e})")
    return EXIT_OK if ok else EXIT_VALIDATION


# parser ------------------------------------------------------------------

def _add_dimensional(p):
    g = p.add_argument_group("dimensional output (SI)")
    g.add_argument("--dimensional", action="store_true", help="convert outputs to SI units")
    g.add_argument("--n", type=_positive, help="number density, 1/m^3")
    g.add_argument("--T", type=_positive, help="temperature, K")
    g.add_argument("--m", type=_positive, help="molecular mass, kg")
    g.add_argument("--tau", type=_positive, help="relaxation time, s")
    g.add_argument("--u0", type=_positive, help="plate velocity amplitude, m/s")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="stokes2",
        description="Oscillating plate in a rarefied gas: analytical kinetic solution.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="index, critical frequency and discrete zero")
    p.add_argument("--omega1", type=_positive, required=True)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("sweep", help="wall velocity, force or dissipation over a frequency range")
    p.add_argument("--from", dest="from_", type=_positive, required=True)
    p.add_argument("--to", type=_positive, required=True)
    p.add_argument("--steps", type=_count, required=True)
    p.add_argument("--log", action="store_true", help="geometric spacing")
    p.add_argument("--quantity", choices=("wall", "force", "dissipation"), required=True)
    p.add_argument(
        "--formula", choices=("exact", "small", "small-printed"), default="exact",
        help="wall only: exact closed form, or the small-frequency form with the "
             "consistent ('small') or printed ('small-printed') sign",
    )
    p.add_argument("--jobs", type=int, default=1, help="worker processes (rows stay ordered)")
    p.add_argument("--out", default="-")
    _add_dimensional(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("profile", help="velocity amplitude over distance from the plate")
    p.add_argument("--omega1", type=_positive, required=True)
    p.add_argument("--xmax", type=_positive, required=True)
    p.add_argument("--points", type=_count, required=True)
    p.add_argument("--time", type=float, default=None, help="adds U_t = Re{exp(-i omega1 t) U}")
    p.add_argument("--out", default="-")
    _add_dimensional(p)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("validate", help="run the self-checks and the kinetic oracle")
    p.add_argument("--omega1", type=_positive, required=True)
    p.add_argument("--no-oracle", action="store_true", help="skip the discrete-ordinates comparison")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NearCriticalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEAR_CRITICAL
    except SystemExit as exc:
        if isinstance(exc.code, str):
            parser.error(exc.code)
        raise
    except (OSError, Stokes2Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
