"""Command-line entry point.

Examples::

    eginoe moments --n 2 --tau 1 --pmax 3
    eginoe verify --identity eleven --n 4 --tau 1/2 --pmax 12
    eginoe density --n 4 --tau 0.5 --x-min -3 --x-max 3 --points 61
    eginoe coeffs --n 4 --tau 1/2
    eginoe asymptotics --regime weak --alpha 1 --p 2
    eginoe sample --n 100 --tau 1/2 --samples 50 --seed 1 --emit stats
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

import numpy as np

from .algebra import rational_to_str
from .params import ModelParams

EXIT_OK, EXIT_DEFECT, EXIT_USAGE = 0, 1, 2
IDENTITY_CHOICES = ("eleven", "gue", "goe", "ginoe", "mixed", "ode7", "ode3", "odeV",
                    "uv", "sigma", "ulink", "d0")


def fmt(x: float) -> str:
    return format(float(x) + 0.0, ".17g")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def parse_tau(text: str) -> Fraction:
    try:
        tau = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"tau must be a rational like 1/2 or 0.25, got {text!r}")
    if not 0 <= tau <= 1:
        raise argparse.ArgumentTypeError(f"tau must lie in [0, 1], got {tau}")
    return tau


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _params(args, parser) -> ModelParams:
    if args.n < 2 or args.n % 2:
        parser.error(f"--n must be an even integer >= 2, got {args.n}")
    return ModelParams(args.n, args.tau)


def _params_json(**kw) -> dict:
    out = {}
    for k, v in kw.items():
        out[k] = rational_to_str(v) if isinstance(v, Fraction) else v
    return out


def _add_common(p, with_tau=True, n_required=True):
    p.add_argument("--n", type=int, required=n_required, help="matrix size (even, >= 2)")
    if with_tau:
        p.add_argument("--tau", type=parse_tau, required=True,
                       help="non-Hermiticity parameter, exact rational such as 1/2 or 0.25")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="eginoe", description=__doc__,
                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--threads", type=int, default=None,
                    help="worker threads (default: $EGINOE_THREADS or 1)")
    ap.add_argument("--output", "-o", default=None, help="write to this file instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("density", help="tabulate r1, r2 and the total density",
                       description="Example: eginoe density --n 4 --tau 1/2 --x-min -3 --x-max 3 --points 61")
    _add_common(p)
    p.add_argument("--x-min", type=float, default=-3.0)
    p.add_argument("--x-max", type=float, default=3.0)
    p.add_argument("--points", type=int, default=61)

    p = sub.add_parser("moments", help="exact even moments as surds",
                       description="Example: eginoe moments --n 2 --tau 1 --pmax 3")
    _add_common(p)
    p.add_argument("--pmax", type=int, required=True, help="largest half-order p (emits M_0..M_2p)")

    p = sub.add_parser("coeffs", help="dump base, B_k and A_k polynomial tables as JSON",
                       description="Example: eginoe coeffs --n 4 --tau 1/2")
    _add_common(p)

    p = sub.add_parser("verify", help="run one exact verification suite",
                       description="Example: eginoe verify --identity eleven --n 4 --tau 1/2 --pmax 12")
    p.add_argument("--identity", choices=IDENTITY_CHOICES, required=True)
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--tau", type=parse_tau, default=Fraction(1, 2))
    p.add_argument("--pmax", type=int, default=15)
    p.add_argument("--order", type=int, default=30, help="series order J for differential identities")

    p = sub.add_parser("asymptotics", help="expected real count and large-N moments",
                       description="Example: eginoe asymptotics --regime weak --alpha 1 --p 2")
    p.add_argument("--regime", choices=("count", "strong", "weak"), required=True)
    p.add_argument("--alpha", type=_positive_float, default=1.0)
    p.add_argument("--tau", type=parse_tau, default=Fraction(1, 2))
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--p", type=int, default=0)

    p = sub.add_parser("sample", help="Monte Carlo real spectra",
                       description="Example: eginoe sample --n 100 --tau 1/2 --samples 50 --seed 1")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tau", type=parse_tau, required=True)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--convention", choices=("unit", "overN"), default="overN")
    p.add_argument("--emit", choices=("stats", "eigenvalues"), default="stats")
    return ap


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_density(args, parser, out) -> int:
    from .density import DensityInstance
    params = _params(args, parser)
    if args.points < 1:
        parser.error("--points must be >= 1")
    inst = DensityInstance(params)
    xs = np.linspace(args.x_min, args.x_max, args.points)
    r1, r2 = inst.r1(xs), inst.r2(xs)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["x", "r1", "r2", "total"])
    for x, a, b in zip(xs, r1, r2):
        w.writerow([fmt(x), fmt(a), fmt(b), fmt(a + b)])
    return EXIT_OK


def cmd_moments(args, parser, out) -> int:
    from .moments import moment_table
    params = _params(args, parser)
    if args.pmax < 0:
        parser.error("--pmax must be >= 0")
    table = moment_table(params, args.pmax, threads=args.threads or 1)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["order", "coeff_num", "coeff_den", "radicand", "float_value"])
    for i, v in enumerate(table.values):
        w.writerow([2 * i, v.coeff.numerator, v.coeff.denominator, str(v.radicand), fmt(float(v))])
    return EXIT_OK


def cmd_coeffs(args, parser, out) -> int:
    from .coeffs import coeff_set
    params = _params(args, parser)
    cs = coeff_set(params)
    names = "abcd"
    results = {
        "base": {names[i]: p.to_json() for i, p in enumerate(cs.base)},
        "B": [p.to_json() for p in cs.B],
        "A": [p.to_json() for p in cs.A],
    }
    json.dump({"params": _params_json(n=params.n, tau=params.tau), "results": results,
               "defects": []}, out, indent=1)
    out.write("\n")
    return EXIT_OK


def cmd_verify(args, parser, out) -> int:
    from . import recursion as R
    ident = args.identity
    needs_params = ident in ("eleven", "mixed", "ode7", "ode3", "odeV", "uv", "sigma", "ulink", "ginoe")
    params = _params(args, parser) if needs_params else None
    if ident == "ginoe" and params.tau != 0:
        parser.error("--identity ginoe is the tau = 0 recursion; pass --tau 0")
    if ident == "sigma" and params.tau == 0:
        parser.error("--identity sigma needs tau > 0")
    if ident == "eleven":
        if args.pmax < 10:
            parser.error("--pmax must be >= 10 for the eleven-term recurrence")
        rep = R.verify_elliptic_recurrence(params, p_min=10, p_max=args.pmax)
    elif ident == "gue":
        rep = R.verify_gue(args.pmax)
    elif ident == "goe":
        rep = R.verify_goe(max(args.pmax, 4))
    elif ident == "ginoe":
        rep = R.verify_ginoe(params.n, args.pmax)
    elif ident == "d0":
        rep = R.verify_large_n_ginoe(args.order)
    else:
        rep = R.IDENTITIES[ident](params, args.order)
    doc = rep.to_json()
    doc["results"] = {"checked": rep.checked, "notes": rep.notes}
    doc["defects"] = [] if rep.first_defect is None else [rep.first_defect]
    json.dump(doc, out, indent=1)
    out.write("\n")
    return EXIT_OK if rep.ok else EXIT_DEFECT


def cmd_asymptotics(args, parser, out) -> int:
    from . import asymptotics as A
    w = csv.writer(out, lineterminator="\n")
    if args.regime == "count":
        params = _params(args, parser)
        exact = A.expected_real_count_exact(params)
        w.writerow(["n", "tau", "expected_real_count", "exact_coeff", "exact_radicand"])
        w.writerow([params.n, rational_to_str(params.tau), fmt(A.expected_real_count(params)),
                    rational_to_str(exact.coeff), str(exact.radicand)])
    elif args.regime == "strong":
        if args.tau >= 1:
            parser.error("the strong regime needs tau < 1")
        w.writerow(["tau", "p", "moment"])
        w.writerow([rational_to_str(args.tau), args.p, fmt(A.strong_moment(float(args.tau), args.p))])
    else:
        if args.p < 0:
            parser.error("--p must be >= 0")
        series = A.weak_moment_series(args.alpha, args.p)
        bessel = A.weak_moment_bessel(args.alpha, args.p) if args.p in A.BESSEL_ORDERS else ""
        w.writerow(["alpha", "p", "series", "bessel"])
        w.writerow([fmt(args.alpha), args.p, fmt(series), fmt(bessel) if bessel != "" else ""])
    return EXIT_OK


BACKWARD_ERROR_LIMIT = 1e-10


def cmd_sample(args, parser, out) -> int:
    from .sampler import run_samples
    if args.n < 1:
        parser.error("--n must be >= 1")
    if args.samples < 1:
        parser.error("--samples must be >= 1")
    recs = run_samples(args.n, float(args.tau), args.samples, args.seed, args.convention,
                       args.threads)
    w = csv.writer(out, lineterminator="\n")
    status = EXIT_OK
    if args.emit == "eigenvalues":
        w.writerow(["sample_index", "re", "im"])
        for r in recs:
            for x in r.real_eigenvalues:
                w.writerow([r.index, fmt(x), fmt(0.0)])
            for re, im in r.complex_pairs:
                w.writerow([r.index, fmt(re), fmt(im)])
                w.writerow([r.index, fmt(re), fmt(-im)])
    else:
        w.writerow(["sample_index", "count", "power_sum_2", "backward_error"])
        for r in recs:
            w.writerow([r.index, len(r.real_eigenvalues), fmt(np.sum(r.real_eigenvalues ** 2)),
                        fmt(r.backward_error)])
    for r in recs:
        bad_parity = (len(r.real_eigenvalues) - args.n) % 2
        if bad_parity or r.backward_error > BACKWARD_ERROR_LIMIT:
            print(f"sample {r.index}: parity or backward-error defect", file=sys.stderr)
            status = EXIT_DEFECT
    return status


COMMANDS = {"density": cmd_density, "moments": cmd_moments, "coeffs": cmd_coeffs,
            "verify": cmd_verify, "asymptotics": cmd_asymptotics, "sample": cmd_sample}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads is None:
        from .sampler import default_threads
        args.threads = default_threads()
    elif args.threads < 1:
        parser.error("--threads must be >= 1")
    if getattr(args, "tau", None) is not None:
        print(f"tau = {rational_to_str(args.tau)}", file=sys.stderr)
    buf = io.StringIO()
    code = COMMANDS[args.command](args, parser, buf)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return code


if __name__ == "__main__":
    raise SystemExit(main())
