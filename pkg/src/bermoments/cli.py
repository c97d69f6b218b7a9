"""Command-line interface.

Subcommands emit TSV with exact p/q rationals; floats are printed with 12
significant digits.  Exit codes: 0 success (and conjecture pass), 1
conjecture failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .bernpoly import centered_bernoulli_poly, centered_bernoulli_value
from .chern import ChernData, bernoulli_moment_from_chern, builtin_chern_data
from .harness import check_conjecture, conjecture_nu, nu_threshold, trace_convergence
from .moments import ChiVector, bernoulli_moments, moments_of_chi, moments_of_spectrum
from .series import bernoulli_numbers, theta_series
from .spectra import (
    PuiseuxData,
    Spectrum,
    TpqrParams,
    WeightSystem,
    spectrum_curve,
    spectrum_from_weights,
    spectrum_tpqr,
)


def _fmt_float(x: float) -> str:
    return f"{x:.12g}"


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _parse_weights(text: str) -> WeightSystem:
    return WeightSystem(tuple(Fraction(part) for part in text.split(",")))


def _parse_tpqr(text: str) -> TpqrParams:
    p, q, r = (int(part) for part in text.split(","))
    return TpqrParams(p, q, r)


def _parse_puiseux(text: str) -> tuple:
    # validation happens when PuiseuxData is built, so bad invariants get a
    # real diagnostic instead of an argparse usage message
    pairs = []
    for chunk in text.split(","):
        n, _, r = chunk.partition(":")
        pairs.append((int(n), int(r)))
    return tuple(pairs)


def _add_spectrum_source(parser: argparse.ArgumentParser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--weights", type=_parse_weights, help="quasihomogeneous weights, e.g. 1/3,1/2")
    group.add_argument("--tpqr", type=_parse_tpqr, help="hyperbolic triple, e.g. 2,3,7")
    group.add_argument("--puiseux", type=_parse_puiseux, help="Puiseux pairs, e.g. 2:3,2:7")
    group.add_argument("--spectrum-file", help="path of a spectrum text file")


def _spectrum_from_args(args) -> Spectrum:
    if args.weights is not None:
        return spectrum_from_weights(args.weights)
    if args.tpqr is not None:
        return spectrum_tpqr(args.tpqr)
    if args.puiseux is not None:
        return spectrum_curve(PuiseuxData(args.puiseux))
    with open(args.spectrum_file, encoding="utf-8") as handle:
        return Spectrum.from_text(handle.read())


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bermoments",
        description="Exact spectra, Bernoulli moments, and sign-conjecture checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bernoulli", help="print Bernoulli numbers B_0..B_{N-1}")
    p.add_argument("--count", type=int, required=True)

    p = sub.add_parser("theta", help="Taylor coefficients of log((t/2)/sinh(t/2))")
    p.add_argument("--order", type=int, required=True)

    p = sub.add_parser("apoly", help="centered generalized Bernoulli polynomial")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--x", type=_parse_fraction)
    p.add_argument("--nu", type=_parse_fraction)

    p = sub.add_parser("spectrum", help="construct a spectrum and print it")
    spectrum_sub = p.add_subparsers(dest="kind", required=True)
    p_qh = spectrum_sub.add_parser("qh", help="quasihomogeneous, from weights")
    p_qh.add_argument("--weights", type=_parse_weights, required=True)
    p_tpqr = spectrum_sub.add_parser("tpqr", help="hyperbolic T_{p,q,r}")
    p_tpqr.add_argument("--p", type=int, required=True)
    p_tpqr.add_argument("--q", type=int, required=True)
    p_tpqr.add_argument("--r", type=int, required=True)
    p_curve = spectrum_sub.add_parser("curve", help="irreducible plane curve branch")
    p_curve.add_argument("--puiseux", type=_parse_puiseux, required=True)

    p = sub.add_parser("gamma", help="Bernoulli moments of a spectrum")
    _add_spectrum_source(p)
    p.add_argument("--nu", type=_parse_fraction, help="transform parameter")
    p.add_argument("--mode", choices=("W", "S"), help="use nu = n+1 (W) or the spread (S)")
    p.add_argument("--kmax", type=int, required=True)

    p = sub.add_parser("check", help="verify the sign conjecture on a spectrum")
    _add_spectrum_source(p)
    p.add_argument("--mode", choices=("W", "S"), required=True)
    p.add_argument("--kmax", type=int, required=True)

    p = sub.add_parser("trace", help="cosine-normalized moment sequence")
    _add_spectrum_source(p)
    p.add_argument("--nu", type=_parse_fraction, required=True)
    p.add_argument("--kmax", type=int, required=True)

    p = sub.add_parser("nu-threshold", help="bisect the smallest admissible nu")
    _add_spectrum_source(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--nu-hi", type=_parse_fraction, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--k-cap", type=int)

    p = sub.add_parser("manifold", help="moments of a compact complex manifold")
    p.add_argument("--chi", help="comma-separated chi_0..chi_n, e.g. 2,20,2")
    p.add_argument("--nu", type=_parse_fraction)
    p.add_argument("--kmax", type=int)
    manifold_sub = p.add_subparsers(dest="mode")
    p_chern = manifold_sub.add_parser("chern", help="from Chern numbers")
    p_chern.add_argument("--builtin", help="pn:N, k3 or genus:G")
    p_chern.add_argument("--file", help="Chern number file")
    p_chern.add_argument("--nu", type=_parse_fraction, required=True)
    p_chern.add_argument("--kmax", type=int, required=True)

    return parser


def _read_chern_file(path: str) -> ChernData:
    n = None
    numbers = {}
    with open(path, encoding="utf-8") as handle:
        for raw in handle:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if fields[0] == "n" and len(fields) == 2:
                n = int(fields[1])
            elif fields[0] == "partition" and len(fields) == 4 and fields[2] == "value":
                partition = tuple(int(p) for p in fields[1].split(","))
                numbers[partition] = Fraction(fields[3])
            else:
                raise ValueError(f"unrecognized Chern file line: {line!r}")
    if n is None:
        raise ValueError("Chern file is missing the 'n <int>' line")
    return ChernData(n, numbers)


def _cmd_bernoulli(args) -> int:
    for value in bernoulli_numbers(args.count):
        print(value)
    return 0


def _cmd_theta(args) -> int:
    series = theta_series(args.order)
    for k in range(args.order + 1):
        print(f"{k}\t{series.coeff(k)}")
    return 0


def _cmd_apoly(args) -> int:
    if (args.x is None) != (args.nu is None):
        print("apoly needs both --x and --nu, or neither", file=sys.stderr)
        return 2
    if args.x is not None:
        print(centered_bernoulli_value(args.k, args.x, args.nu))
        return 0
    poly = centered_bernoulli_poly(args.k)
    monomials = {}
    for mono, coeff in poly.terms():
        exps = dict(mono)
        monomials[(exps.get("x", 0), exps.get("nu", 0))] = coeff
    for (a, b) in sorted(monomials, reverse=True):
        print(f"x^{a} nu^{b} -> {monomials[(a, b)]}")
    return 0


def _cmd_spectrum(args) -> int:
    if args.kind == "qh":
        spectrum = spectrum_from_weights(args.weights)
    elif args.kind == "tpqr":
        params = TpqrParams(args.p, args.q, args.r)
        if not params.is_hyperbolic:
            print("# non-hyperbolic triple (1/p + 1/q + 1/r >= 1)")
        spectrum = spectrum_tpqr(params)
    else:
        spectrum = spectrum_curve(PuiseuxData(args.puiseux))
    sys.stdout.write(spectrum.to_text())
    return 0


def _cmd_gamma(args) -> int:
    if (args.nu is None) == (args.mode is None):
        print("gamma needs exactly one of --nu or --mode", file=sys.stderr)
        return 2
    spectrum = _spectrum_from_args(args)
    nu = args.nu if args.nu is not None else conjecture_nu(spectrum, args.mode)
    gamma = bernoulli_moments(moments_of_spectrum(spectrum, 2 * args.kmax), nu)
    for k in range(args.kmax + 1):
        print(f"{k}\t{gamma.moment(2 * k)}")
    return 0


def _cmd_check(args) -> int:
    spectrum = _spectrum_from_args(args)
    report = check_conjecture(spectrum, args.mode, args.kmax)
    for k, value, ok in report.rows:
        print(f"{k}\t{value}\t{'pass' if ok else 'fail'}")
    print(f"overall\t{'pass' if report.overall else 'fail'}")
    return 0 if report.overall else 1


def _cmd_trace(args) -> int:
    spectrum = _spectrum_from_args(args)
    values = trace_convergence(spectrum, args.nu, args.kmax)
    for k, value in enumerate(values, start=1):
        print(f"{k}\t{_fmt_float(value)}")
    return 0


def _cmd_nu_threshold(args) -> int:
    spectrum = _spectrum_from_args(args)
    estimate = nu_threshold(spectrum, args.k, args.nu_hi, args.steps, args.k_cap)
    print(estimate)
    return 0


def _cmd_manifold(args) -> int:
    if args.mode == "chern":
        if (args.builtin is None) == (args.file is None):
            print("manifold chern needs exactly one of --builtin or --file", file=sys.stderr)
            return 2
        data = builtin_chern_data(args.builtin) if args.builtin else _read_chern_file(args.file)
        for k in range(args.kmax + 1):
            print(f"{k}\t{bernoulli_moment_from_chern(data, args.nu, k)}")
        return 0
    if args.chi is None or args.nu is None or args.kmax is None:
        print("manifold needs --chi, --nu and --kmax (or the chern subcommand)", file=sys.stderr)
        return 2
    chi = ChiVector(tuple(int(part) for part in args.chi.split(",")))
    gamma = bernoulli_moments(moments_of_chi(chi, 2 * args.kmax), args.nu)
    for k in range(args.kmax + 1):
        print(f"{k}\t{gamma.moment(2 * k)}")
    return 0


_HANDLERS = {
    "bernoulli": _cmd_bernoulli,
    "theta": _cmd_theta,
    "apoly": _cmd_apoly,
    "spectrum": _cmd_spectrum,
    "gamma": _cmd_gamma,
    "check": _cmd_check,
    "trace": _cmd_trace,
    "nu-threshold": _cmd_nu_threshold,
    "manifold": _cmd_manifold,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
