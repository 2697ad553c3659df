"""Command-line front end.

Subcommands
-----------
schmidt          analytic Schmidt decomposition of a two-mode RICS (JSON)
sweep-amplitude  E vs |alpha0| for a list of component counts (CSV, Fig. 3 style)
sweep-n          E vs N, optionally with the two-term entropy split (CSV, Fig. 4)
kerr             E vs N for Kerr states, optionally with the max-q RICS curve (CSV, Fig. 5)
oracle           cross-validate all available methods on one state (text report)
decompose        RICS-basis coefficients of a single-mode state (JSON)

Exit codes: 0 success, 1 oracle disagreement, 2 bad flags or malformed
JSON, 3 domain errors.  CSV output is deterministic: fixed row order and
12-significant-digit formatting with negative zeros normalized.
"""

import argparse
import json
import sys

import numpy as np

from . import entangle, states
from .entangle import (
    METHOD_ANALYTIC,
    METHOD_EIG,
    entanglement_general,
    entanglement_rics,
    fock_oracle_for,
    max_rics_entanglement,
    schmidt_rics,
    thresholds,
)
from .states import RICSLabel, SQRT2, StateSpec, parse_state_json, to_rics_basis

ORACLE_TOLERANCE = 1e-6


class DomainError(Exception):
    """User input that parses but is physically invalid (exit code 3)."""


def fmt(x):
    """12-significant-digit decimal rendering with -0 normalized to 0."""
    x = float(x)
    if x == 0.0:
        return "0"
    return f"{x:.12g}"


def _parse_complex(text):
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected RE or RE,IM, got {text!r}")


def _parse_int_list(text):
    try:
        values = [int(p) for p in text.split(",") if p]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _effective_alpha0(args):
    alpha0 = args.alpha0
    if getattr(args, "in_amplitude", False):
        alpha0 = alpha0 / SQRT2
    return alpha0


def _emit(lines, out_path):
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_schmidt(args):
    alpha0 = _effective_alpha0(args)
    if alpha0 == 0:
        raise DomainError("alpha0 must be nonzero")
    if not 0 <= args.q <= args.n - 1:
        raise DomainError(f"q must lie in [0, {args.n - 1}]")
    label = RICSLabel(args.q, args.n, alpha0)
    dec = schmidt_rics(label)
    report = entanglement_rics(label)
    payload = {
        "lambdas": [float(x) for x in dec.lambdas],
        "pairing": [[a, b] for a, b in dec.pairing],
        "E_bits": report.e_bits,
    }
    sys.stdout.write(json.dumps(payload) + "\n")
    return 0


def cmd_sweep_amplitude(args):
    if args.steps < 1:
        raise DomainError("steps must be >= 1")
    if args.alpha0_min <= 0:
        raise DomainError("alpha0-min must be > 0 for RICS sweeps")
    grid = np.linspace(args.alpha0_min, args.alpha0_max, args.steps)
    lines = ["alpha0,N,q,E_bits,method"]
    for n in args.n_list:
        if not 0 <= args.q <= n - 1:
            raise DomainError(f"q={args.q} is out of range for N={n}")
        for a in grid:
            e = entanglement_rics(RICSLabel(args.q, n, complex(a))).e_bits
            lines.append(f"{fmt(a)},{n},{args.q},{fmt(e)},{METHOD_ANALYTIC}")
    _emit(lines, args.out)
    return 0


def cmd_sweep_n(args):
    alpha0 = _effective_alpha0(args)
    if alpha0 == 0:
        raise DomainError("alpha0 must be nonzero")
    if args.q < 0:
        raise DomainError("q must be >= 0")
    n_min = max(1, args.q + 1)
    if args.n_max < n_min:
        raise DomainError(f"n-max must be >= {n_min} for q={args.q}")
    header = "alpha0,N,q,E_bits,method"
    if args.decompose:
        header += ",B,S,BplusS"
    lines = [header]
    a_txt = fmt(abs(alpha0))
    for n in range(n_min, args.n_max + 1):
        e = entanglement_rics(RICSLabel(args.q, n, alpha0)).e_bits
        row = f"{a_txt},{n},{args.q},{fmt(e)},{METHOD_ANALYTIC}"
        if args.decompose:
            b = entangle.asymptotic_binomial_entropy(n, alpha0)
            s = entangle.asymptotic_weight_entropy(n, alpha0)
            row += f",{fmt(b)},{fmt(s)},{fmt(b + s)}"
        lines.append(row)
    _emit(lines, args.out)
    return 0


def cmd_kerr(args):
    alpha0 = _effective_alpha0(args)
    if args.n_max < 1:
        raise DomainError("n-max must be >= 1")
    header = "alpha0,N,q,E_bits,method"
    if args.with_rics_qmax:
        header += ",E_rics_qmax,N1,N2"
        th = thresholds(alpha0, 0)
    lines = [header]
    a_txt = fmt(abs(alpha0))
    for n in range(1, args.n_max + 1):
        spec = StateSpec(kind="kerr", n=n, alpha0=alpha0)
        e = entanglement_general(spec).e_bits
        row = f"{a_txt},{n},kerr,{fmt(e)},{METHOD_EIG}"
        if args.with_rics_qmax:
            e_max = max_rics_entanglement(alpha0, n)
            row += f",{fmt(e_max)},{fmt(th.n1)},{fmt(th.n2)}"
        lines.append(row)
    _emit(lines, args.out)
    return 0


def run_oracle(spec, cutoff=None):
    """All applicable methods on one state; returns (reports, max pairwise dE)."""
    reports = []
    if spec.kind == "rics":
        reports.append(entanglement_rics(RICSLabel(spec.q, spec.n, spec.alpha0)))
    reports.append(entanglement_general(spec))
    reports.append(fock_oracle_for(spec, cutoff))
    values = [r.e_bits for r in reports]
    max_delta = max(abs(a - b) for a in values for b in values)
    return reports, max_delta


def cmd_oracle(args):
    try:
        spec = parse_state_json(args.state)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    reports, max_delta = run_oracle(spec, args.cutoff)
    for r in reports:
        sys.stdout.write(f"{r.method}: E_bits = {fmt(r.e_bits)}\n")
    sys.stdout.write(f"max |dE| = {fmt(max_delta)}\n")
    if max_delta < ORACLE_TOLERANCE:
        sys.stdout.write("agreement: PASS\n")
        return 0
    sys.stdout.write("agreement: FAIL\n")
    return 1


def cmd_decompose(args):
    try:
        spec = parse_state_json(args.state)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    state = states.single_mode_state(spec)
    b = to_rics_basis(state)
    payload = {
        "b_q": [[float(x.real), float(x.imag)] for x in b],
        "sum_abs_sq": float(np.sum(np.abs(b) ** 2)),
    }
    sys.stdout.write(json.dumps(payload) + "\n")
    return 0


def _add_out(p):
    p.add_argument("--out", default=None, help="write CSV to a file instead of stdout")


def _add_alpha0(p):
    p.add_argument("--alpha0", type=_parse_complex, required=True,
                   help="per-mode circle radius, RE or RE,IM")
    p.add_argument("--in-amplitude", action="store_true",
                   help="interpret --alpha0 as the beam-splitter input amplitude "
                        "(divides by sqrt(2))")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="circent",
        description="Entanglement of two-mode circular states of light.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schmidt", help="analytic Schmidt decomposition of a two-mode RICS")
    _add_alpha0(p)
    p.add_argument("--n", type=int, required=True, help="number of components")
    p.add_argument("--q", type=int, required=True, help="rotation index")
    p.set_defaults(func=cmd_schmidt)

    p = sub.add_parser("sweep-amplitude", help="E vs |alpha0| at fixed q (CSV)")
    p.add_argument("--n-list", type=_parse_int_list, required=True,
                   help="comma-separated component counts")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--alpha0-min", type=float, required=True)
    p.add_argument("--alpha0-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True,
                   help="number of grid points, endpoints inclusive")
    _add_out(p)
    p.set_defaults(func=cmd_sweep_amplitude)

    p = sub.add_parser("sweep-n", help="E vs N at fixed alpha0 and q (CSV)")
    _add_alpha0(p)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--decompose", action="store_true",
                   help="add the two-term entropy columns B, S, B+S")
    _add_out(p)
    p.set_defaults(func=cmd_sweep_n)

    p = sub.add_parser("kerr", help="E vs N for Kerr states (CSV)")
    _add_alpha0(p)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--with-rics-qmax", action="store_true",
                   help="add the max-over-q RICS curve and the N1/N2 thresholds")
    _add_out(p)
    p.set_defaults(func=cmd_kerr)

    p = sub.add_parser("oracle", help="cross-validate all methods on one state")
    p.add_argument("--state", required=True, help="JSON state descriptor")
    p.add_argument("--cutoff", type=int, default=None, help="Fock-space cutoff override")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("decompose", help="RICS-basis coefficients of a single-mode state")
    p.add_argument("--state", required=True, help="JSON state descriptor")
    p.set_defaults(func=cmd_decompose)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3


def entry_point():
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
