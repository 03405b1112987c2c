"""Command-line front end: ``bergex solve | verify | sweep``.

Exit codes
----------
0  success
1  malformed input (bad flags, unreadable kernel, zero kernel, empty corpus)
2  solver did not reach its residual target (the solution is still written)
3  at least one pass/fail check failed (ratio logs never affect this)

``BERGEX_THREADS`` caps the number of worker processes used by ``sweep``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import __version__
from .analytic import TaylorPolynomial, random_polynomial
from .harness import (
    ALL_CHECKS,
    CheckReport,
    LabeledKernel,
    all_passed,
    decay_experiment,
    monomial_kernels,
    run_checks,
    seeded_corpus,
)
from .solver import ExtremalProblem, ExtremalSolution, NonConvergence, SolverOptions, ZeroKernelError, solve

log = logging.getLogger("bergex")

EXIT_OK, EXIT_INPUT, EXIT_NONCONVERGENCE, EXIT_CHECK = 0, 1, 2, 3
CSV_HEADER = ["p", "kernel", "check", "lhs", "rhs", "slack", "passed"]

_TERM = re.compile(r"^([+-]?)\s*(\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)?\s*\*?\s*(z(?:\s*\^\s*(\d+))?)?$")


class InputError(ValueError):
    """Malformed command-line input or kernel file."""


# Kernel input.

def parse_shorthand(text: str) -> TaylorPolynomial:
    """Parses a sum of real monomial terms such as ``"z"``, ``"1+z"`` or ``"2 - 0.5*z^3"``.

    ``random:SEED:DEG`` draws a kernel with coefficients in the unit box.
    """
    text = text.strip()
    if text.startswith("random:"):
        try:
            _, seed, deg = text.split(":")
            return random_polynomial(np.random.default_rng(int(seed)), int(deg))
        except ValueError as exc:
            raise InputError(f"bad random kernel spec {text!r}; expected random:SEED:DEG") from exc
    terms = re.findall(r"[+-]?[^+-]+", text.replace(" ", ""))
    if not terms:
        raise InputError(f"empty kernel {text!r}")
    coeffs: dict[int, float] = {}
    for term in terms:
        m = _TERM.match(term)
        if m is None or (m.group(2) is None and m.group(3) is None):
            raise InputError(f"cannot parse kernel term {term!r}")
        sign, num, zpart, power = m.groups()
        c = float(num) if num is not None else 1.0
        if sign == "-":
            c = -c
        n = 0 if zpart is None else (int(power) if power is not None else 1)
        coeffs[n] = coeffs.get(n, 0.0) + c
    out = np.zeros(max(coeffs) + 1, dtype=complex)
    for n, c in coeffs.items():
        out[n] = c
    return TaylorPolynomial(out)


def kernel_from_json(data) -> LabeledKernel:
    if not isinstance(data, dict) or "coeffs" not in data:
        raise InputError("kernel file must be an object with a 'coeffs' list")
    try:
        coeffs = [complex(float(re_), float(im)) for re_, im in data["coeffs"]]
    except (TypeError, ValueError) as exc:
        raise InputError("kernel coefficients must be [re, im] pairs") from exc
    if not coeffs:
        raise InputError("kernel has no coefficients")
    return LabeledKernel(str(data.get("label", "kernel")), TaylorPolynomial(coeffs))


def kernel_to_json(lk: LabeledKernel) -> dict:
    return {"coeffs": _pairs(lk.kernel.coeffs), "label": lk.label}


def load_kernel(spec: str) -> LabeledKernel:
    """A kernel from a JSON file path, an inline JSON object, or shorthand."""
    path = Path(spec)
    try:
        if spec.lstrip().startswith("{"):
            return kernel_from_json(json.loads(spec))
        if path.suffix == ".json" or path.is_file():
            return kernel_from_json(json.loads(path.read_text()))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read kernel {spec!r}: {exc}") from exc
    return LabeledKernel(spec, parse_shorthand(spec))


def load_kernel_dir(directory: str) -> list[LabeledKernel]:
    d = Path(directory)
    if not d.is_dir():
        raise InputError(f"not a directory: {directory}")
    out = []
    for f in sorted(d.glob("*.json")):
        lk = load_kernel(str(f))
        out.append(LabeledKernel(lk.label if lk.label != "kernel" else f.stem, lk.kernel))
    return out


# Serialization.

def _pairs(values) -> list[list[float]]:
    return [[float(np.real(v)), float(np.imag(v))] for v in values]


def solution_to_json(sol: ExtremalSolution, prob: ExtremalProblem, label: str, converged: bool) -> dict:
    return {
        "tool": "bergex",
        "version": __version__,
        "p": prob.p,
        "kernel": {"coeffs": _pairs(prob.kernel.coeffs), "label": label},
        "converged": converged,
        "F": _pairs(sol.F.coeffs),
        "phi_norm": sol.phi_norm,
        "residual": sol.residual,
        "degree": sol.degree,
        "iterations": sol.iterations,
        "epsilon_final": sol.epsilon_final,
        "history": [
            {"degree": D, "phi_norm": phi, "residual": res, "tail": tail} for D, phi, res, tail in sol.history
        ],
    }


def _timestamp() -> str:
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    when = datetime.fromtimestamp(int(epoch), timezone.utc) if epoch else datetime.now(timezone.utc)
    return when.isoformat(timespec="seconds")


def _write_json(obj: dict, out: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=False) + "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _format_value(v) -> str:
    if v is None:
        return ""
    if isinstance(v, complex):
        return repr(v.real) if v.imag == 0 else f"{v.real!r}{v.imag:+.17g}j"
    return repr(float(v))


def _options(args) -> SolverOptions:
    degree = args.degree
    if degree != "auto":
        try:
            degree = int(degree)
        except ValueError as exc:
            raise InputError(f"--degree must be an integer or 'auto', got {degree!r}") from exc
    return SolverOptions(degree=degree, tol=args.tol)


def _solve(prob: ExtremalProblem, opts: SolverOptions) -> tuple[ExtremalSolution, bool]:
    try:
        return solve(prob, opts), True
    except NonConvergence as exc:
        log.warning("%s", exc)
        return exc.solution, False


def _check_list(text: str) -> list[str]:
    if text == "all":
        return list(ALL_CHECKS)
    names = [c.strip() for c in text.split(",") if c.strip()]
    unknown = [c for c in names if c not in ALL_CHECKS]
    if unknown or not names:
        raise InputError(f"unknown checks {unknown}; choose from {', '.join(ALL_CHECKS)} or 'all'")
    return names


def _float_list(text: str, what: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise InputError(f"{what} must be a comma-separated list of numbers") from exc


# Subcommands.

def cmd_solve(args) -> int:
    lk = load_kernel(args.kernel)
    prob = ExtremalProblem(args.p, lk.kernel)
    sol, converged = _solve(prob, _options(args))
    _write_json(solution_to_json(sol, prob, lk.label, converged), args.out)
    return EXIT_OK if converged else EXIT_NONCONVERGENCE


def cmd_verify(args) -> int:
    lk = load_kernel(args.kernel)
    checks = _check_list(args.checks)
    prob = ExtremalProblem(args.p, lk.kernel)
    sol, converged = _solve(prob, _options(args))
    reports = run_checks(sol, prob, checks, q1=args.q1, seed=args.seed)
    for r in reports:
        log.info("%s", r.line())
    passed = all_passed(reports)
    report = {
        "tool": "bergex",
        "version": __version__,
        "seed": args.seed,
        "timestamp": _timestamp(),
        "problem": {"p": prob.p, "kernel": kernel_to_json(lk), "checks": checks, "q1": args.q1},
        "solution": {
            "converged": converged,
            "phi_norm": sol.phi_norm,
            "residual": sol.residual,
            "degree": sol.degree,
            "iterations": sol.iterations,
        },
        "checks": [r.to_dict() for r in reports],
        "passed": passed,
    }
    _write_json(report, args.out)
    return EXIT_OK if passed else EXIT_CHECK


def _sweep_instance(task) -> list[tuple]:
    p, label, coeffs, checks, tol, seed = task
    prob = ExtremalProblem(p, TaylorPolynomial(coeffs))
    sol, _ = _solve(prob, SolverOptions(tol=tol))
    return [(p, label, r) for r in run_checks(sol, prob, checks, seed=seed)]


def _workers() -> int:
    raw = os.environ.get("BERGEX_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError as exc:
        raise InputError(f"BERGEX_THREADS must be a positive integer, got {raw!r}") from exc
    if n < 1:
        raise InputError(f"BERGEX_THREADS must be a positive integer, got {raw!r}")
    return min(n, os.cpu_count() or 1)


def _sweep_rows(args) -> list[tuple]:
    p_list = _float_list(args.p_list, "--p-list")
    if not p_list:
        raise InputError("--p-list is empty")
    if args.alpha is not None:
        N_list = [int(v) for v in _float_list(args.N, "--N")]
        if not N_list:
            raise InputError("--N is empty")
        rows = []
        for p in p_list:
            for r in decay_experiment(p, args.alpha, N_list):
                rows.append((p, f"decay(alpha={args.alpha:g})", r))
        return rows

    if args.kernel_dir:
        corpus = load_kernel_dir(args.kernel_dir)
    elif args.corpus == "seeded":
        corpus = seeded_corpus(seed=args.seed, size=args.size)
    elif args.corpus == "monomials":
        corpus = monomial_kernels(args.size - 1)
    else:
        raise InputError("give --kernel-dir, --corpus seeded|monomials, or --alpha")
    if not corpus:
        raise InputError("empty corpus")
    checks = _check_list(args.checks)
    tasks = [(p, lk.label, lk.kernel.coeffs, checks, args.tol, args.seed) for p in p_list for lk in corpus]
    for p in p_list:
        ExtremalProblem(p, TaylorPolynomial([1]))  # reject bad exponents before any solving
    workers = _workers()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_sweep_instance, tasks))
    else:
        chunks = [_sweep_instance(t) for t in tasks]
    rows = [row for chunk in chunks for row in chunk]
    # stable sort keeps the runner's order among equal check ids
    rows.sort(key=lambda row: (row[0], row[1], row[2].check_id))
    return rows


def cmd_sweep(args) -> int:
    rows = _sweep_rows(args)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for p, label, r in rows:
        writer.writerow(
            [repr(p), label, r.check_id, _format_value(r.lhs), _format_value(r.rhs), _format_value(r.slack), str(r.passed).lower()]
        )
    if args.out is None or args.out == "-":
        sys.stdout.write(buf.getvalue())
    else:
        Path(args.out).write_text(buf.getvalue())
    failed = [(p, label, r) for p, label, r in rows if r.decisive and not r.passed]
    for p, label, r in failed:
        log.warning("p=%g kernel=%s %s", p, label, r.line())
    return EXIT_CHECK if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bergex", description="Extremal problems in Bergman spaces with polynomial kernels.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="log check results and progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def solver_flags(sp):
        sp.add_argument("--p", type=float, required=True, help="exponent 1 < p < inf")
        sp.add_argument("--kernel", required=True, help="kernel JSON file, inline JSON, or shorthand like '1+z'")
        sp.add_argument("--degree", default="auto", help="working degree or 'auto' (default)")
        sp.add_argument("--tol", type=float, default=1e-9, help="first-order residual target")
        sp.add_argument("--out", help="output path (default stdout)")

    sp = sub.add_parser("solve", parents=[common], help="solve one extremal problem")
    solver_flags(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("verify", parents=[common], help="solve and run checks on one problem")
    solver_flags(sp)
    sp.add_argument("--checks", default="all", help=f"comma list from {','.join(ALL_CHECKS)} or 'all'")
    sp.add_argument("--q1", type=float, default=None, help="exponent for the regularity and converse checks")
    sp.add_argument("--seed", type=int, default=7, help="seed for randomized test data")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", parents=[common], help="run checks over a corpus and p values, write CSV")
    sp.add_argument("--p-list", required=True, help="comma-separated exponents")
    sp.add_argument("--kernel-dir", help="directory of kernel JSON files")
    sp.add_argument("--corpus", choices=("seeded", "monomials"), help="built-in corpus")
    sp.add_argument("--seed", type=int, default=7)
    sp.add_argument("--size", type=int, default=25, help="corpus size")
    sp.add_argument("--checks", default="all")
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--alpha", type=float, default=None, help="run the coefficient-decay experiment instead")
    sp.add_argument("--N", default="4,8,16,32", help="truncation orders for the decay experiment")
    sp.add_argument("--out", help="CSV path (default stdout)")
    sp.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except ZeroKernelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
