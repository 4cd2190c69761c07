"""Command-line front end.

    eulerconst constants --name delta --format json
    eulerconst pi --n 7 --method gp
    eulerconst verify --suite all
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from decimal import Decimal

import numpy as np

from . import cascade, constants, hardy, verify
from .constants import ConstantId
from .errors import DomainError
from .hardy import SequenceKind

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

_CONSTANT_NAMES = {"e": "e", "gamma": "gamma", "delta": "delta", "delta-star": "delta_star"}
_PI_METHODS = {"closed": "closed", "gp": "gil_pelaez", "survival": "survival_integral", "mc": "monte_carlo"}
_SEQ_KINDS = {"A": SequenceKind.A, "B": SequenceKind.B, "Bstar": SequenceKind.B_star}
_BASE_FIELDS = ["id", "value", "error_bound", "provenance"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


def _row(id, value, error_bound=None, provenance="", **extra) -> dict:
    row = {"id": id, "value": value, "error_bound": error_bound, "provenance": provenance}
    row.update(extra)
    return row


def _finite(x):
    # JSON has no nan/inf
    if isinstance(x, float) and not math.isfinite(x):
        return None
    return x


def to_json(report: dict) -> str:
    def clean(obj):
        if isinstance(obj, dict):
            return {k: clean(v) for k, v in obj.items()}
        if isinstance(obj, (list, tuple)):
            return [clean(v) for v in obj]
        if isinstance(obj, (np.floating, np.integer)):
            obj = obj.item()
        return _finite(obj)

    return json.dumps(clean(report), sort_keys=True, allow_nan=False)


def _fmt(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _render_plain(report: dict) -> str:
    lines = []
    if report.get("seed") is not None:
        lines.append(f"seed: {report['seed']}")
    for r in report["results"]:
        parts = [r["id"], _fmt(r["value"])]
        if r["error_bound"] is not None:
            parts.append(f"+/- {r['error_bound']:.3g}")
        if r["provenance"]:
            parts.append(f"[{r['provenance']}]")
        lines.append("  ".join(parts))
    return "\n".join(lines)


def _render_csv(report: dict) -> str:
    fields = list(_BASE_FIELDS)
    for r in report["results"]:
        fields += [k for k in r if k not in fields]
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in report["results"]:
        w.writerow({k: _fmt(v) if isinstance(v, float) else v for k, v in r.items()})
    return buf.getvalue().rstrip("\n")


def _emit(report: dict, fmt: str, plain: str | None = None) -> None:
    if fmt == "json":
        print(to_json(report))
    elif fmt == "csv":
        print(_render_csv(report))
    else:
        print(plain if plain is not None else _render_plain(report))


def _report(command: str, inputs: dict, results: list, seed=None) -> dict:
    rep = {"command": command, "inputs": inputs, "results": results}
    if seed is not None:
        rep["seed"] = seed
    return rep


# -- subcommands -------------------------------------------------------------

def _cmd_constants(args) -> int:
    names = list(_CONSTANT_NAMES) if args.name == "all" else [args.name]
    results = []
    for name in names:
        cid = ConstantId(_CONSTANT_NAMES[name])
        methods = [args.method] if args.method else sorted(constants.METHODS[cid])
        for m in methods:
            if m not in constants.METHODS[cid]:
                raise DomainError(
                    f"unknown method {m!r} for {name}; choose from {sorted(constants.METHODS[cid])}"
                )
            c = constants.constant(cid, m)
            results.append(_row(f"{name}.{m}", c.value, c.abs_error, f"method={m}"))
    _emit(_report("constants", {"name": args.name, "method": args.method}, results), args.format)
    return EXIT_OK


def _cmd_mu(args) -> int:
    results = []
    direct = closed = None
    label = f"mu({args.u:+d},{args.k})"
    if args.method in ("direct", "both"):
        direct = hardy.mu_direct(args.u, args.k)
        results.append(_row(f"{label}.direct", direct, None, "compensated Poisson series"))
    if args.method in ("closed", "both"):
        closed = hardy.mu_closed(args.u, args.k)
        results.append(_row(f"{label}.closed", closed, None, "closed form in e, gamma, delta, delta*"))
    if direct is not None and closed is not None:
        results.append(_row(f"{label}.difference", abs(direct - closed), None, "|direct - closed|"))
    _emit(_report("mu", {"u": args.u, "k": args.k, "method": args.method}, results), args.format)
    return EXIT_OK


def _cmd_seq(args) -> int:
    kind = _SEQ_KINDS[args.kind]
    values = hardy.sequence_table(kind, args.max)
    results = [_row(f"{args.kind}_{m}", v, 0, "exact integer recurrence") for m, v in enumerate(values)]
    _emit(_report("seq", {"kind": args.kind, "max": args.max}, results), args.format)
    return EXIT_OK


def _published_note(n: int) -> str:
    notes = []
    if n in cascade.TABLE1:
        notes.append(f"published (6 digits): {cascade.TABLE1[n]}")
    if n in cascade.TABLE2:
        notes.append(f"published (50 digits): {cascade.TABLE2[n]}")
    return "; ".join(notes)


def _cmd_pi(args) -> int:
    method = _PI_METHODS[args.method]
    seed = None
    if method == "monte_carlo":
        seed = args.seed
        est = cascade.pi_eval(args.n, method, samples=args.samples, seed=seed)
        prov = f"monte carlo, {args.samples} samples, seed {seed}, error bound = 4 sigma"
    else:
        est = cascade.pi_eval(args.n, method, tol=args.tol)
        prov = f"method={method}"
    note = _published_note(args.n)
    if note:
        prov = f"{prov}; {note}"
    inputs = {"n": args.n, "method": args.method, "tol": args.tol}
    if method == "monte_carlo":
        inputs["samples"] = args.samples
    results = [_row(f"Pi_{args.n}", est.value, est.error_bound, prov)]
    _emit(_report("pi", inputs, results, seed), args.format)
    return EXIT_OK


def _cmd_table1(args) -> int:
    results = []
    lines = [f"{'n':>3}  {'computed':<{args.digits + 2}}  published  note"]
    for n in sorted(cascade.TABLE1):
        est = cascade.pi_eval(n, "gil_pelaez")
        shown = "0.5" if n % 2 == 0 else f"{est.value:.{args.digits}f}"
        note = cascade.TABLE1_NOTES.get(n, "")
        results.append(_row(f"n={n}", 0.5 if n % 2 == 0 else est.value,
                            0.0 if n % 2 == 0 else est.error_bound,
                            f"gil_pelaez; published {cascade.TABLE1[n]}", note=note))
        lines.append(f"{n:>3}  {shown:<{args.digits + 2}}  {cascade.TABLE1[n]:<9}  {note}".rstrip())
    _emit(_report("table1", {"digits": args.digits}, results), args.format, "\n".join(lines))
    return EXIT_OK


def _truncate(digits: str, d: int) -> str:
    whole, frac = digits.split(".")
    return f"{whole}.{frac[:d]}"


def _cmd_table2(args) -> int:
    d = args.digits
    results = []
    lines = [f"{'n':>3}  {'published':<{d + 2}}  {'computed':<{d + 2}}  abs diff"]
    for n, published in cascade.TABLE2.items():
        est = cascade.pi_eval(n, "gil_pelaez")
        diff = float(abs(Decimal(published) - Decimal(est.value)))
        pub_t = _truncate(published, d)
        results.append(_row(f"n={n}", est.value, est.error_bound, "gil_pelaez",
                            published=pub_t, abs_diff=diff))
        lines.append(f"{n:>3}  {pub_t:<{d + 2}}  {est.value:<{d + 2}.{d}f}  {diff:.2e}")
    _emit(_report("table2", {"digits": d}, results), args.format, "\n".join(lines))
    return EXIT_OK


def _cmd_clt(args) -> int:
    if args.grid_steps < 2:
        raise DomainError("--grid-steps must be at least 2")
    grid = np.linspace(args.grid_min, args.grid_max, args.grid_steps)
    rep = cascade.clt_report(args.n, grid)
    results = [
        _row("ks_distance", rep.ks_distance, None, "max |F_Z - Phi| on the grid"),
        _row("mean_offset", rep.mean_offset, None, "normal limit centre on the standardized scale"),
    ]
    for z, f, phi in zip(rep.grid, rep.cdf, rep.normal):
        results.append(_row(f"cdf[z={z!r}]", f, None, "gil_pelaez", normal=phi))
    inputs = {"n": args.n, "grid_min": args.grid_min, "grid_max": args.grid_max,
              "grid_steps": args.grid_steps}
    lines = [f"n={args.n}  ks_distance={rep.ks_distance!r}  mean_offset={rep.mean_offset!r}",
             f"{'z':>8}  {'F_Z':<20}  normal"]
    lines += [f"{z:>8.4f}  {f:<20.15f}  {phi:.15f}" for z, f, phi in zip(rep.grid, rep.cdf, rep.normal)]
    _emit(_report("clt", inputs, results), args.format, "\n".join(lines))
    return EXIT_OK


def _cmd_verify(args) -> int:
    suites = verify.run_suites(args.suite)
    results, lines = [], []
    for s in suites:
        for c in s.checks:
            d = c.as_dict()
            results.append(_row(c.id, c.lhs, c.tolerance, c.description, suite=s.suite,
                                lhs=c.lhs, rhs=c.rhs, tolerance=c.tolerance, passed=c.passed))
            status = "passed" if c.passed else "FAILED"
            lines.append(f"{status}  {c.id}  |lhs-rhs|={abs(c.lhs - c.rhs):.3e}  "
                         f"tol={c.tolerance:.1e}  {d['description']}")
    ok = all(s.passed for s in suites)
    total = sum(len(s.checks) for s in suites)
    failed = sum(not c.passed for s in suites for c in s.checks)
    lines.append(f"{total - failed}/{total} checks passed")
    _emit(_report("verify", {"suite": args.suite}, results), args.format, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAILED


# -- parser ------------------------------------------------------------------

def _nonneg_int(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _pos_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="eulerconst", description="Euler constants, Hardy quantities and cascade probabilities.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
        p.set_defaults(func=func)
        return p

    p = add("constants", _cmd_constants, "evaluate e, gamma, delta, delta*")
    p.add_argument("--name", choices=[*_CONSTANT_NAMES, "all"], default="all")
    p.add_argument("--method", default=None)

    p = add("mu", _cmd_mu, "generalized Hardy quantity mu_(u,k)")
    p.add_argument("--u", type=int, choices=[-1, 1], required=True)
    p.add_argument("--k", type=_pos_int, required=True)
    p.add_argument("--method", choices=["direct", "closed", "both"], default="both")

    p = add("seq", _cmd_seq, "exact integer sequences A, B, B*")
    p.add_argument("--kind", choices=list(_SEQ_KINDS), required=True)
    p.add_argument("--max", type=_nonneg_int, required=True)

    p = add("pi", _cmd_pi, "probability Pi_n = Pr{Y_n <= 1}")
    p.add_argument("--n", type=_pos_int, required=True)
    p.add_argument("--method", choices=list(_PI_METHODS), required=True)
    p.add_argument("--samples", type=_pos_int, default=10**7)
    p.add_argument("--seed", type=_nonneg_int, default=42)
    p.add_argument("--tol", type=float, default=1e-13)

    p = add("table1", _cmd_table1, "Pi_n for n = 1..10")
    p.add_argument("--digits", type=_pos_int, default=12)

    p = add("table2", _cmd_table2, "Pi_n for odd n <= 15 against the 50-digit values")
    p.add_argument("--digits", type=_pos_int, default=12)

    p = add("clt", _cmd_clt, "distance of F_Z to its normal limit")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--grid-min", type=float, default=-8.0)
    p.add_argument("--grid-max", type=float, default=8.0)
    p.add_argument("--grid-steps", type=int, default=65)

    p = add("verify", _cmd_verify, "run the verification suites")
    p.add_argument("--suite", choices=["all", *verify.SUITES], default="all")
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"eulerconst {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
