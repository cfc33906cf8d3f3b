"""
Command-line front end: one argparse subcommand per operation, output as
text, json or csv.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

import pandas as pd

from modules.design import DEFAULT_STRENGTH_CAP, is_t_design, max_strength
from modules.hecke import (check_multiplicativity, eigenform, h3_character_values, h3_eigenforms,
                           ramanujan_check)
from modules.lattice import (Harmonic, lattice_for_class, modular_level, shell, theta_series,
                             weighted_theta)
from modules.qfield import field_from_d
from modules.qseries import SCHEMA, dumps, format_qseries, series_to_frame, series_to_record
from modules.scanner import scan_forms, summarize_conjecture
from modules.verify import (DEFAULT_NONVANISHING_BOUND, DEFAULT_SHELL_BOUND, MAX_WORKERS,
                            reproduce_tables, run_all, table_frames)

logger = logging.getLogger(__name__)

FORMATS = ("text", "json", "csv")
CAMPAIGNS = ("non-design", "disjoint", "d5-series", "d23-series", "tables", "toy")
LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class Output:
    """Collects the requested output; written once, to --out or stdout."""

    def __init__(self, path: Optional[str]):
        self.path = path
        self.chunks: List[str] = []

    def write(self, text: str) -> None:
        self.chunks.append(text if text.endswith("\n") else text + "\n")

    def flush(self) -> None:
        body = "".join(self.chunks)
        if self.path:
            Path(self.path).write_text(body, encoding="utf-8")
        else:
            sys.stdout.write(body)


def _frame_text(df: pd.DataFrame) -> str:
    return "(empty)" if df.empty else df.to_string(index=False)


def _emit_frame(out: Output, fmt: str, df: pd.DataFrame, **meta) -> None:
    if fmt == "json":
        out.write(dumps({"schema": SCHEMA, **meta, "rows": df.to_dict(orient="records")}))
    elif fmt == "csv":
        out.write(df.to_csv(index=False))
    else:
        out.write(_frame_text(df))


def _emit_series(out: Output, fmt: str, series, **meta) -> None:
    if fmt == "json":
        out.write(dumps(series_to_record(series, **meta)))
    elif fmt == "csv":
        out.write(series_to_frame(series).to_csv(index=False))
    else:
        out.write(format_qseries(series))


# ─── Subcommands ──────────────────────────────────────────────────────

def cmd_theta(args, out: Output) -> int:
    L = lattice_for_class(field_from_d(args.d), args.class_index)
    _emit_series(out, args.format, theta_series(L, args.N),
                 kind="theta", d=args.d, **{"class": args.class_index}, lattice=str(L))
    return EXIT_OK


def cmd_wtheta(args, out: Output) -> int:
    L = lattice_for_class(field_from_d(args.d), args.class_index)
    P = Harmonic(args.P)
    level = modular_level(L)
    _emit_series(out, args.format, weighted_theta(L, P, args.N),
                 kind="weighted_theta", d=args.d, **{"class": args.class_index},
                 lattice=str(L), harmonic=P.value, level=level.level, character=level.character)
    return EXIT_OK


def cmd_shell(args, out: Output) -> int:
    L = lattice_for_class(field_from_d(args.d), args.class_index)
    points = shell(L, args.m)
    df = pd.DataFrame(points, columns=["u", "v"])
    if args.format == "text":
        out.write(f"{L} m={args.m}: {len(points)} vectors")
        for u, v in points:
            out.write(f"  ({u}, {v})")
    else:
        _emit_frame(out, args.format, df, kind="shell", d=args.d,
                    **{"class": args.class_index}, m=args.m, size=len(points))
    return EXIT_OK


def cmd_design(args, out: Output) -> int:
    L = lattice_for_class(field_from_d(args.d), args.class_index)
    if args.t is not None:
        verdict = is_t_design(L, args.m, args.t)
    else:
        verdict = max_strength(L, args.m, args.cap)
    record = {
        "schema": SCHEMA, "kind": "design", "d": args.d, "class": args.class_index,
        "lattice": str(L), "m": verdict.m, "shell_size": verdict.shell_size,
        "max_strength": verdict.max_strength, "failing_degree": verdict.failing_degree,
        "cap": verdict.cap, "is_design": verdict.is_design,
    }
    if args.format == "json":
        out.write(dumps(record))
    elif args.format == "csv":
        out.write(pd.DataFrame([record]).drop(columns=["schema"]).to_csv(index=False))
    else:
        status = "design" if verdict.is_design else f"fails at degree {verdict.failing_degree}"
        out.write(f"{L} m={verdict.m} size={verdict.shell_size} "
                  f"strength={verdict.max_strength} (cap {verdict.cap}): {status}")
    return EXIT_OK


def cmd_scan(args, out: Output) -> int:
    report = scan_forms(args.disc_min, args.N, args.cap)
    if not args.summary:
        _emit_frame(out, args.format, report, kind="scan", disc_min=args.disc_min, N=args.N)
        return EXIT_OK
    summary = summarize_conjecture(report, args.disc_min, args.N)
    _emit_frame(out, args.format, summary, kind="scan_summary", disc_min=args.disc_min, N=args.N)
    return EXIT_OK if summary["consistent"].all() else EXIT_FAILED


def cmd_eigenform(args, out: Output) -> int:
    K = field_from_d(args.d)
    f = eigenform(K, args.N, args.variant)
    if not args.check:
        _emit_series(out, args.format, f.coeffs, kind="eigenform", d=args.d,
                     variant=f.variant, weight=f.weight, level=f.level, character=f.character)
        return EXIT_OK
    checks = [check_multiplicativity(f), ramanujan_check(f)]
    df = pd.DataFrame([{"check": c.name, "passed": c.passed, "checked": c.checked,
                        "witness": c.witness, "detail": c.detail} for c in checks])
    if args.format == "text":
        out.write(format_qseries(f.coeffs))
    _emit_frame(out, args.format, df, kind="eigenform_checks", d=args.d, variant=f.variant)
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FAILED


def _polynomial(coeffs, var: str) -> str:
    """Integer coefficients, highest degree first, as '512 a^3 - 96 a + 7'."""
    degree = len(coeffs) - 1
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        power = degree - k
        mono = "" if power == 0 else var if power == 1 else f"{var}^{power}"
        size = abs(c)
        body = mono if size == 1 and mono else f"{size} {mono}".rstrip()
        if parts:
            parts.append(f"{'-' if c < 0 else '+'} {body}")
        else:
            parts.append(f"-{body}" if c < 0 else body)
    return " ".join(parts) or "0"


def cmd_h3(args, out: Output) -> int:
    solution = h3_eigenforms(args.N)
    characters = h3_character_values()
    if args.format == "json":
        out.write(dumps({
            "schema": SCHEMA, "kind": "h3", "N": args.N,
            "a_cubic": list(solution.a_cubic), "b_cubic": list(solution.b_cubic),
            "linear_relation": list(solution.linear_relation),
            "a_roots": list(solution.a_roots), "b_roots": list(solution.b_roots),
            "pairing": [list(p) for p in solution.pairing],
            "residuals": [list(r) for r in solution.residuals],
            "character_a2": [a2 for _, a2, _ in characters],
            "character_a3": [a3 for _, _, a3 in characters],
            "eigenforms": [series_to_record(f.coeffs, variant=f.variant)
                           for f in solution.eigenforms],
        }))
        return EXIT_OK
    if args.format == "csv":
        rows = [{"eigenform": f.variant, "m": m, "a": c}
                for f in solution.eigenforms for m, c in f.coeffs]
        out.write(pd.DataFrame(rows).to_csv(index=False, float_format="%.12g"))
        return EXIT_OK
    out.write(f"a-cubic: {_polynomial(solution.a_cubic, 'a')} = 0")
    out.write(f"b-cubic: {_polynomial(solution.b_cubic, 'b')} = 0")
    kb, k2, k1, k0 = solution.linear_relation
    out.write(f"linear:  {_polynomial((kb, 0), 'b')} = {_polynomial((k2, k1, k0), 'a')}")
    out.write("A roots: " + ", ".join(f"{r:.12g}" for r in solution.a_roots))
    out.write("B roots: " + ", ".join(f"{r:.12g}" for r in solution.b_roots))
    for (i, j), res in zip(solution.pairing, solution.residuals):
        out.write(f"pair (A{i + 1}, B{j + 1}) residuals: " + ", ".join(f"{x:.3e}" for x in res))
    out.write("a(2) from phi on a prime over 2: "
              + ", ".join(f"{a2:.6g}" for _, a2, _ in characters))
    out.write("a(3) from phi on a prime over 3: "
              + ", ".join(f"{a3:.6g}" for _, _, a3 in characters))
    for f in solution.eigenforms:
        out.write(f"eigenform {f.variant}: {format_qseries(f.coeffs)}")
    return EXIT_OK


def cmd_tables(args, out: Output) -> int:
    report = reproduce_tables()
    frames = table_frames()
    if args.format == "json":
        out.write(dumps({"schema": SCHEMA, "kind": "tables", "report": report.as_record(),
                         "tables": {k: df.to_dict(orient="records") for k, df in frames.items()}}))
    else:
        for name, df in frames.items():
            out.write(f"# {name}")
            out.write(df.to_csv(index=False) if args.format == "csv" else _frame_text(df))
        if args.format == "text":
            out.write(report.summary_line())
            for line in report.details.get("findings", []):
                out.write(f"finding: {line}")
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_verify(args, out: Output) -> int:
    if not args.all and args.campaign is None and args.d is None:
        raise ValueError("verify needs --all, --campaign or --d")
    reports = run_all(args.N, args.nonvanishing_N or None, args.workers,
                      campaign=args.campaign, d=args.d)
    if not reports:
        raise ValueError(f"no campaign matches campaign={args.campaign} d={args.d}")
    if args.format == "json":
        out.write(dumps({"schema": SCHEMA, "kind": "verify", "N": args.N,
                         "reports": [r.as_record() for r in reports]}))
    elif args.format == "csv":
        df = pd.DataFrame([{"name": r.name, "bound": r.bound, "status": r.status,
                            "checked_count": r.checked_count,
                            "first_failure": r.first_failure[0] if r.first_failure else None,
                            "elapsed": round(r.elapsed, 3)} for r in reports])
        out.write(df.to_csv(index=False))
    else:
        for r in reports:
            out.write(r.summary_line())
        failed = sum(not r.passed for r in reports)
        out.write(f"{len(reports) - failed}/{len(reports)} campaigns passed")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


COMMANDS: Dict[str, Callable[..., int]] = {
    "theta": cmd_theta, "wtheta": cmd_wtheta, "shell": cmd_shell, "design": cmd_design,
    "scan": cmd_scan, "eigenform": cmd_eigenform, "h3": cmd_h3, "tables": cmd_tables,
    "verify": cmd_verify,
}


# ─── Parser ───────────────────────────────────────────────────────────

def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text", help="Output format (default: text).")
    common.add_argument("--out", metavar="FILE", help="Write output to FILE instead of stdout.")
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="Log to stderr: -v for INFO, -vv for DEBUG.")

    field = argparse.ArgumentParser(add_help=False)
    field.add_argument("--d", type=_positive, required=True, help="Squarefree d of Q(sqrt(-d)).")

    lattice = argparse.ArgumentParser(add_help=False, parents=[field])
    lattice.add_argument("--class", dest="class_index", type=int, default=0,
                         help="Ideal class index, 0 = principal (default: 0).")

    parser = argparse.ArgumentParser(
        prog="qtheta",
        description="Theta series, CM eigenforms and spherical design checks for "
                    "ideal lattices of imaginary quadratic fields.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("theta", parents=[common, lattice], help="Theta series of a class lattice.")
    p.add_argument("--N", type=_positive, default=20, help="Truncation order (default: 20).")

    p = sub.add_parser("wtheta", parents=[common, lattice], help="Harmonic-weighted theta series.")
    p.add_argument("--N", type=_positive, default=20, help="Truncation order (default: 20).")
    p.add_argument("--P", choices=[h.value for h in Harmonic], default=Harmonic.X2_Y2.value,
                   help="Harmonic weight (default: x2-y2).")

    p = sub.add_parser("shell", parents=[common, lattice], help="Lattice vectors of norm m.")
    p.add_argument("--m", type=_positive, required=True)

    p = sub.add_parser("design", parents=[common, lattice], help="Spherical design strength of a shell.")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--t", type=_positive, help="Test this strength only.")
    p.add_argument("--cap", type=_positive, default=DEFAULT_STRENGTH_CAP,
                   help=f"Highest degree tried (default: {DEFAULT_STRENGTH_CAP}).")

    p = sub.add_parser("scan", parents=[common], help="Design scan over all reduced forms.")
    p.add_argument("--disc-min", dest="disc_min", type=int, default=-100,
                   help="Most negative discriminant scanned (default: -100).")
    p.add_argument("--N", type=_positive, default=50, help="Norm bound per form (default: 50).")
    p.add_argument("--cap", type=_positive, default=DEFAULT_STRENGTH_CAP)
    p.add_argument("--summary", action="store_true", help="Per-form trichotomy summary instead of rows.")

    p = sub.add_parser("eigenform", parents=[common, field], help="Weight 3 CM eigenform.")
    p.add_argument("--N", type=_positive, default=20, help="Truncation order (default: 20).")
    p.add_argument("--variant", type=int, choices=(1, 2), default=1)
    p.add_argument("--check", action="store_true", help="Also run the Hecke and Ramanujan checks.")

    p = sub.add_parser("h3", parents=[common], help="Numeric eigenforms of Q(sqrt(-23)).")
    p.add_argument("--N", type=_positive, default=50, help="Truncation order (default: 50).")

    sub.add_parser("tables", parents=[common], help="Reproduce the reference tables.")

    p = sub.add_parser("verify", parents=[common], help="Run verification campaigns.")
    p.add_argument("--all", action="store_true", help="Every campaign over every field.")
    p.add_argument("--campaign", choices=CAMPAIGNS)
    p.add_argument("--d", type=_positive, help="Restrict field campaigns to one d.")
    p.add_argument("--N", type=_positive, default=DEFAULT_SHELL_BOUND,
                   help=f"Shell bound (default: {DEFAULT_SHELL_BOUND}).")
    p.add_argument("--nonvanishing-N", dest="nonvanishing_N", type=_nonnegative,
                   default=DEFAULT_NONVANISHING_BOUND,
                   help=f"Non-vanishing bound, 0 to skip (default: {DEFAULT_NONVANISHING_BOUND}).")
    p.add_argument("--workers", type=_positive, default=MAX_WORKERS)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    _configure_logging(args.verbose)
    logger.debug(f"[cli] {args.command}: {vars(args)}")

    out = Output(args.out)
    try:
        code = COMMANDS[args.command](args, out)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    out.flush()
    return code
