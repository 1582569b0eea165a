"""Command-line front end.

Exit codes: 0 when every emitted report passes, 1 when a check fails, 2 on
usage, parse or structural errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Sequence, TextIO

from homsuper import __version__
from homsuper.fileformat import AlgebraFileError, export_algebra, parse_algebra_file, parse_map_file
from homsuper.graded import HomSuperAlgebra, StructureError, UnsupportedInputError
from homsuper.identities import (
    SubgroupId,
    check_g_hom_associative,
    check_hom_associative_super,
    check_hom_leibniz,
    check_hom_lie_admissible,
    check_hom_lie_super,
    check_morphism,
)
from homsuper.literal import ParseError, parse_scalar
from homsuper.report import CheckReport
from homsuper.sigma import (
    check_bracket_oracle,
    check_hls_conditions,
    check_qhl_identity,
    check_qwitt_hom_lie,
    check_sigma_derivation,
    parse_window,
    qwitt_config,
)
from homsuper.twist import BUILTIN_IDS, TwistError, builtin, yau_twist

IDENTITIES = ("hom-assoc", "hom-lie-super", "hom-leibniz", "admissible",
              *(f"g-assoc:{g.name}" for g in SubgroupId))


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-violations", type=int, default=16, metavar="N")
    common.add_argument("--at", metavar="NAME=VALUE",
                        help="also show residuals evaluated at a rational parameter value")

    parser = _Parser(prog="homsuper", description="Exact checks for Hom-Lie superalgebras.")
    parser.add_argument("--version", action="version", version=f"homsuper {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", parents=[common], help="check an identity on an algebra file")
    p.add_argument("file")
    p.add_argument("--identity", required=True, choices=IDENTITIES)
    p.add_argument("--mode", choices=("jacobi", "s-criterion"), default="jacobi")

    p = sub.add_parser("twist", parents=[common], help="Yau twist of a Lie superalgebra")
    p.add_argument("file")
    p.add_argument("--alpha", required=True, help="file with 'alpha A = ...' lines")
    p.add_argument("--out")

    p = sub.add_parser("builtin", parents=[common], help="print or export a builtin algebra")
    p.add_argument("id", choices=BUILTIN_IDS)
    p.add_argument("--export", metavar="PATH")

    p = sub.add_parser("qwitt", parents=[common], help="checks on the q-deformed Witt superalgebra")
    p.add_argument("--window", required=True, metavar="LO:HI")
    p.add_argument("--check", required=True, choices=("jacobi", "structure", "conditions"))
    p.add_argument("--delta", default="1", help="scalar delta in the twisted identity (default 1)")

    p = sub.add_parser("morphism", parents=[common], help="check a morphism of Hom-superalgebras")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--map", required=True, help="file with 'map A = ...' lines")
    return parser


def _report_dict(r: CheckReport, param: str, at: tuple[str, Fraction] | None) -> dict:
    violations = []
    for v in r.violations:
        item = {"inputs": list(v.inputs), "residual": v.render(param)}
        if at is not None:
            item["evaluated"] = v.evaluated(at[1])
        violations.append(item)
    return {
        "check": r.check,
        "status": r.status,
        "violations": violations,
        "violation_count": r.violation_count,
        "examined": r.examined,
        "details": dict(r.details),
        "version": __version__,
    }


def emit_report(r: CheckReport, fmt: str = "text", param: str = "p",
                at: tuple[str, Fraction] | None = None, elapsed: float | None = None) -> str:
    """Render a report.  JSON output has no timing field, so it is reproducible."""
    if fmt == "json":
        return json.dumps(_report_dict(r, param, at), separators=(",", ":"))
    lines = [f"check: {r.check}", f"status: {r.status}", f"examined: {r.examined}"]
    shown = len(r.violations)
    extra = f" (showing {shown})" if shown < r.violation_count else ""
    lines.append(f"violations: {r.violation_count}{extra}")
    for v in r.violations:
        line = f"  ({', '.join(v.inputs)}): {v.render(param)}"
        if at is not None:
            line += f"   [at {at[0]}={at[1]}: {v.evaluated(at[1])}]"
        lines.append(line)
    for k, val in r.details.items():
        lines.append(f"{k}: {val}")
    if elapsed is not None:
        lines.append(f"time: {elapsed:.3f}s")
    return "\n".join(lines)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str) -> HomSuperAlgebra:
    try:
        return parse_algebra_file(_read(path))
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def _parse_at(text: str | None) -> tuple[str, Fraction] | None:
    if text is None:
        return None
    name, sep, value = text.partition("=")
    if not sep:
        raise UsageError("--at expects NAME=VALUE")
    try:
        return name.strip(), Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--at value {value!r} is not a rational number") from None


def _run_check(args) -> tuple[list[CheckReport], str]:
    H = _load(args.file)
    mv = args.max_violations
    ident = args.identity
    if ident == "hom-assoc":
        r = check_hom_associative_super(H, max_violations=mv)
    elif ident == "hom-lie-super":
        r = check_hom_lie_super(H, max_violations=mv)
    elif ident == "hom-leibniz":
        r = check_hom_leibniz(H, max_violations=mv)
    elif ident == "admissible":
        r = check_hom_lie_admissible(H, args.mode, max_violations=mv)
    else:
        r = check_g_hom_associative(H, ident.split(":", 1)[1], max_violations=mv)
    return [r], H.param or "p"


def _run_twist(args, out: TextIO) -> tuple[list[CheckReport], str]:
    H = _load(args.file)
    alpha, aparam = parse_map_file(_read(args.alpha), H.basis)
    if aparam and H.param and aparam != H.param:
        raise StructureError(f"parameter names differ: {H.param!r} vs {aparam!r}")
    A = H.algebra
    A.param = A.param or aparam
    param = A.param or "p"
    try:
        T = yau_twist(A, alpha, validate=True)
    except TwistError as exc:
        exc.report.details["twist"] = str(exc)
        return [exc.report], param
    text = export_algebra(T)
    if args.out:
        Path(args.out).write_text(text)
        return [check_hom_lie_super(T, max_violations=args.max_violations)], param
    out.write(text)
    return [], param


def _run_builtin(args, out: TextIO) -> tuple[list[CheckReport], str]:
    H = builtin(args.id)
    text = export_algebra(H)
    if args.export:
        Path(args.export).write_text(text)
    else:
        out.write(text)
    return [], H.param or "p"


def _run_qwitt(args) -> tuple[list[CheckReport], str]:
    window = parse_window(args.window)
    mv = args.max_violations
    cfg = qwitt_config(parse_scalar(args.delta, "q"))
    if args.check == "jacobi":
        reports = [check_qwitt_hom_lie(window, max_violations=mv),
                   check_qhl_identity(cfg, window, max_violations=mv)]
    elif args.check == "structure":
        reports = [check_bracket_oracle(window, cfg, max_violations=mv)]
    else:
        reports = [check_sigma_derivation(cfg, window, max_violations=mv),
                   check_hls_conditions(cfg, window, max_violations=mv)]
    return reports, "q"


def _run_morphism(args) -> tuple[list[CheckReport], str]:
    A, B = _load(args.file_a), _load(args.file_b)
    param = A.param or B.param
    f, fparam = parse_map_file(_read(args.map), A.basis, B.basis, keyword="map", default_identity=False)
    return [check_morphism(f, A, B, max_violations=args.max_violations)], param or fparam or "p"


def _normalize_argv(argv: Sequence[str]) -> list[str]:
    # "--window -3:3" would otherwise be read as an option
    out = []
    it = iter(argv)
    for a in it:
        if a == "--window":
            nxt = next(it, None)
            out.append(a if nxt is None else f"--window={nxt}")
        else:
            out.append(a)
    return out


def run_command(argv: Sequence[str], out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = _build_parser().parse_args(_normalize_argv(argv))
        at = _parse_at(args.at)
        start = time.perf_counter()
        if args.command == "check":
            reports, param = _run_check(args)
        elif args.command == "twist":
            reports, param = _run_twist(args, out)
        elif args.command == "builtin":
            reports, param = _run_builtin(args, out)
        elif args.command == "qwitt":
            reports, param = _run_qwitt(args)
        else:
            reports, param = _run_morphism(args)
        elapsed = time.perf_counter() - start
    except UsageError as exc:
        err.write(f"{exc}\n")
        return 2
    except AlgebraFileError as exc:
        err.write(f"error: {exc}\n")
        if exc.report is not None:
            err.write(emit_report(exc.report) + "\n")
        return 2
    except (ParseError, StructureError, UnsupportedInputError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    for r in reports:
        text = emit_report(r, args.format, param, at,
                           elapsed=None if args.format == "json" else elapsed)
        out.write(text + "\n")
    return 0 if all(r.passed for r in reports) else 1


def main(argv: Sequence[str] | None = None) -> int:
    try:
        return run_command(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
