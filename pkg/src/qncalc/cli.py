"""Command-line interface.

Subcommands:

* ``list-presets``   - built-in presentation ids and sizes
* ``normalize``      - normal form of an expression under a preset/file
* ``check``          - run suites against one preset (or a DSL file)
* ``verify-paper``   - the full suite-by-preset verification matrix
* ``export-preset``  - serialize a built-in preset to DSL text

Reports are JSON (schema in ``docs/report-schema.json``).  ``--report``
writes to the given path; a relative path is resolved against
``$QNCALC_REPORT_DIR`` when that is set.  Exit code 0 means every check
passed (mismatching printed-equation regressions count as failures
unless ``--allow-mismatch`` is given).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .calculus import CALCULUS_PRESETS, diff_presentation
from .dsl import DslError, export_presentation, parse_expression, parse_presentation
from .ncalg import normalize
from .presentations import PRESET_IDS, preset
from .suites import SUITE_NAMES, SuiteConfig, run_all, run_suite

REPORT_DIR_ENV = "QNCALC_REPORT_DIR"


def _resolve_presentation(args):
    if getattr(args, "file", None):
        return parse_presentation(Path(args.file).read_text()), None
    pid = getattr(args, "preset", None) or "glq2"
    if pid.endswith("-diff") and pid[:-5] in CALCULUS_PRESETS:
        return diff_presentation(pid), pid
    return preset(pid), pid


def _report_path(args, default_stem):
    if getattr(args, "report", None):
        path = Path(args.report)
        base = os.environ.get(REPORT_DIR_ENV)
        if base and not path.is_absolute():
            path = Path(base) / path
        return path
    base = os.environ.get(REPORT_DIR_ENV)
    if base:
        return Path(base) / f"{default_stem}.json"
    return None


def _emit(report, args, stem) -> int:
    path = _report_path(args, stem)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(report.dumps() + "\n")
        print(f"report written to {path}")
    counts = report.counts()
    for suite in report.suites:
        for c in suite.checks:
            marker = {"pass": "ok  ", "fail": "FAIL", "mismatch": "MISM",
                      "skipped": "skip"}[c.status]
            print(f"  [{marker}] {suite.name}: {c.name}"
                  + (f"  ({c.details})" if c.status != "pass" and c.details else ""))
    print(f"overall: {report.overall}  "
          f"(pass {counts['pass']}, fail {counts['fail']}, "
          f"mismatch {counts['mismatch']}, skipped {counts['skipped']})")
    return report.exit_code(allow_mismatch=args.allow_mismatch)


def cmd_list_presets(args) -> int:
    for pid in PRESET_IDS:
        p = preset(pid)
        forms = sum(1 for g in p.generators if g.parity)
        print(f"{pid:18s} {len(p.generators):2d} generators "
              f"({forms} odd), {len(p.rules):3d} rules")
    print("\nderived differential systems (usable with normalize/export):")
    for pid in CALCULUS_PRESETS:
        print(f"  {pid}-diff")
    return 0


def cmd_normalize(args) -> int:
    p, _ = _resolve_presentation(args)
    try:
        x = parse_expression(args.expr, p)
    except DslError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(normalize(x, p))
    return 0


def cmd_check(args) -> int:
    source = None
    if args.file:
        source = parse_presentation(Path(args.file).read_text())
    cfg = SuiteConfig(preset=args.preset or "glq2",
                      suites=tuple(args.suite or ()),
                      max_degree=args.max_degree, seed=args.seed,
                      allow_mismatch=args.allow_mismatch, source=source)
    report = run_suite(cfg)
    return _emit(report, args, f"check-{report.preset}")


def cmd_verify_paper(args) -> int:
    report = run_all(seed=args.seed, max_degree=args.max_degree)
    return _emit(report, args, "verify-paper")


def cmd_export_preset(args) -> int:
    p, _ = _resolve_presentation(args)
    text = export_presentation(p)
    if args.out:
        Path(args.out).write_text(text)
        print(f"written to {args.out}")
    else:
        print(text, end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qncalc",
        description="Exact rewriting checks for q-deformed matrix-group calculi")
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("list-presets", help="list built-in presentations")

    ap_norm = sub.add_parser("normalize", help="normal form of an expression")
    ap_norm.add_argument("--preset", choices=list(PRESET_IDS)
                         + [f"{p}-diff" for p in CALCULUS_PRESETS])
    ap_norm.add_argument("--file", help="DSL presentation file")
    ap_norm.add_argument("--expr", required=True)

    ap_check = sub.add_parser("check", help="run suites against one preset")
    ap_check.add_argument("--preset", choices=PRESET_IDS)
    ap_check.add_argument("--file", help="DSL presentation file")
    ap_check.add_argument("--suite", action="append", choices=SUITE_NAMES,
                          help="repeatable; default: all suites")
    ap_check.add_argument("--max-degree", type=int, default=0)
    ap_check.add_argument("--seed", type=int, default=2024)
    ap_check.add_argument("--report", help="JSON report path")
    ap_check.add_argument("--allow-mismatch", action="store_true")

    ap_verify = sub.add_parser("verify-paper",
                               help="full verification matrix over all presets")
    ap_verify.add_argument("--max-degree", type=int, default=0)
    ap_verify.add_argument("--seed", type=int, default=2024)
    ap_verify.add_argument("--report", help="JSON report path")
    ap_verify.add_argument("--allow-mismatch", action="store_true")

    ap_export = sub.add_parser("export-preset", help="serialize a preset to DSL")
    ap_export.add_argument("--preset", required=True,
                           choices=list(PRESET_IDS)
                           + [f"{p}-diff" for p in CALCULUS_PRESETS])
    ap_export.add_argument("--out")
    return ap


_COMMANDS = {
    "list-presets": cmd_list_presets,
    "normalize": cmd_normalize,
    "check": cmd_check,
    "verify-paper": cmd_verify_paper,
    "export-preset": cmd_export_preset,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except DslError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
