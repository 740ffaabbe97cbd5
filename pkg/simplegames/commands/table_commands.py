"""
verify-table: check the embedded classification table row by row
"""
import argparse
import re

from simplegames.commands.output import CommandContext
from simplegames.schemas.table_schema import VerificationReport
from simplegames.services.table_verifier import verify_table

# commas inside braces belong to labels such as S_{6,23}
_ROW_SEPARATOR = re.compile(r",(?![^{]*\})")


def format_report(report: VerificationReport) -> str:
    lines = []
    for row in report.rows:
        lines.append(f"{row.row} (n={row.n})")
        for check in row.checks:
            lines.append(f"  {check.name:<10} {check.status:<5} {check.detail}")
    counts = {}
    for row in report.rows:
        for check in row.checks:
            counts[check.status] = counts.get(check.status, 0) + 1
    summary = ", ".join(f"{counts.get(s, 0)} {s}" for s in ("pass", "bound", "skip", "fail"))
    lines.append(f"{report.count} rows: {summary}")
    return "\n".join(lines)


def run_verify_table(args: argparse.Namespace, context: CommandContext) -> int:
    selection = None if args.all or not args.rows else _ROW_SEPARATOR.split(args.rows)
    report = verify_table(context.engine, selection)
    context.output.emit(report, format_report(report))
    return 1 if report.status == "failure" else 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify-table", help="Verify the classification table")
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--rows", default=None, help="Comma-separated row numbers (1-based) or labels")
    group.add_argument("--all", action="store_true", help="Every row (the default)")
    parser.set_defaults(handler=run_verify_table)
