"""ealakit command line: build, check, roots, lift and conjugate on a JSON manifest"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from loguru import logger as logging
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from ealakit import Levels
from ealakit.cli.commands import CHECKS, COMMANDS, Context, cmd_check
from ealakit.config import REPORT_SCHEMA_VERSION, ExitCode, __version__
from ealakit.errors import EalaKitError, ManifestError
from ealakit.schemas import Report
from ealakit.utils import dump_json, load_manifest, validation_pointers
from ealakit.variables import settings

console = Console(stderr=True)


def _options() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--manifest", required=True, type=Path, help="JSON manifest describing L, D and tau")
    shared.add_argument("--window", type=int, help="window bound N (default: manifest, then settings)")
    shared.add_argument("--samples", type=int, help="sample count for randomized checks")
    shared.add_argument("--seed", type=int, help="sampling seed")
    shared.add_argument("--out", type=Path, help="write the JSON report here instead of stdout")
    shared.add_argument("--log-level", default=settings.LOG_LEVEL, choices=[level.name for level in Levels])

    parser = argparse.ArgumentParser(prog="ealakit", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("build", parents=[shared], help="summarize L, Delta, Xi, Gamma and E")
    check = commands.add_parser("check", parents=[shared], help="run one family of axiom checks")
    check.add_argument("which", choices=sorted(CHECKS))
    commands.add_parser("roots", parents=[shared], help="root datum and Chevalley constants of g")
    commands.add_parser("lift", parents=[shared], help="elementary lifts, kernel maps and grading-preserving lifts")
    commands.add_parser("conjugate", parents=[shared], help="conjugate H onto the manifest's H'")
    return parser


def _summary(report: Report) -> None:
    table = Table(title=f"ealakit {report.command} (window {report.window}, seed {report.seed})")
    table.add_column("check")
    table.add_column("result")
    table.add_column("detail", overflow="fold")
    body = report.body.model_dump() if hasattr(report.body, "model_dump") else report.body
    for name, verdict in _verdicts(body):
        table.add_row(name, "[green]pass[/green]" if verdict["passed"] else "[red]FAIL[/red]", escape(verdict.get("detail", "")))
    if table.row_count:
        console.print(table)
    colour = "green" if report.passed else "red"
    console.print(f"[{colour}]{'passed' if report.passed else 'failed'}[/{colour}]")


def _verdicts(body):
    """(name, verdict) pairs found anywhere in a report body"""
    if isinstance(body, dict):
        if {"name", "passed"} <= body.keys():
            yield body["name"], body
            return
        for value in body.values():
            yield from _verdicts(value)
    elif isinstance(body, list):
        for value in body:
            yield from _verdicts(value)


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")
        logging.info(f"Report written to {out}")


def _error(command: str, error: EalaKitError, out: Optional[Path], code: ExitCode) -> int:
    console.print(f"[red]{type(error).__name__}[/red]: {escape(error.message)}")
    _emit(dump_json({"command": command, "tool_version": __version__, "passed": False, "error": error.to_dict()}), out)
    return code.value


def run(argv: Optional[List[str]] = None) -> int:
    args = _options().parse_args(argv)
    logging.remove()
    logging.add(sys.stderr, level=args.log_level)
    command = f"check {args.which}" if args.command == "check" else args.command
    try:
        manifest, digest = load_manifest(args.manifest)
        ctx = Context.resolve(manifest, digest, args.window, args.seed, args.samples)
        if args.command == "check":
            body, passed = cmd_check(ctx, args.which)
        else:
            body, passed = COMMANDS[args.command](ctx)
    except ManifestError as error:
        return _error(command, error, args.out, ExitCode.INVALID_INPUT)
    except ValidationError as error:
        wrapped = ManifestError("Manifest failed validation", witness=validation_pointers(error))
        return _error(command, wrapped, args.out, ExitCode.INVALID_INPUT)
    except EalaKitError as error:
        return _error(command, error, args.out, ExitCode.MATH_FAILURE)
    report = Report(
        schema_version=REPORT_SCHEMA_VERSION,
        command=command,
        manifest_digest=digest,
        tool_version=__version__,
        window=ctx.window,
        seed=ctx.seed,
        samples=ctx.samples,
        passed=passed,
        body=body,
    )
    _emit(dump_json(report), args.out)
    _summary(report)
    return (ExitCode.PASSED if passed else ExitCode.MATH_FAILURE).value


def main() -> None:
    sys.exit(run())
