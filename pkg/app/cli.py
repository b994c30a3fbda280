"""Command-line front end: ``python -m app.cli compute --braid "-1 -1" --colors 1,2``.

Exit status is 0 on success, 1 on bad input (usage errors included) or failed
checks and 2 when an internal invariant breaks (an exact division that leaves
a remainder, a failed Gassner self check).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Any, NoReturn, Sequence, TextIO

from dotenv import load_dotenv

from app.config import OUTPUT_FORMATS, settings
from app.schemas.potential import BatchTask
from app.services.braid import parse_braid
from app.services.formatting import axis_payload, render_axis, render_potential
from app.services.potential import axis_potential, potential_function
from app.services.verify import CHECKS, run_suite

logger = logging.getLogger("app.cli")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2

INTERNAL_ERROR = "internal error: "


class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors are input errors, not internal ones."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="braid-potential",
        description="Conway potential functions of colored braid closures.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("compute", "potential function of the closure"),
        ("axis", "potential function of the closure together with the braid axis"),
    ):
        command = commands.add_parser(name, help=help_text)
        command.add_argument("--braid", required=True, help='signed generators, e.g. "-1 -1 -2 -2"')
        command.add_argument("--colors", required=True, help="strand colours at the first letter, e.g. 1,2,3")
        command.add_argument("--format", choices=OUTPUT_FORMATS, default=None, help="output format")

    verify = commands.add_parser("verify", help="run the randomized identity checks")
    verify.add_argument("--checks", nargs="+", choices=list(CHECKS), default=None)
    verify.add_argument("--trials", type=int, default=None)
    verify.add_argument("--max-strands", type=int, default=None)
    verify.add_argument("--max-length", type=int, default=None)
    verify.add_argument("--max-colors", type=int, default=None)
    verify.add_argument("--seed", type=int, default=None)

    batch = commands.add_parser("batch", help="one JSON task per input line, one JSON result per output line")
    batch.add_argument("--input", type=argparse.FileType("r", encoding="utf-8"), default="-")
    batch.add_argument("--workers", type=int, default=None)
    return parser


def _compute(args: argparse.Namespace, out: TextIO) -> int:
    braid = parse_braid(args.braid, args.colors)
    fmt = args.format or settings.POTENTIAL_FORMAT
    if args.command == "axis":
        print(render_axis(axis_potential(braid), fmt), file=out)
    else:
        print(render_potential(potential_function(braid), fmt), file=out)
    return EXIT_OK


def _verify(args: argparse.Namespace, out: TextIO) -> int:
    reports = run_suite(
        checks=args.checks,
        trials=args.trials,
        max_strands=args.max_strands,
        max_length=args.max_length,
        seed=args.seed,
        max_colors=args.max_colors,
    )
    passed = all(report.passed for report in reports)
    payload = {"passed": passed, "reports": [report.to_dict() for report in reports]}
    print(json.dumps(payload, indent=2), file=out)
    return EXIT_OK if passed else EXIT_INPUT


def run_task(line_number: int, line: str) -> dict[str, Any]:
    """Evaluate one batch line; errors are reported in the result, never raised."""
    try:
        task = BatchTask.model_validate_json(line)
        braid = parse_braid(task.braid, task.colors)
        if task.mode == "axis":
            result = axis_payload(axis_potential(braid))
        else:
            result = potential_function(braid).to_json()
    except ValueError as exc:
        return {"line": line_number, "ok": False, "error": str(exc)}
    except (ArithmeticError, RuntimeError) as exc:
        logger.error("Batch line %s hit an internal error: %s", line_number, exc)
        return {"line": line_number, "ok": False, "error": f"{INTERNAL_ERROR}{exc}"}
    return {"line": line_number, "ok": True, "result": result}


def _batch(args: argparse.Namespace, out: TextIO) -> int:
    tasks = [(number, line) for number, line in enumerate(args.input, start=1) if line.strip()]
    workers = args.workers or settings.BATCH_WORKERS
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        results = list(pool.map(lambda task: run_task(*task), tasks))
    for result in results:
        print(json.dumps(result), file=out)
    failed = [result for result in results if not result["ok"]]
    if not failed:
        return EXIT_OK
    logger.warning("Batch finished with %s failed lines out of %s", len(failed), len(results))
    if any(result["error"].startswith(INTERNAL_ERROR) for result in failed):
        return EXIT_INTERNAL
    return EXIT_INPUT


COMMANDS = {"compute": _compute, "axis": _compute, "verify": _verify, "batch": _batch}


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    load_dotenv()
    logging.basicConfig(
        level=getattr(logging, settings.LOG_LEVEL, logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # --help exits with 0, usage errors with EXIT_INPUT
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    out = out or sys.stdout
    try:
        return COMMANDS[args.command](args, out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ArithmeticError, RuntimeError) as exc:
        logger.exception("Internal error while running %s", args.command)
        print(f"{INTERNAL_ERROR}{exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
