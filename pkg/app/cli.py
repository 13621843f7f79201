"""
Command-line front door: every computation with deterministic text or JSON
output on stdout, logs on stderr.
"""
from __future__ import annotations

import argparse
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

import structlog

from app.core.config import settings
from app.core.exceptions import SeshadriError
from app.core.logging import configure_logging
from app.models.points import PointSpec
from app.schemas.seshadri import CommandResult
from app.services.curve_atlas_service import CurveAtlasService
from app.services.linear_system_service import LinearSystemService, LinearSystemSpec
from app.services.positivity_service import PositivityService
from app.services.seshadri_service import SeshadriService
from app.utils.json_helper import dumps, sanitize_for_json

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE = 2


def _mult_list(text: str) -> List[int]:
    try:
        return [int(m) for m in text.split(",") if m.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma separated list of integers, got '{text}'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python -m app",
        description="Seshadri constants of -K on blow-ups of the plane in r <= 8 points",
    )
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.add_argument("--log-level", default=None, help="overrides LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seshadri", help="Seshadri constant at one point")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--point", default="general", help="general | node | distinguished:<d:a1,...>")

    sub.add_parser("theorem-table", help="every case for r = 1..8 with witnesses")

    p = sub.add_parser("exceptional", help="(-1)-classes of X_r")
    p.add_argument("--r", type=int, required=True)

    p = sub.add_parser("expected-dim", help="expected dimension of a plane linear system")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mults", type=_mult_list, default=[])

    p = sub.add_parser("oracle", help="brute-force infimum over candidate curves")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--point", default="general")
    p.add_argument("--dmax", type=int, default=settings.ORACLE_DMAX)

    p = sub.add_parser("pencil-nodes", help="singular members of the cubic pencil through 8 points")
    p.add_argument("--sample", type=int, action="append", default=[], metavar="SEED")

    p = sub.add_parser("counterexample", help="positivity counterexamples beyond del Pezzo")
    p.add_argument("name", choices=PositivityService().available_counterexamples())
    p.add_argument("--dmax", type=int, default=settings.POSITIVITY_DMAX)
    return parser


def _seshadri(args) -> Any:
    return SeshadriService().seshadri_constant(args.r, PointSpec.parse(args.point, args.r))


def _theorem_table(args) -> Any:
    return {"rows": SeshadriService().theorem_table()}


def _exceptional(args) -> Any:
    return CurveAtlasService().summary(args.r)


def _expected_dim(args) -> Any:
    return LinearSystemService().describe(LinearSystemSpec(args.d, tuple(args.mults)))


def _oracle(args) -> Any:
    return SeshadriService().oracle_report(args.r, PointSpec.parse(args.point, args.r), args.dmax)


def _pencil_nodes(args) -> Any:
    return SeshadriService().node_count_report(args.sample)


def _counterexample(args) -> Any:
    return PositivityService().counterexample(args.name, args.dmax)


COMMANDS: Dict[str, Callable[[argparse.Namespace], Any]] = {
    "seshadri": _seshadri,
    "theorem-table": _theorem_table,
    "exceptional": _exceptional,
    "expected-dim": _expected_dim,
    "oracle": _oracle,
    "pencil-nodes": _pencil_nodes,
    "counterexample": _counterexample,
}


def execute(args: argparse.Namespace) -> CommandResult:
    parameters = {k: v for k, v in sorted(vars(args).items()) if k not in ("command", "format", "log_level")}
    try:
        payload = COMMANDS[args.command](args)
    except SeshadriError as e:
        logger.info("command_failed", command=args.command, code=e.code)
        return CommandResult(
            command=args.command, parameters=parameters, error=e.to_dict(), exit_code=EXIT_DOMAIN_ERROR
        )
    except ValueError as e:
        return CommandResult(
            command=args.command,
            parameters=parameters,
            error={"error": "invalid_argument", "message": str(e)},
            exit_code=EXIT_DOMAIN_ERROR,
        )
    return CommandResult(command=args.command, parameters=parameters, result=sanitize_for_json(payload))


def run(argv: Optional[Sequence[str]] = None) -> CommandResult:
    """Parse and execute; usage errors exit with status 2 through argparse."""
    args = build_parser().parse_args(argv)
    return execute(args)


def render_text(value: Any, indent: int = 0) -> List[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for key in sorted(value):
            item = value[key]
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{key}:")
                lines.extend(render_text(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(item)}")
        return lines
    if isinstance(value, list):
        if all(not isinstance(v, (dict, list)) for v in value):
            return [pad + ", ".join(_scalar(v) for v in value)]
        lines = []
        for n, item in enumerate(value):
            lines.append(f"{pad}- [{n}]")
            lines.extend(render_text(item, indent + 1))
        return lines
    return [pad + _scalar(value)]


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list) and not value:
        return "[]"
    if isinstance(value, dict) and not value:
        return "{}"
    return str(value)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(level=args.log_level)
    result = execute(args)

    if args.format == "json":
        print(dumps(result.model_dump(exclude={"error" if result.error is None else "result"})))
    elif result.error is not None:
        print(f"error [{result.error['error']}]: {result.error['message']}", file=sys.stderr)
    else:
        print("\n".join(render_text(result.result)))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
