# trigonal/cli/main.py
"""
Command-line entry point. Every command prints JSON on stdout; logs go to
stderr. Errors become {"error": {...}} with a nonzero exit status.
"""
import argparse
import json
import logging
import sys
import traceback
from typing import List, Optional

from trigonal import __version__
from trigonal.cli.commands import COMMANDS
from trigonal.core.config import settings
from trigonal.core.errors import TrigonalError

logger = logging.getLogger("trigonal.cli")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trigonal", description=settings.APP_NAME)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=settings.LOG_LEVEL)
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def _fail(code: str, message: str, detail: dict, status: int) -> int:
    sys.stdout.write(json.dumps({"error": {"code": code, "message": message, "detail": detail}}) + "\n")
    return status


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level, stream=sys.stderr, force=True)
    try:
        return args.handler(args)
    except TrigonalError as exc:
        logger.error(f"{args.command} failed ({exc.code}):\n{traceback.format_exc()}")
        return _fail(exc.code, exc.message, exc.detail, exc.exit_status)
    except ValueError as exc:
        logger.error(f"{args.command} rejected its input: {exc}")
        return _fail("invalid_argument", str(exc), {}, 2)
    except Exception as exc:
        logger.error(f"Unhandled exception in {args.command}:\n{traceback.format_exc()}")
        return _fail("internal_error", str(exc), {}, 1)


if __name__ == "__main__":
    sys.exit(main())
