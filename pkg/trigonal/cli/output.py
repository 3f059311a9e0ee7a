# trigonal/cli/output.py
"""
Shared input/output helpers for the commands: spec reading, JSON emission
and the SVG path beside a report.
"""
import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional

from trigonal.core.config import settings
from trigonal.core.errors import ParseError

logger = logging.getLogger(__name__)


def read_text(source: Optional[str]) -> str:
    if source in (None, "-"):
        return sys.stdin.read()
    path = Path(source)
    if not path.exists():
        raise ParseError(f"no such file: {source}", "input")
    return path.read_text(encoding="utf-8")


def emit(payload: Any, out: Optional[str]) -> None:
    text = json.dumps(payload, indent=2, sort_keys=False)
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
        logger.info(f"Report written to {out}")
    else:
        sys.stdout.write(text + "\n")


def svg_path(out: Optional[str], source: Optional[str], default: str) -> Path:
    """Beside the report when there is one, else named after the input"""
    if out:
        return Path(out).with_suffix(".svg")
    if source not in (None, "-"):
        return Path(Path(source).stem + ".svg")
    return Path(default)


def write_svg(svg: str, path: Path) -> str:
    path.write_text(svg, encoding="utf-8")
    logger.info(f"SVG written to {path}")
    return str(path)


def apply_tolerance(tolerance: Optional[float]) -> None:
    """Override the monochrome tolerance for this run"""
    if tolerance is None:
        return
    if tolerance <= 0:
        raise ValueError("--tolerance must be positive")
    settings.MONOCHROME_TOLERANCE = tolerance
    logger.debug(f"Monochrome tolerance set to {tolerance}")
