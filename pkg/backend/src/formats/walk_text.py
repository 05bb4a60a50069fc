"""
Walk text format.

    start 0 0
    abcab

The step line is empty or absent for the empty walk. An optional first line
`# bipolar-kmsw walk v<N>` pins the format version; without it the file is
read as version 1.
"""

import re
from pathlib import Path
from typing import Union

from src.errors import FormatError, FormatVersionError, InvalidWalkError
from src.models.walk import Walk

WALK_FORMAT_VERSION = 1

_HEADER = re.compile(r"^# bipolar-kmsw walk v(\d+)$")
_START = re.compile(r"^start\s+(-?\d+)\s+(-?\d+)$")


def dump_walk(walk: Walk) -> str:
    x, y = walk.start
    return f"start {x} {y}\n{walk.tags()}\n"


def load_walk(text: str) -> Walk:
    lines = [line.strip() for line in text.splitlines()]
    if lines and lines[0].startswith("#"):
        header = _HEADER.match(lines[0])
        if header is None:
            raise FormatError(f"bad walk header {lines[0]!r}", field="header")
        if int(header.group(1)) != WALK_FORMAT_VERSION:
            raise FormatVersionError(
                f"unknown walk format version {header.group(1)}", field="version"
            )
        lines = lines[1:]
    while lines and not lines[-1]:
        lines.pop()
    if not lines:
        raise FormatError("missing start line", field="start")
    start = _START.match(lines[0])
    if start is None:
        raise FormatError(f"start must be 'start <x> <y>', got {lines[0]!r}", field="start")
    if len(lines) > 2:
        raise FormatError(f"unexpected line {lines[2]!r} after the steps", field="steps")
    steps = lines[1] if len(lines) == 2 else ""
    try:
        return Walk.from_tags(steps, start=(int(start.group(1)), int(start.group(2))))
    except InvalidWalkError as exc:
        raise FormatError(str(exc), field="steps") from exc


def read_walk(path: Union[str, Path]) -> Walk:
    return load_walk(Path(path).read_text(encoding="utf-8"))


def write_walk(path: Union[str, Path], walk: Walk) -> None:
    Path(path).write_text(dump_walk(walk), encoding="utf-8")
