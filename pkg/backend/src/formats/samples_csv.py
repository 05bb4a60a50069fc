"""
Samples CSV format.

The first row is a header declaring the format version, the mode and which
increments the columns hold; the rest is a plain CSV with one row per
replica:

    # bipolar-kmsw samples v1 mode=ldp which=positive_increment
    positive_increment
    -1
    -3
"""

import io
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Optional, Sequence, Union

import numpy as np
import pandas as pd

from src.busemann.increments import WHICH
from src.errors import FormatError, FormatVersionError
from src.models.busemann import BusemannProfile
from src.models.distances import Mode

SAMPLES_FORMAT_VERSION = 1

_HEADER = re.compile(r"^# bipolar-kmsw samples v(\d+) mode=(\S+) which=(\S+)$")


@dataclass(frozen=True)
class SampleTable:
    """Increment columns of one batch, keyed by increment name."""

    mode: Mode
    columns: Dict[str, np.ndarray]

    def __post_init__(self):
        if not self.columns:
            raise ValueError("a sample table needs at least one column")
        unknown = set(self.columns) - set(WHICH)
        if unknown:
            raise ValueError(f"unknown increment columns {sorted(unknown)}")
        if len({len(v) for v in self.columns.values()}) > 1:
            raise ValueError("sample columns must have equal lengths")

    @property
    def which(self) -> str:
        return ",".join(self.columns)


def dump_samples(table: SampleTable) -> str:
    frame = pd.DataFrame({name: np.asarray(v, dtype=np.int64) for name, v in table.columns.items()})
    header = (
        f"# bipolar-kmsw samples v{SAMPLES_FORMAT_VERSION} "
        f"mode={table.mode.value} which={table.which}\n"
    )
    return header + frame.to_csv(index=False, lineterminator="\n")


def load_samples(text: str) -> SampleTable:
    first, _, body = text.partition("\n")
    header = _HEADER.match(first.strip())
    if header is None:
        raise FormatError(f"bad samples header {first!r}", field="header")
    version, mode, which = header.groups()
    if int(version) != SAMPLES_FORMAT_VERSION:
        raise FormatVersionError(f"unknown samples format version {version}", field="version")
    try:
        parsed_mode = Mode.parse(mode)
    except ValueError as exc:
        raise FormatError(str(exc), field="mode") from exc
    names = which.split(",")
    try:
        frame = pd.read_csv(io.StringIO(body), dtype=np.int64)
    except (ValueError, pd.errors.ParserError) as exc:
        raise FormatError(f"unreadable sample rows: {exc}", field="values") from exc
    if list(frame.columns) != names:
        raise FormatError(
            f"columns {list(frame.columns)} do not match which={which}", field="which"
        )
    try:
        return SampleTable(
            mode=parsed_mode, columns={name: frame[name].to_numpy() for name in names}
        )
    except ValueError as exc:
        raise FormatError(str(exc), field="which") from exc


def read_samples(path: Union[str, Path]) -> SampleTable:
    return load_samples(Path(path).read_text(encoding="utf-8"))


def write_samples(path: Union[str, Path], table: SampleTable) -> None:
    Path(path).write_text(dump_samples(table), encoding="utf-8")


PROFILE_COLUMNS = ("replica", "k", "X_k", "window", "censored")


def profiles_frame(profiles: Sequence[Optional[BusemannProfile]], K: int) -> pd.DataFrame:
    """Long table of a profile batch: one row per (replica, k), and a single
    row with empty k and X_k for each censored replica."""
    rows = []
    for replica, profile in enumerate(profiles):
        if profile is None:
            rows.append((replica, None, None, None, True))
            continue
        for k in range(-K, K + 1):
            rows.append((replica, k, profile[k], profile.window, False))
    frame = pd.DataFrame(rows, columns=list(PROFILE_COLUMNS))
    return frame.astype(
        {"replica": "int64", "k": "Int64", "X_k": "Int64", "window": "Int64", "censored": "bool"}
    )


def write_profiles(
    path: Union[str, Path], profiles: Sequence[Optional[BusemannProfile]], K: int
) -> None:
    profiles_frame(profiles, K).to_csv(path, index=False, lineterminator="\n")
