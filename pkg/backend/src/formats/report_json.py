"""
Report JSON format: ExperimentReport and SuiteResult documents.
"""

import json
from pathlib import Path
from typing import Type, TypeVar, Union

from pydantic import BaseModel, ValidationError

from src.errors import FormatError, FormatVersionError
from src.models.experiments import REPORT_SCHEMA_VERSION, ExperimentReport, SuiteResult

DocumentT = TypeVar("DocumentT", bound=BaseModel)


def dump_report(report: Union[ExperimentReport, SuiteResult]) -> str:
    return report.model_dump_json(indent=2) + "\n"


def _load(text: str, model: Type[DocumentT]) -> DocumentT:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"report is not JSON: {exc}", field="document") from exc
    version = raw.get("schema_version") if isinstance(raw, dict) else None
    if version is not None and version != REPORT_SCHEMA_VERSION:
        raise FormatVersionError(
            f"unknown report schema version {version!r}", field="schema_version"
        )
    try:
        return model.model_validate(raw)
    except ValidationError as exc:
        field = ".".join(str(part) for part in exc.errors()[0]["loc"]) or "document"
        raise FormatError(f"invalid report at '{field}': {exc}", field=field) from exc


def load_report(text: str) -> ExperimentReport:
    return _load(text, ExperimentReport)


def load_suite_result(text: str) -> SuiteResult:
    return _load(text, SuiteResult)


def read_report(path: Union[str, Path]) -> ExperimentReport:
    return load_report(Path(path).read_text(encoding="utf-8"))


def write_report(path: Union[str, Path], report: Union[ExperimentReport, SuiteResult]) -> None:
    Path(path).write_text(dump_report(report), encoding="utf-8")
