"""
Map JSON format.

A map document lists edges as [tail, head, missing] triples, the
linearized rotation of every vertex and the root edge. Builder bookkeeping
(boundary segments, creation times, active trace) is kept when present so
store/load is lossless. Storing with canonical=True relabels the map by its
root-BFS canonical form first.
"""

import json
from pathlib import Path
from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, ValidationError, model_validator

from src.errors import FormatError, FormatVersionError
from src.maps.isomorphism import canonicalize
from src.models.planar_map import BoundarySegments, OrientedMap

MAP_FORMAT_VERSION = 1


class SegmentsDocument(BaseModel):
    upper_left: List[int]
    lower_left: List[int]
    lower_right: List[int]
    upper_right: List[int]


class MapDocument(BaseModel):
    version: int
    vertex_count: int
    edges: List[Tuple[int, int, bool]]
    rotations: List[List[int]]
    root_edge: Optional[int] = None
    segments: Optional[SegmentsDocument] = None
    creation_times: Optional[List[int]] = None
    active_trace: Optional[List[int]] = None

    @model_validator(mode="after")
    def _check_ids(self) -> "MapDocument":
        if len(self.rotations) != self.vertex_count:
            raise ValueError("rotations must list one rotation per vertex")
        for tail, head, _ in self.edges:
            if not (0 <= tail < self.vertex_count and 0 <= head < self.vertex_count):
                raise ValueError(f"edge endpoint out of range in ({tail}, {head})")
        n_edges = len(self.edges)
        if any(not 0 <= e < n_edges for rotation in self.rotations for e in rotation):
            raise ValueError("rotation refers to an unknown edge id")
        if self.creation_times is not None and len(self.creation_times) != n_edges:
            raise ValueError("creation_times must have one entry per edge")
        return self


def _field_of(error: ValidationError) -> str:
    first = error.errors()[0]
    return ".".join(str(part) for part in first["loc"]) or "document"


def _document(map_: OrientedMap) -> MapDocument:
    segments = None
    if map_.segments is not None:
        segments = SegmentsDocument(
            upper_left=list(map_.segments.upper_left),
            lower_left=list(map_.segments.lower_left),
            lower_right=list(map_.segments.lower_right),
            upper_right=list(map_.segments.upper_right),
        )
    return MapDocument(
        version=MAP_FORMAT_VERSION,
        vertex_count=map_.vertex_count,
        edges=[map_.edge(e) for e in range(map_.edge_count)],
        rotations=[list(r) for r in map_.rotations],
        root_edge=map_.root_edge,
        segments=segments,
        creation_times=(
            None if map_.creation_times is None else [int(t) for t in map_.creation_times]
        ),
        active_trace=(
            None if map_.active_trace is None else [int(e) for e in map_.active_trace]
        ),
    )


def dump_map(map_: OrientedMap, canonical: bool = False) -> str:
    if canonical:
        map_ = canonicalize(map_)
    return _document(map_).model_dump_json(indent=2) + "\n"


def load_map(text: str) -> OrientedMap:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"map file is not JSON: {exc}", field="document") from exc
    if isinstance(raw, dict) and raw.get("version", MAP_FORMAT_VERSION) != MAP_FORMAT_VERSION:
        raise FormatVersionError(
            f"unknown map format version {raw['version']!r}", field="version"
        )
    try:
        document = MapDocument.model_validate(raw)
    except ValidationError as exc:
        field = _field_of(exc)
        raise FormatError(f"invalid map document at '{field}': {exc}", field=field) from exc
    segments = None
    if document.segments is not None:
        segments = BoundarySegments(
            upper_left=tuple(document.segments.upper_left),
            lower_left=tuple(document.segments.lower_left),
            lower_right=tuple(document.segments.lower_right),
            upper_right=tuple(document.segments.upper_right),
        )
    try:
        return OrientedMap(
            tails=[t for t, _, _ in document.edges],
            heads=[h for _, h, _ in document.edges],
            missing=[m for _, _, m in document.edges],
            rotations=tuple(tuple(r) for r in document.rotations),
            root_edge=document.root_edge,
            active_trace=document.active_trace,
            segments=segments,
            creation_times=document.creation_times,
        )
    except ValueError as exc:
        field = "root_edge" if "root" in str(exc) else "edges"
        raise FormatError(f"invalid map: {exc}", field=field) from exc


def read_map(path: Union[str, Path]) -> OrientedMap:
    return load_map(Path(path).read_text(encoding="utf-8"))


def write_map(path: Union[str, Path], map_: OrientedMap, canonical: bool = False) -> None:
    Path(path).write_text(dump_map(map_, canonical), encoding="utf-8")
