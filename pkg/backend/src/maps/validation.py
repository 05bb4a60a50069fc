"""
Structural validation of oriented maps.
"""

import logging
from collections import Counter
from typing import List

import networkx as nx

from src.models.planar_map import OrientedMap, ValidationReport, Violation

from .faces import dart_edge, faces

logger = logging.getLogger("maps_logger")


def _rotation_violations(map_: OrientedMap) -> List[Violation]:
    violations = []
    seen = Counter()
    for v, rot in enumerate(map_.rotations):
        for e in rot:
            if not 0 <= e < map_.edge_count:
                violations.append(
                    Violation("rotation", f"vertex {v} lists unknown edge {e}", (v, e))
                )
                continue
            if v not in (map_.tails[e], map_.heads[e]):
                violations.append(
                    Violation("rotation", f"edge {e} is not incident to vertex {v}", (v, e))
                )
            seen[e] += 1
    for e in range(map_.edge_count):
        if map_.tails[e] == map_.heads[e]:
            violations.append(Violation("rotation", f"edge {e} is a loop", (e,)))
        elif seen[e] != 2:
            violations.append(
                Violation("rotation", f"edge {e} appears {seen[e]} times in rotations", (e,))
            )
    return violations


def _cycle_violation(map_: OrientedMap) -> List[Violation]:
    graph = nx.MultiDiGraph()
    graph.add_nodes_from(range(map_.vertex_count))
    for e in map_.oriented_edges():
        graph.add_edge(int(map_.tails[e]), int(map_.heads[e]), key=e)
    try:
        cycle = nx.find_cycle(graph, orientation="original")
    except nx.NetworkXNoCycle:
        return []
    witness = tuple(int(key) for _, _, key, _ in cycle)
    return [Violation("cycle", f"directed cycle through edges {list(witness)}", witness)]


def _contiguity_violations(map_: OrientedMap) -> List[Violation]:
    violations = []
    for v, rot in enumerate(map_.rotations):
        kinds = [map_.tails[e] == v for e in rot if not map_.missing[e]]
        changes = sum(1 for i in range(len(kinds)) if kinds[i] and not kinds[i - 1])
        if changes > 1:
            violations.append(
                Violation(
                    "contiguity",
                    f"vertex {v} has {changes} separate blocks of outgoing edges",
                    (v,),
                )
            )
    return violations


def _face_violations(map_: OrientedMap) -> List[Violation]:
    violations = []
    face_set = faces(map_)
    for f in face_set.bounded():
        cycle = face_set.cycles[f]
        if len(cycle) != 3:
            edges = tuple(dart_edge(d) for d in cycle)
            violations.append(
                Violation("face-degree", f"bounded face with {len(cycle)} sides", edges)
            )
    for e in range(map_.edge_count):
        if not map_.missing[e]:
            continue
        sides = {int(face_set.labels[2 * e]), int(face_set.labels[2 * e + 1])}
        if face_set.external not in sides:
            violations.append(
                Violation("missing-edge", f"missing edge {e} is not on the external face", (e,))
            )
    return violations


def validate(map_: OrientedMap) -> ValidationReport:
    """Check acyclicity, triangular bounded faces, contiguous in/out blocks
    and the placement of missing edges."""
    report = ValidationReport(violations=_rotation_violations(map_))
    report.violations.extend(_cycle_violation(map_))
    report.violations.extend(_contiguity_violations(map_))
    if not any(v.kind == "rotation" for v in report.violations):
        report.violations.extend(_face_violations(map_))
    if not report.valid:
        logger.info(f"Map validation found {report.kinds()}")
    return report
