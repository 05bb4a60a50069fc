"""
File formats: walk text, map JSON, samples CSV and report JSON.

Every format carries an explicit version; unknown versions are rejected
with FormatVersionError and schema problems with FormatError naming the
offending field.
"""

from .map_json import MAP_FORMAT_VERSION, dump_map, load_map, read_map, write_map
from .report_json import dump_report, load_report, load_suite_result, read_report, write_report
from .samples_csv import (
    SAMPLES_FORMAT_VERSION,
    SampleTable,
    dump_samples,
    load_samples,
    profiles_frame,
    read_samples,
    write_profiles,
    write_samples,
)
from .walk_text import WALK_FORMAT_VERSION, dump_walk, load_walk, read_walk, write_walk

__all__ = [
    "MAP_FORMAT_VERSION",
    "SAMPLES_FORMAT_VERSION",
    "WALK_FORMAT_VERSION",
    "SampleTable",
    "dump_map",
    "dump_report",
    "dump_samples",
    "dump_walk",
    "load_map",
    "load_report",
    "load_samples",
    "load_suite_result",
    "load_walk",
    "profiles_frame",
    "read_map",
    "read_report",
    "read_samples",
    "read_walk",
    "write_map",
    "write_profiles",
    "write_report",
    "write_samples",
    "write_walk",
]
