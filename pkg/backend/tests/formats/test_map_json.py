"""
Unit tests for formats/map_json.py.
"""

import json

import numpy as np
import pytest

from src.errors import FormatError, FormatVersionError
from src.formats import dump_map, load_map, read_map, write_map
from src.kmsw.inverse import invert
from src.maps.isomorphism import isomorphic


def _assert_same_map(a, b):
    assert a.tails.tolist() == b.tails.tolist()
    assert a.heads.tolist() == b.heads.tolist()
    assert a.missing.tolist() == b.missing.tolist()
    assert a.rotations == b.rotations
    assert a.root_edge == b.root_edge
    assert a.segments == b.segments


class TestMapJson:
    def test_document_fields(self, map_factory):
        document = json.loads(dump_map(map_factory("ca")))
        assert document["version"] == 1
        assert document["vertex_count"] == 3
        assert document["edges"] == [[0, 1, False], [0, 2, False], [2, 1, False]]
        assert document["rotations"] == [[0, 1], [2, 0], [2, 1]]
        assert document["root_edge"] == 0

    def test_lossless(self, tmp_path, map_factory):
        original = map_factory("acabbcaacb")
        path = tmp_path / "map.json"
        write_map(path, original)
        loaded = read_map(path)
        _assert_same_map(loaded, original)
        assert np.array_equal(loaded.creation_times, original.creation_times)
        assert np.array_equal(loaded.active_trace, original.active_trace)
        assert invert(loaded) == invert(original)

    def test_canonical_relabeling(self, map_factory):
        original = map_factory("cabca")
        canonical = load_map(dump_map(original, canonical=True))
        assert isomorphic(canonical, original)

    def test_bare_map(self):
        text = json.dumps(
            {"version": 1, "vertex_count": 2, "edges": [[0, 1, False]], "rotations": [[0], [0]]}
        )
        map_ = load_map(text)
        assert map_.root_edge is None
        assert map_.segments is None


class TestMapJsonErrors:
    @pytest.fixture
    def document(self, map_factory):
        return json.loads(dump_map(map_factory("ca")))

    def test_not_json(self):
        with pytest.raises(FormatError) as info:
            load_map("{edges")
        assert info.value.field == "document"

    def test_unknown_version(self, document):
        document["version"] = 7
        with pytest.raises(FormatVersionError) as info:
            load_map(json.dumps(document))
        assert info.value.field == "version"

    def test_missing_field(self, document):
        del document["rotations"]
        with pytest.raises(FormatError) as info:
            load_map(json.dumps(document))
        assert info.value.field == "rotations"

    def test_bad_edge_entry(self, document):
        document["edges"][1] = [0, "two", False]
        with pytest.raises(FormatError) as info:
            load_map(json.dumps(document))
        assert info.value.field == "edges.1.1"

    def test_endpoint_out_of_range(self, document):
        document["edges"][0] = [0, 9, False]
        with pytest.raises(FormatError, match="out of range"):
            load_map(json.dumps(document))

    def test_unknown_edge_in_rotation(self, document):
        document["rotations"][0] = [0, 5]
        with pytest.raises(FormatError, match="unknown edge"):
            load_map(json.dumps(document))

    def test_root_edge(self, document):
        document["root_edge"] = 3
        with pytest.raises(FormatError) as info:
            load_map(json.dumps(document))
        assert info.value.field == "root_edge"
