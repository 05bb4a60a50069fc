"""
Unit tests for formats/walk_text.py.
"""

import pytest

from src.errors import FormatError, FormatVersionError
from src.formats import dump_walk, load_walk, read_walk, write_walk


class TestWalkText:
    def test_layout(self, walk_factory):
        text = dump_walk(walk_factory("abca", start=(2, -1)))
        assert text == "start 2 -1\nabca\n"

    def test_plain_layout(self):
        walk = load_walk("start 0 0\nabc\n")
        assert walk.start == (0, 0)
        assert walk.tags() == "abc"

    def test_file_round_trip(self, tmp_path, sample_walk):
        path = tmp_path / "walk.txt"
        write_walk(path, sample_walk)
        assert read_walk(path) == sample_walk

    @pytest.mark.parametrize("text", ["start 0 0\n", "start 0 0\n\n", "start 0 0"])
    def test_empty_walk(self, text):
        assert load_walk(text).length == 0

    def test_version_line(self):
        walk = load_walk("# bipolar-kmsw walk v1\nstart 1 3\nCAB\n")
        assert walk.start == (1, 3)
        assert walk.tags() == "cab"


class TestWalkTextErrors:
    @pytest.mark.parametrize(
        "text, field",
        [
            ("", "start"),
            ("abc\n", "start"),
            ("# a walk\nstart 0 0\nab\n", "header"),
            ("start 0\nab\n", "start"),
            ("start x 0\nab\n", "start"),
            ("start 0 0\nabx\n", "steps"),
            ("start 0 0\nab\nab\n", "steps"),
        ],
    )
    def test_field_is_named(self, text, field):
        with pytest.raises(FormatError) as info:
            load_walk(text)
        assert info.value.field == field

    def test_unknown_version(self):
        with pytest.raises(FormatVersionError) as info:
            load_walk("# bipolar-kmsw walk v2\nstart 0 0\nab\n")
        assert info.value.field == "version"
