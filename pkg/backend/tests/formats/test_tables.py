"""
Unit tests for formats/samples_csv.py and formats/report_json.py.
"""

import json

import numpy as np
import pandas as pd
import pytest

from src.errors import FormatError, FormatVersionError
from src.formats import (
    SampleTable,
    dump_report,
    dump_samples,
    load_report,
    load_samples,
    load_suite_result,
    profiles_frame,
    read_report,
    read_samples,
    write_profiles,
    write_report,
    write_samples,
)
from src.models.busemann import BusemannProfile
from src.models.distances import Mode
from src.models.experiments import (
    Acceptance,
    CensoringStats,
    Estimate,
    ExperimentReport,
    SuiteResult,
    Verdict,
)

HEADER = "# bipolar-kmsw samples v1 mode=ldp which=positive_increment\n"


@pytest.fixture
def table():
    return SampleTable(
        Mode.LDP,
        {
            "positive_increment": np.array([-1, -3, -2]),
            "negative_increment": np.array([0, 2, -1]),
        },
    )


@pytest.fixture
def report():
    return ExperimentReport(
        name="kappa",
        mode="sdp",
        parameters={"samples": 10},
        master_seed=4,
        tolerances_version="1",
        estimates=[
            Estimate(
                name="kappa",
                value=0.01,
                se=0.02,
                acceptance=Acceptance(kind="zscore", expected=0.0, z=3.0),
            )
        ],
        censoring=CensoringStats(total=10, censored=1, max_window=4_000),
    )


class TestSampleTable:
    def test_layout(self):
        table = SampleTable(Mode.LDP, {"positive_increment": np.array([-1, -3])})
        assert dump_samples(table) == HEADER + "positive_increment\n-1\n-3\n"

    def test_file_round_trip(self, tmp_path, table):
        path = tmp_path / "samples.csv"
        write_samples(path, table)
        loaded = read_samples(path)
        assert loaded.mode is Mode.LDP
        assert loaded.which == "positive_increment,negative_increment"
        for name, values in table.columns.items():
            assert loaded.columns[name].tolist() == values.tolist()

    @pytest.mark.parametrize(
        "columns",
        [
            {},
            {"middle": np.array([1])},
            {"positive_increment": np.array([1]), "negative_increment": np.array([1, 2])},
        ],
    )
    def test_invalid_tables(self, columns):
        with pytest.raises(ValueError):
            SampleTable(Mode.SDP, columns)


class TestSampleErrors:
    @pytest.mark.parametrize(
        "text, field",
        [
            ("positive_increment\n-1\n", "header"),
            (HEADER.replace("ldp", "xdp") + "positive_increment\n-1\n", "mode"),
            (HEADER + "negative_increment\n-1\n", "which"),
            (HEADER + "positive_increment\nminus one\n", "values"),
        ],
    )
    def test_field_is_named(self, text, field):
        with pytest.raises(FormatError) as info:
            load_samples(text)
        assert info.value.field == field

    def test_unknown_version(self):
        with pytest.raises(FormatVersionError):
            load_samples(HEADER.replace("v1", "v3") + "positive_increment\n-1\n")


class TestProfilesCsv:
    def test_censored_replica_has_one_row(self, tmp_path):
        profile = BusemannProfile(Mode.LDP, 1, (2, 0, -1), window=500, probes=3)
        frame = profiles_frame([profile, None], 1)
        assert frame["replica"].tolist() == [0, 0, 0, 1]
        assert frame["k"].iloc[:3].tolist() == [-1, 0, 1]
        assert frame["X_k"].iloc[:3].tolist() == [2, 0, -1]
        assert frame["censored"].tolist() == [False, False, False, True]
        assert pd.isna(frame["X_k"].iloc[3])

        path = tmp_path / "profiles.csv"
        write_profiles(path, [profile, None], 1)
        lines = path.read_text().splitlines()
        assert lines[0] == "replica,k,X_k,window,censored"
        assert lines[-1] == "1,,,,True"


class TestReportJson:
    def test_file_round_trip(self, tmp_path, report):
        path = tmp_path / "report.json"
        write_report(path, report)
        loaded = read_report(path)
        assert loaded == report
        assert loaded.estimate("kappa").verdict == Verdict.PASS
        assert loaded.censoring.rate == pytest.approx(0.1)

    def test_suite_result(self):
        result = SuiteResult(suite="roundtrip", passed=False, checked=3, failures=["ab"])
        assert load_suite_result(dump_report(result)) == result

    def test_unknown_schema_version(self, report):
        document = json.loads(dump_report(report))
        document["schema_version"] = 2
        with pytest.raises(FormatVersionError) as info:
            load_report(json.dumps(document))
        assert info.value.field == "schema_version"

    def test_missing_field(self, report):
        document = json.loads(dump_report(report))
        del document["master_seed"]
        with pytest.raises(FormatError) as info:
            load_report(json.dumps(document))
        assert info.value.field == "master_seed"

    def test_not_json(self):
        with pytest.raises(FormatError) as info:
            load_report("[1, 2")
        assert info.value.field == "document"
