"""
Tests for the JSON-lines codec and the parquet archive of search optima
"""

import io
import json

import polars as pl
import pytest

from setpairs.constructions import all_full_dpartitions, full_power_set_system
from setpairs.core.error_types import ParseError
from setpairs.core.types import DPartitionSystem, SetPairSystem
from setpairs.search import SearchKind, max_dpartition_weight, max_skew_weight, max_t_system_size
from setpairs.storage import (
    ReportArchive,
    SystemReader,
    SystemWriter,
    parse_system,
    read_systems,
    write_systems,
)


# ----------------------------------------------------------------- JSON lines


def test_write_then_read_mixed_systems(tmp_path):
    path = tmp_path / "systems.jsonl"
    systems = [full_power_set_system(2), all_full_dpartitions([1, 1])]
    assert write_systems(path, systems) == 2
    assert read_systems(path) == systems


def test_reader_skips_blank_lines_and_keeps_line_numbers():
    source = io.StringIO('{"n": 1, "pairs": [{"A": [1], "B": []}]}\n\n{"n": 0}\n')
    items = list(SystemReader(source))
    assert [line for line, _ in items] == [1, 3]
    assert items[1][1] == SetPairSystem(n=0)


def test_reader_reports_the_failing_line():
    source = io.StringIO('{"n": 1}\n{"n": 1, "pairs": [\n')
    with pytest.raises(ParseError) as exc_info:
        list(SystemReader(source))
    assert exc_info.value.line_number == 2


def test_reader_rejects_a_missing_file(tmp_path):
    with pytest.raises(ParseError):
        read_systems(tmp_path / "absent.jsonl")


def test_parse_system_selects_the_system_type():
    members = {"n": 2, "members": [{"blocks": [[1], [2]]}]}
    parsed = parse_system(members)
    assert isinstance(parsed, DPartitionSystem)
    assert parsed.d == 2
    assert isinstance(parse_system({"n": 2, "pairs": [], "run": {"seed": 1}}), SetPairSystem)


@pytest.mark.parametrize(
    "data",
    [
        [1, 2],
        {"pairs": []},
        {"n": 1, "pairs": [{"A": [2], "B": []}]},
        {"n": 2, "members": [{"blocks": [[1], [1]]}]},
        {"n": 2, "members": []},
        {"n": -1},
    ],
)
def test_parse_system_rejects_malformed_objects(data):
    with pytest.raises(ParseError):
        parse_system(data, line_number=7)


def test_writer_adds_extra_fields():
    buffer = io.StringIO()
    with SystemWriter(buffer) as writer:
        writer.write(full_power_set_system(1), {"run": {"seed": 3}})
        writer.write_record({"note": "plain"})
    lines = [json.loads(line) for line in buffer.getvalue().splitlines()]
    assert lines[0]["run"] == {"seed": 3}
    assert lines[0]["pairs"] == [{"A": [1], "B": []}, {"A": [], "B": [1]}]
    assert lines[1] == {"note": "plain"}
    assert writer.count == 2


# ----------------------------------------------------------------- archive


def test_archive_partitions_by_kind(tmp_path):
    archive = ReportArchive(tmp_path / "optima")
    archive.append([max_skew_weight(1), max_t_system_size(2, 1)])
    assert archive.kinds() == [SearchKind.SKEW_WEIGHT.value, SearchKind.T_SYSTEM_SIZE.value]
    assert (tmp_path / "optima" / "kind=skew-weight" / "optima.parquet").exists()

    rows = archive.read(SearchKind.T_SYSTEM_SIZE)
    assert rows.height == 1
    assert rows["optimum"][0] == "2/1"
    assert rows["t"][0] == 1
    assert archive.read().height == 2


def test_archive_keeps_the_last_report_per_key(tmp_path):
    archive = ReportArchive(tmp_path)
    archive.append(max_skew_weight(1))
    archive.append(max_skew_weight(1))
    archive.append(max_skew_weight(1, restricted=True))
    rows = archive.read("skew-weight")
    assert rows.height == 2
    assert sorted(rows["mode"].to_list()) == ["restricted", "unrestricted"]


def test_archive_stores_conjecture_probes(tmp_path):
    archive = ReportArchive(tmp_path)
    report = max_dpartition_weight(1, 2, skew=False)
    archive.append(report)
    rows = archive.read(SearchKind.DPARTITION_WEIGHT)
    assert rows["variant"][0] == "strong"
    assert rows["comparison"][0] == report.comparison.value
    assert rows["max_size"][0] == report.max_size
    witness = json.loads(rows["witness"][0])
    assert DPartitionSystem.from_json(witness) == report.witness


def test_archive_reads_empty_partitions(tmp_path):
    archive = ReportArchive(tmp_path)
    assert archive.read("equality").height == 0
    assert archive.read().height == 0
    assert archive.append([]) == []
    assert isinstance(archive.read(), pl.DataFrame)
