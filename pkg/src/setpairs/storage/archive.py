"""
Parquet archive of search optima

Hive-style partitioning by search kind:
    <base>/kind=skew-weight/optima.parquet
Appending reads the partition, concatenates and keeps the last row per
parameter key, so rerunning a query replaces its previous result.
"""

import json
from pathlib import Path

import polars as pl

from ..search.reports import SearchKind, SearchReport

# Parameter key of one query
KEY_COLUMNS = ["kind", "n", "t", "d", "variant", "mode"]

SCHEMA: dict[str, pl.DataType | type[pl.DataType]] = {
    "kind": pl.Utf8,
    "n": pl.Int64,
    "t": pl.Int64,
    "d": pl.Int64,
    "variant": pl.Utf8,
    "mode": pl.Utf8,
    "optimum": pl.Utf8,
    "bound": pl.Utf8,
    "comparison": pl.Utf8,
    "exhaustive": pl.Boolean,
    "nodes_explored": pl.Int64,
    "max_size": pl.Int64,
    "equality_holds": pl.Boolean,
    "witness_size": pl.Int64,
    "witness": pl.Utf8,
}


def report_row(report: SearchReport) -> dict[str, object]:
    return {
        "kind": report.kind.value,
        "n": report.n,
        "t": report.t,
        "d": report.d,
        "variant": report.variant,
        "mode": report.mode,
        "optimum": report.optimum,
        "bound": report.bound,
        "comparison": report.comparison.value,
        "exhaustive": report.exhaustive,
        "nodes_explored": report.nodes_explored,
        "max_size": report.max_size,
        "equality_holds": report.equality_holds,
        "witness_size": len(report.witness),
        "witness": json.dumps(report.witness.to_json()),
    }


class ReportArchive:
    """
    Append-only (per key: last write wins) store of SearchReports
    """

    FILE_NAME = "optima.parquet"

    def __init__(self, base_path: str | Path = "data/optima"):
        self.base_path = Path(base_path)
        self.base_path.mkdir(parents=True, exist_ok=True)

    def _partition(self, kind: SearchKind | str) -> Path:
        value = kind.value if isinstance(kind, SearchKind) else kind
        return self.base_path / f"kind={value}" / self.FILE_NAME

    def append(self, reports: SearchReport | list[SearchReport]) -> list[Path]:
        """
        Write reports into their kind partitions

        Returns:
            Partition files touched
        """
        if isinstance(reports, SearchReport):
            reports = [reports]
        if not reports:
            return []
        df = pl.DataFrame([report_row(report) for report in reports], schema=SCHEMA)

        written = []
        for kind_key, kind_df in df.partition_by("kind", as_dict=True).items():
            kind = kind_key[0] if isinstance(kind_key, tuple) else kind_key
            file_path = self._partition(str(kind))
            file_path.parent.mkdir(parents=True, exist_ok=True)
            if file_path.exists():
                kind_df = pl.concat([pl.read_parquet(file_path), kind_df], how="vertical")
            kind_df = kind_df.unique(subset=KEY_COLUMNS, keep="last", maintain_order=True).sort(
                ["n", "t", "d", "variant", "mode"], nulls_last=True
            )
            kind_df.write_parquet(file_path, compression="snappy")
            written.append(file_path)
        return written

    def read(self, kind: SearchKind | str | None = None) -> pl.DataFrame:
        """Rows of one kind, or of every kind"""
        if kind is not None:
            path = self._partition(kind)
            if not path.exists():
                return pl.DataFrame(schema=SCHEMA)
            return pl.read_parquet(path)
        frames = [pl.read_parquet(path) for path in sorted(self.base_path.glob(f"kind=*/{self.FILE_NAME}"))]
        if not frames:
            return pl.DataFrame(schema=SCHEMA)
        return pl.concat(frames, how="vertical")

    def kinds(self) -> list[str]:
        return sorted(
            path.parent.name.split("=", 1)[1]
            for path in self.base_path.glob(f"kind=*/{self.FILE_NAME}")
        )
