"""
JSON-lines codec for set-pair and d-partition systems

One system per line, 1-based element labels:
    {"n": 3, "pairs": [{"A": [1, 2], "B": [3]}, ...]}
    {"n": 3, "d": 3, "members": [{"blocks": [[1], [2], [3]]}, ...]}
Unknown keys (for example an embedded "run" record) are ignored.
"""

import json
import sys
from collections.abc import Iterator
from pathlib import Path
from types import TracebackType
from typing import IO, Any

import pydantic

from ..core.error_types import ParseError
from ..core.types import DPartitionSystem, SetPairSystem

System = SetPairSystem | DPartitionSystem


def parse_system(data: Any, line_number: int | None = None) -> System:
    """
    Decode one JSON object into the matching system type

    Raises:
        ParseError: If the object is not a well-formed system
    """
    if not isinstance(data, dict):
        raise ParseError(f"Expected a JSON object, got {type(data).__name__}", line_number)
    if "n" not in data:
        raise ParseError("Missing ground size 'n'", line_number)
    try:
        if "members" in data:
            return DPartitionSystem.from_json(data)
        return SetPairSystem.from_json(data)
    except (KeyError, TypeError, ValueError, pydantic.ValidationError) as exc:
        raise ParseError(f"Malformed system: {exc}", line_number) from exc


class SystemReader:
    """
    Stream systems from a JSON-lines file ("-" = standard input)

    Blank lines are skipped; line numbers in errors are 1-based.
    """

    def __init__(self, source: str | Path | IO[str]):
        self.source = source

    def _lines(self) -> Iterator[str]:
        if isinstance(self.source, (str, Path)):
            if str(self.source) == "-":
                yield from sys.stdin
                return
            path = Path(self.source)
            if not path.exists():
                raise ParseError(f"Input file not found: {path}")
            with path.open(encoding="utf-8") as handle:
                yield from handle
        else:
            yield from self.source

    def __iter__(self) -> Iterator[tuple[int, System]]:
        for line_number, line in enumerate(self._lines(), start=1):
            if not line.strip():
                continue
            try:
                data = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"Invalid JSON: {exc.msg}", line_number) from exc
            yield line_number, parse_system(data, line_number)


def read_systems(source: str | Path | IO[str]) -> list[System]:
    return [system for _, system in SystemReader(source)]


class SystemWriter:
    """
    Write systems (or any JSON records) one per line

    Usable as a context manager; "-" or None writes to standard output.
    """

    def __init__(self, target: str | Path | IO[str] | None = None):
        self._owned = False
        if target is None or str(target) == "-":
            self._handle: IO[str] = sys.stdout
        elif isinstance(target, (str, Path)):
            path = Path(target)
            path.parent.mkdir(parents=True, exist_ok=True)
            self._handle = path.open("w", encoding="utf-8")
            self._owned = True
        else:
            self._handle = target
        self.count = 0

    def write_record(self, record: dict[str, Any]) -> None:
        self._handle.write(json.dumps(record, ensure_ascii=False) + "\n")
        self.count += 1

    def write(self, system: System, extra: dict[str, Any] | None = None) -> None:
        record = system.to_json()
        if extra:
            record.update(extra)
        self.write_record(record)

    def close(self) -> None:
        if self._owned:
            self._handle.close()
        else:
            self._handle.flush()

    def __enter__(self) -> "SystemWriter":
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc: BaseException | None,
        traceback: TracebackType | None,
    ) -> None:
        self.close()


def write_systems(target: str | Path | IO[str], systems: list[System]) -> int:
    with SystemWriter(target) as writer:
        for system in systems:
            writer.write(system)
        return writer.count
