"""
Storage - JSON-lines systems and the parquet archive of search optima
"""

from .archive import ReportArchive, report_row
from .jsonl import SystemReader, SystemWriter, parse_system, read_systems, write_systems

__all__ = [
    "SystemReader",
    "SystemWriter",
    "parse_system",
    "read_systems",
    "write_systems",
    "ReportArchive",
    "report_row",
]
