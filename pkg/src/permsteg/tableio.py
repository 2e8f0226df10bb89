"""Delimited text files <-> :class:`~permsteg.listmodel.CoverList`.

Reading follows RFC 4180: double-quoted fields may hold the delimiter, CR,
LF and doubled quotes, and records end with LF or CRLF. Writing produces a
canonical form with LF line ends and a trailing newline, quoting a cell
only when it contains the delimiter, a quote, CR or LF. Canonical files
round-trip byte for byte.

Cell bytes are decoded as UTF-8 with ``surrogateescape`` so that arbitrary
bytes come back out unchanged.
"""
from __future__ import annotations

from pathlib import Path
from typing import Union

from .errors import RaggedRows, TableFormatError, UnterminatedQuote
from .listmodel import CoverList

__all__ = ["DELIMITERS", "load", "parse_records", "read_table", "save", "write_table"]

DELIMITERS = {"comma": ",", "tab": "\t"}

_QUOTE = 0x22
_CR = 0x0D
_LF = 0x0A


def _delimiter_byte(delimiter: str) -> int:
    d = DELIMITERS.get(delimiter, delimiter)
    raw = d.encode("ascii") if isinstance(d, str) else bytes(d)
    if len(raw) != 1 or raw[0] in (_QUOTE, _CR, _LF):
        raise ValueError(f"unsupported delimiter {delimiter!r}")
    return raw[0]


def _decode(b: bytes) -> str:
    return b.decode("utf-8", "surrogateescape")


def parse_records(data: bytes, delimiter: str = ",") -> list[list[str]]:
    """Split ``data`` into records of cells without checking rectangularity."""
    delim = _delimiter_byte(delimiter)
    size = len(data)
    records = []
    pos = 0
    while pos < size:
        record = []
        while True:
            if pos < size and data[pos] == _QUOTE:
                start = pos
                pos += 1
                buf = bytearray()
                while True:
                    q = data.find(b'"', pos)
                    if q < 0:
                        raise UnterminatedQuote(start)
                    buf += data[pos:q]
                    if q + 1 < size and data[q + 1] == _QUOTE:
                        buf.append(_QUOTE)
                        pos = q + 2
                    else:
                        pos = q + 1
                        break
                cell = bytes(buf)
                if pos < size and data[pos] != delim and data[pos] != _LF and not (
                    data[pos] == _CR and pos + 1 < size and data[pos + 1] == _LF
                ):
                    raise TableFormatError("unexpected data after closing quote", pos)
            else:
                start = pos
                while pos < size:
                    c = data[pos]
                    if c == delim or c == _LF or (c == _CR and pos + 1 < size and data[pos + 1] == _LF):
                        break
                    if c == _QUOTE:
                        raise TableFormatError("quote inside unquoted field", pos)
                    pos += 1
                cell = data[start:pos]
            record.append(_decode(cell))
            if pos < size and data[pos] == delim:
                pos += 1
                continue
            # end of record: LF, CRLF or end of data
            if pos < size:
                pos += 2 if data[pos] == _CR else 1
            break
        records.append(record)
    return records


def read_table(data: bytes, delimiter: str = ",", has_header: bool = True) -> CoverList:
    records = parse_records(data, delimiter)
    if not records:
        raise TableFormatError("table is empty", 0)
    width = len(records[0])
    for i, rec in enumerate(records):
        if len(rec) != width:
            raise RaggedRows(i, width, len(rec))
    if has_header:
        return CoverList(tuple(map(tuple, records[1:])), tuple(records[0]))
    return CoverList(tuple(map(tuple, records)))


def _quote(cell: str, delim: int) -> bytes:
    raw = cell.encode("utf-8", "surrogateescape")
    if delim in raw or _QUOTE in raw or _CR in raw or _LF in raw:
        return b'"' + raw.replace(b'"', b'""') + b'"'
    return raw


def write_table(L: CoverList, delimiter: str = ",", has_header: bool = True) -> bytes:
    delim = _delimiter_byte(delimiter)
    sep = bytes([delim])
    records = list(L.rows)
    if has_header and L.header is not None:
        records.insert(0, L.header)
    return b"".join(sep.join(_quote(c, delim) for c in rec) + b"\n" for rec in records)


def load(path: Union[str, Path], delimiter: str = ",", has_header: bool = True) -> CoverList:
    return read_table(Path(path).read_bytes(), delimiter, has_header)


def save(L: CoverList, path: Union[str, Path], delimiter: str = ",", has_header: bool = True) -> None:
    Path(path).write_bytes(write_table(L, delimiter, has_header))
