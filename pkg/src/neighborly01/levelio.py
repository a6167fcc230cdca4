"""Binary level files: all class representatives with a fixed vertex count.

Layout (little endian): 16-byte header = magic "NB01", version (1),
d (1), n (1), flags (1, zero), count (8).  Then `count` records of n
vertex values each, one byte per value for d <= 8 and two bytes for
d <= 16.  Values ascend within a record; records ascend lexicographically
with no duplicates, so the payload doubles as a sorted dedup key space.
"""

from __future__ import annotations

import struct
from typing import Iterable, Sequence

from .cube import MAX_DIM, Polytope

MAGIC = b"NB01"
VERSION = 1
HEADER = struct.Struct("<4sBBBBQ")


class LevelFileError(ValueError):
    """Malformed or inconsistent level file."""


def bytes_per_value(d: int) -> int:
    return 1 if d <= 8 else 2


def record_to_bytes(vertices: Sequence[int], d: int) -> bytes:
    if d <= 8:
        return bytes(vertices)
    return b"".join(struct.pack("<H", v) for v in vertices)


def record_from_bytes(raw: bytes, d: int) -> tuple[int, ...]:
    if d <= 8:
        return tuple(raw)
    return tuple(v[0] for v in struct.iter_unpack("<H", raw))


def write_level_file(path, d: int, n: int, polytopes: Iterable[Polytope]) -> int:
    """Write sorted, duplicate-free representatives; returns the count."""
    records = []
    values = []
    for p in polytopes:
        if p.d != d:
            raise LevelFileError(f"polytope dimension {p.d} != file dimension {d}")
        if len(p.vertices) != n:
            raise LevelFileError(f"polytope has {len(p.vertices)} vertices, expected {n}")
        records.append(record_to_bytes(p.vertices, d))
        values.append(p.vertices)
    _check_sorted(values)
    write_level_records(path, d, n, records)
    return len(records)


def write_level_records(path, d: int, n: int, records: Sequence[bytes]) -> None:
    """Raw-record variant used by the pipeline (records pre-validated)."""
    if not 1 <= d <= MAX_DIM:
        raise LevelFileError(f"dimension {d} out of range")
    if not 1 <= n <= 255:
        raise LevelFileError(f"vertex count {n} out of range")
    with open(path, "wb") as fh:
        fh.write(HEADER.pack(MAGIC, VERSION, d, n, 0, len(records)))
        for rec in records:
            fh.write(rec)


def read_level_header(path) -> tuple[int, int, int]:
    """Return (d, n, count) without reading the payload."""
    with open(path, "rb") as fh:
        raw = fh.read(HEADER.size)
    if len(raw) < HEADER.size:
        raise LevelFileError(f"{path}: truncated header")
    magic, version, d, n, flags, count = HEADER.unpack(raw)
    if magic != MAGIC:
        raise LevelFileError(f"{path}: bad magic {magic!r}")
    if version != VERSION:
        raise LevelFileError(f"{path}: unsupported version {version}")
    if flags != 0:
        raise LevelFileError(f"{path}: unknown flags {flags:#x}")
    if not 1 <= d <= MAX_DIM or n < 1:
        raise LevelFileError(f"{path}: implausible header d={d} n={n}")
    return d, n, count


def read_level_records(path) -> tuple[int, int, list[bytes]]:
    """Read and validate the raw records; returns (d, n, records)."""
    d, n, count = read_level_header(path)
    rec_size = n * bytes_per_value(d)
    records: list[bytes] = []
    with open(path, "rb") as fh:
        fh.seek(HEADER.size)
        payload = fh.read()
    if len(payload) != count * rec_size:
        raise LevelFileError(
            f"{path}: payload is {len(payload)} bytes, expected {count * rec_size}"
        )
    limit = 1 << d
    decoded = []
    for i in range(count):
        raw = payload[i * rec_size : (i + 1) * rec_size]
        values = record_from_bytes(raw, d)
        prev = -1
        for v in values:
            if v >= limit:
                raise LevelFileError(f"{path}: record {i}: vertex {v} >= 2^{d}")
            if v <= prev:
                raise LevelFileError(f"{path}: record {i}: values not strictly ascending")
            prev = v
        records.append(raw)
        decoded.append(values)
    _check_sorted(decoded, path)
    return d, n, records


def read_level_file(path) -> tuple[int, int, list[Polytope]]:
    d, n, records = read_level_records(path)
    return d, n, [Polytope(d, record_from_bytes(r, d)) for r in records]


def _check_sorted(values: Sequence[tuple[int, ...]], path=None) -> None:
    where = f"{path}: " if path else ""
    for i in range(1, len(values)):
        if values[i] == values[i - 1]:
            raise LevelFileError(f"{where}duplicate record at index {i}")
        if values[i] < values[i - 1]:
            raise LevelFileError(f"{where}records out of order at index {i}")
