"""Serialization: table exports, the verification report, and a table cache.

Cache format (bit-exact so independent implementations interoperate):

    magic   4 bytes  b"FWGT"
    version u16 LE   currently 1
    variant u8       0=wythoff, 1=f-wythoff, 2=fr-wythoff, 3=fe-wythoff
    conv    u8       0=normal, 1=misere
    a_max   u32 LE
    b_max   u32 LE
    payload u32 LE per canonical cell, rows a = 0..a_max ascending and
            within each row b = a..b_max ascending
    crc32   u32 LE   over header + payload

CSV and JSON exports render the full symmetric rectangle: row ``a`` holds
``G(canonicalize(a, b))`` for every column ``b = 0..b_max``.  The source
table prints rows top-down in descending order; exports list them
ascending, as noted in the CSV header comment.
"""

from __future__ import annotations

import json
import struct
import zlib
from enum import Enum
from pathlib import Path
from typing import Iterable, Optional, Union

import numpy as np

from .games import Convention, Position, Variant
from .grundy import GrundyTable, row_values
from .report import ReportItem

FORMAT_VERSION = 1
_MAGIC = b"FWGT"
_HEADER = struct.Struct("<4sHBBII")
_VARIANT_TAGS = tuple(Variant)
_CONVENTION_TAGS = tuple(Convention)


class VersionMismatchError(ValueError):
    """Raised when a cached table declares an unsupported format version."""


class CorruptArtifactError(ValueError):
    """Raised when a cached table fails structural or checksum validation."""


def _jsonify(obj):
    if isinstance(obj, Position):
        return {"small": obj.small, "large": obj.large}
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, dict):
        return {key: _jsonify(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonify(value) for value in obj]
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    return obj


def export_table(t: GrundyTable, format: str = "csv") -> bytes:
    """Render a table as CSV or JSON bytes (rows ascending in ``a``)."""
    if format == "csv":
        lines = [
            f"# sprague-grundy values; variant={t.variant.value} "
            f"convention={t.convention.value} a_max={t.a_max} b_max={t.b_max}; "
            f"row a=0..{t.a_max} ascending, column b=0..{t.b_max}"
        ]
        for a in range(t.a_max + 1):
            lines.append(",".join(str(int(v)) for v in row_values(t, a)))
        return ("\n".join(lines) + "\n").encode()
    if format == "json":
        doc = {
            "variant": t.variant.value,
            "convention": t.convention.value,
            "a_max": t.a_max,
            "b_max": t.b_max,
            "format_version": FORMAT_VERSION,
            "values": [row_values(t, a).tolist() for a in range(t.a_max + 1)],
        }
        return (json.dumps(doc, separators=(",", ":")) + "\n").encode()
    raise ValueError(f"unknown export format {format!r}")


def table_from_json(data: Union[bytes, str]) -> GrundyTable:
    """Rebuild a table from its JSON export (round-trip identity)."""
    doc = json.loads(data)
    if doc.get("format_version") != FORMAT_VERSION:
        raise VersionMismatchError(
            f"unsupported format_version {doc.get('format_version')!r}"
        )
    variant = Variant(doc["variant"])
    convention = Convention(doc["convention"])
    a_max, b_max = int(doc["a_max"]), int(doc["b_max"])
    rows = doc["values"]
    if len(rows) != a_max + 1 or any(len(row) != b_max + 1 for row in rows):
        raise CorruptArtifactError("values grid does not match declared bounds")
    values = np.full((a_max + 1, b_max + 1), -1, dtype=np.int32)
    for a, row in enumerate(rows):
        values[a, a:] = row[a:]
    values.setflags(write=False)
    return GrundyTable(variant, convention, a_max, b_max, values)


def _payload(t: GrundyTable) -> bytes:
    chunks = [t.values[a, a:].astype("<u4").tobytes() for a in range(t.a_max + 1)]
    return b"".join(chunks)


def cache_table(t: GrundyTable, path: Union[str, Path]) -> None:
    """Write the binary cache artifact for ``t`` to ``path``."""
    header = _HEADER.pack(
        _MAGIC,
        FORMAT_VERSION,
        _VARIANT_TAGS.index(t.variant),
        _CONVENTION_TAGS.index(t.convention),
        t.a_max,
        t.b_max,
    )
    body = header + _payload(t)
    checksum = struct.pack("<I", zlib.crc32(body) & 0xFFFFFFFF)
    Path(path).write_bytes(body + checksum)


def load_table(path: Union[str, Path]) -> GrundyTable:
    """Load a binary cache artifact, refusing anything malformed."""
    data = Path(path).read_bytes()
    if len(data) < _HEADER.size + 4:
        raise CorruptArtifactError("artifact too short for a header")
    magic, version, vtag, ctag, a_max, b_max = _HEADER.unpack_from(data)
    if magic != _MAGIC:
        raise CorruptArtifactError(f"bad magic {magic!r}")
    if version != FORMAT_VERSION:
        raise VersionMismatchError(f"unsupported cache version {version}")
    if vtag >= len(_VARIANT_TAGS) or ctag >= len(_CONVENTION_TAGS):
        raise CorruptArtifactError(f"unknown variant/convention tags ({vtag}, {ctag})")
    if a_max > b_max:
        raise CorruptArtifactError(f"inconsistent bounds ({a_max}, {b_max})")
    cells = (a_max + 1) * (b_max + 1) - a_max * (a_max + 1) // 2
    expected = _HEADER.size + 4 * cells + 4
    if len(data) != expected:
        raise CorruptArtifactError(
            f"artifact length {len(data)} does not match expected {expected}"
        )
    body, (checksum,) = data[:-4], struct.unpack("<I", data[-4:])
    if zlib.crc32(body) & 0xFFFFFFFF != checksum:
        raise CorruptArtifactError("checksum mismatch")
    flat = np.frombuffer(data, dtype="<u4", offset=_HEADER.size, count=cells)
    values = np.full((a_max + 1, b_max + 1), -1, dtype=np.int32)
    pos = 0
    for a in range(a_max + 1):
        width = b_max - a + 1
        values[a, a:] = flat[pos : pos + width].astype(np.int32)
        pos += width
    values.setflags(write=False)
    return GrundyTable(
        _VARIANT_TAGS[vtag], _CONVENTION_TAGS[ctag], int(a_max), int(b_max), values
    )


def write_report(
    items: Iterable[ReportItem],
    variant: Optional[Variant] = None,
    convention: Optional[Convention] = None,
    bounds: Optional[tuple[int, int]] = None,
    timestamps: bool = False,
) -> bytes:
    """Serialize report items as JSON with a stable key order.

    Reports carry no timestamps unless ``timestamps`` is set, so identical
    inputs produce byte-identical reports.
    """
    checks = []
    for item in items:
        entry: dict = {"name": item.name, "status": item.status.value}
        if item.counterexample is not None:
            entry["counterexample"] = _jsonify(item.counterexample)
        entry["parameters"] = _jsonify(item.parameters)
        checks.append(entry)
    doc = {
        "variant": variant.value if variant else None,
        "convention": convention.value if convention else None,
        "bounds": {"a_max": bounds[0], "b_max": bounds[1]} if bounds else None,
        "checks": checks,
    }
    if timestamps:
        import datetime

        doc["generated_at"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
    return (json.dumps(doc, indent=2) + "\n").encode()
