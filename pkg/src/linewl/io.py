"""graph6 records, pair files and verdict reports.

graph6 follows McKay's layout: a size prefix N(n), then the upper triangle
of the adjacency matrix read column by column ((0,1), (0,2), (1,2), (0,3),
...), packed big-endian into 6-bit groups, each stored as ``value + 63``.
"""

from __future__ import annotations

import csv
import json
import os
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from .graph import Graph

__all__ = [
    "Graph6Error",
    "PairFileError",
    "PairFile",
    "CATEGORIES",
    "CSV_COLUMNS",
    "parse_graph6",
    "emit_graph6",
    "read_pair_file",
    "parse_pair_lines",
    "write_pair_file",
    "write_report",
]

MAX_NODES = 1 << 36
CATEGORIES = ("simple-regular", "strongly-regular", "cfi", "other")
CSV_COLUMNS = ("pair_id", "category", "k", "depth", "distinguished", "seconds")
_HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 record."""


class PairFileError(ValueError):
    """Malformed line in a pair file."""


def _as_bytes(text: bytes | str) -> bytes:
    if isinstance(text, str):
        try:
            return text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error(f"non-ASCII character at offset {exc.start}") from None
    return bytes(text)


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return ``(n, offset of first adjacency byte)``."""
    if not data:
        raise Graph6Error("empty graph6 record")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 36-bit size field")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated 18-bit size field")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 record (an optional ``>>graph6<<`` header and
    trailing newline are tolerated)."""
    data = _as_bytes(text).rstrip(b"\r\n")
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
        base = len(_HEADER)
    else:
        base = 0
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} out of range 63..126 at offset {base + i}")
    n, start = _decode_size(data)
    if n >= MAX_NODES:
        raise Graph6Error(f"node count {n} unsupported")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[start:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated record: need {nbytes} adjacency bytes, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6Error(f"trailing data at offset {base + start + nbytes}")
    adj: list[list[int]] = [[] for _ in range(n)]
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if (body[bit // 6] - 63) >> (5 - bit % 6) & 1:
                adj[i].append(j)
                adj[j].append(i)
            bit += 1
    return Graph(n, adj)


def _encode_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def emit_graph6(g: Graph) -> bytes:
    """Canonical graph6 record for ``g`` (shortest size prefix, zero padding,
    no newline)."""
    n = g.node_count
    if n >= MAX_NODES:
        raise Graph6Error(f"node count {n} unsupported")
    out = bytearray(_encode_size(n))
    adj = g.adjacency
    acc = 0
    width = 0
    for j in range(1, n):
        nbrs = adj[j]
        for i in range(j):
            acc = (acc << 1) | (i in nbrs)
            width += 1
            if width == 6:
                out.append(acc + 63)
                acc = width = 0
    if width:
        out.append((acc << (6 - width)) + 63)
    return bytes(out)


@dataclass
class PairFile:
    """Ordered graph pairs with optional category tags."""

    pairs: list[tuple[Graph, Graph, str | None]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


def parse_pair_lines(lines: Iterable[str], source: str = "<input>") -> PairFile:
    """Parse ``<g6> <g6> [tag]`` lines. Blank lines and ``#`` comments are skipped."""
    pairs = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) not in (2, 3):
            raise PairFileError(f"{source}:{lineno}: expected 2 graph6 tokens and an optional tag, got {len(tokens)} tokens")
        tag = tokens[2] if len(tokens) == 3 else None
        if tag is not None and tag not in CATEGORIES:
            raise PairFileError(f"{source}:{lineno}: unknown category tag {tag!r}")
        try:
            g1 = parse_graph6(tokens[0])
            g2 = parse_graph6(tokens[1])
        except Graph6Error as exc:
            raise PairFileError(f"{source}:{lineno}: {exc}") from None
        pairs.append((g1, g2, tag))
    return PairFile(pairs)


def read_pair_file(path: str | os.PathLike) -> PairFile:
    with open(path, encoding="utf-8") as fh:
        return parse_pair_lines(fh, source=os.fspath(path))


def write_pair_file(pairs: Iterable[tuple[Graph, Graph, str | None]], path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for g1, g2, tag in pairs:
            row = [emit_graph6(g1).decode(), emit_graph6(g2).decode()]
            if tag:
                row.append(tag)
            fh.write(" ".join(row) + "\n")


def _row(v: Any) -> dict[str, Any]:
    if isinstance(v, dict):
        rec = v
    else:
        rec = {c: getattr(v, c) for c in CSV_COLUMNS}
    return {c: rec[c] for c in CSV_COLUMNS}


def _fmt_distinguished(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def write_report(
    verdicts: Sequence[Any],
    format: str,
    path: str | os.PathLike,
    *,
    config: dict[str, Any] | None = None,
    summary: list[dict[str, Any]] | None = None,
    extra_fields: Sequence[str] = (),
) -> None:
    """Write verdict rows as CSV or JSON.

    CSV has the fixed header ``pair_id,category,k,depth,distinguished,seconds``.
    JSON is an object ``{"config": ..., "verdicts": [...], "summary": [...]}``
    where each verdict carries the CSV columns plus ``extra_fields``.
    """
    if format not in ("csv", "json"):
        raise ValueError(f"unknown report format {format!r}")
    if format == "csv":
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
            for v in verdicts:
                row = _row(v)
                row["distinguished"] = _fmt_distinguished(row["distinguished"])
                row["category"] = row["category"] or ""
                row["seconds"] = f"{row['seconds']:.6f}"
                writer.writerow([row[c] for c in CSV_COLUMNS])
        return
    records = []
    for v in verdicts:
        rec = _row(v)
        for name in extra_fields:
            rec[name] = v[name] if isinstance(v, dict) else getattr(v, name)
        records.append(rec)
    doc = {"config": config or {}, "verdicts": records, "summary": summary or []}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=False)
        fh.write("\n")
