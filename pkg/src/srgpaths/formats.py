"""Text formats: graph6, Latin square grids, STS block lists, and reports."""

from __future__ import annotations

import csv
import io
import json
import re
from typing import Iterable, Mapping, Optional, Sequence

from .errors import MalformedGraph6, NotLatin, NotSts, Ragged
from .graph import MAX_VERTICES, Graph

GRAPH6_HEADER = ">>graph6<<"

# ---------------------------------------------------------------------------
# graph6


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))
    return "~~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (30, 24, 18, 12, 6, 0))


def write_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 line (no header, no trailing newline)."""
    out = [_encode_size(g.n)]
    value = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            value = (value << 1) | ((row >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(value + 63))
                value = nbits = 0
    if nbits:
        out.append(chr((value << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    text = line.rstrip("\n")
    start = len(GRAPH6_HEADER) if text.startswith(GRAPH6_HEADER) else 0
    for pos in range(start, len(text)):
        if not 63 <= ord(text[pos]) <= 126:
            raise MalformedGraph6(f"invalid graph6 character {text[pos]!r}", pos)
    if start >= len(text):
        raise MalformedGraph6("empty graph6 line", start)

    def sixes(pos, count):
        if pos + count > len(text):
            raise MalformedGraph6("truncated size field", len(text))
        value = 0
        for ch in text[pos:pos + count]:
            value = (value << 6) | (ord(ch) - 63)
        return value

    pos = start
    if text[pos] != "~":
        n, pos = ord(text[pos]) - 63, pos + 1
    elif pos + 1 < len(text) and text[pos + 1] == "~":
        n, pos = sixes(pos + 2, 6), pos + 8
    else:
        n, pos = sixes(pos + 1, 3), pos + 4
    if n > MAX_VERTICES:
        raise MalformedGraph6(f"{n} vertices exceeds the supported {MAX_VERTICES}", start)

    total_bits = n * (n - 1) // 2
    expected = (total_bits + 5) // 6
    if len(text) - pos != expected:
        raise MalformedGraph6(
            f"expected {expected} data bytes for n={n}, found {len(text) - pos}",
            min(len(text), pos + expected),
        )
    rows = [0] * n
    bit = 0
    i, j = 0, 1
    for offset in range(expected):
        chunk = ord(text[pos + offset]) - 63
        for shift in range(5, -1, -1):
            if bit >= total_bits:
                if (chunk >> shift) & 1:
                    raise MalformedGraph6("nonzero padding bit", pos + offset)
                continue
            if (chunk >> shift) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(rows))


def read_graph6_lines(text: str) -> list:
    """Parse every non-blank line of a graph6 file."""
    graphs = []
    for line in text.splitlines():
        if line.strip():
            graphs.append(parse_graph6(line.strip()))
    return graphs


# ---------------------------------------------------------------------------
# Latin squares


def parse_latin(text: str):
    from .families import LatinSquare

    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise NotLatin(f"line {lineno}: non-integer entry") from exc
    m = len(rows)
    if m == 0:
        raise Ragged("no rows")
    for r, row in enumerate(rows):
        if len(row) != m:
            raise Ragged(f"row {r} has {len(row)} entries, expected {m}")
    for r, row in enumerate(rows):
        seen = {}
        for c, s in enumerate(row):
            if not 0 <= s < m:
                raise NotLatin(f"symbol {s} at ({r},{c}) outside 0..{m - 1}")
            if s in seen:
                raise NotLatin(f"row {r}: symbol {s} repeated at columns {seen[s]} and {c}")
            seen[s] = c
    for c in range(m):
        seen = {}
        for r in range(m):
            s = rows[r][c]
            if s in seen:
                raise NotLatin(f"column {c}: symbol {s} repeated at rows {seen[s]} and {r}")
            seen[s] = r
    return LatinSquare.from_rows(rows)


def write_latin(sq) -> str:
    return "".join(" ".join(str(s) for s in row) + "\n" for row in sq.cells)


def parse_mols(text: str):
    """Two Latin squares separated by a blank line."""
    from .families import MolsPair

    chunks = [c for c in re.split(r"\n\s*\n", text.strip()) if c.strip()]
    if len(chunks) != 2:
        raise Ragged(f"expected two squares separated by a blank line, found {len(chunks)}")
    return MolsPair(parse_latin(chunks[0]), parse_latin(chunks[1]))


def write_mols(p) -> str:
    return write_latin(p.first) + "\n" + write_latin(p.second)


# ---------------------------------------------------------------------------
# Steiner triple systems

_BLOCK_LINE = re.compile(r"^(\d+) (\d+) (\d+)$")
_HEADER_LINE = re.compile(r"^(\d+)$")


def parse_sts(text: str):
    """Parse ``m`` on the first line, then one block per line as three points.

    The grammar is strict (single spaces, no trailing blanks) so that any
    single-character corruption of a valid file is rejected.
    """
    from .families import SteinerTripleSystem

    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    lines = [ln for ln in lines if not ln.startswith("#")]
    if not lines:
        raise NotSts("empty STS text")
    header = _HEADER_LINE.match(lines[0])
    if not header:
        raise NotSts(f"bad header line {lines[0]!r}")
    m = int(header.group(1))
    blocks = []
    for lineno, line in enumerate(lines[1:], start=2):
        match = _BLOCK_LINE.match(line)
        if not match:
            raise NotSts(f"line {lineno}: expected three points, got {line!r}")
        block = tuple(int(x) for x in match.groups())
        if any(not 1 <= p <= m for p in block) or len(set(block)) != 3:
            raise NotSts(f"line {lineno}: block {block} invalid for m={m}")
        blocks.append(block)
    return SteinerTripleSystem.from_blocks(m, blocks)


def write_sts(s) -> str:
    return f"{s.m}\n" + "".join(" ".join(str(p) for p in b) + "\n" for b in s.blocks)


# ---------------------------------------------------------------------------
# reports

REPORT_COLUMNS = (
    "graph", "n", "k", "lambda", "mu", "primitive", "pattern", "found", "witness", "seconds",
)


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.3f}"
    if isinstance(value, (list, tuple)):
        return " | ".join(str(v) for v in value)
    return str(value)


def emit_report(
    rows: Iterable[Mapping],
    fmt: str = "csv",
    columns: Optional[Sequence[str]] = None,
) -> str:
    """Render rows in input order, CSV with header or JSON lines."""
    columns = tuple(columns or REPORT_COLUMNS)
    rows = list(rows)
    if fmt == "jsonl":
        return "".join(
            json.dumps({c: row.get(c) for c in columns}, default=list) + "\n" for row in rows
        )
    if fmt != "csv":
        raise ValueError(f"unknown report format {fmt!r}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(c)) for c in columns])
    return buf.getvalue()
