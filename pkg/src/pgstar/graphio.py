"""Text formats for graphs: commented edge lists and graph6.

Edge list: ``#`` comment lines and blank lines are ignored; the first
data line is ``n m`` and is followed by exactly m lines ``u v`` with
1-based labels.  graph6 is the standard 6-bit encoding, restricted here
to the single-byte size field (n <= 62).
"""

from __future__ import annotations

from pathlib import Path

from .graphs import Graph

GRAPH6_MAX_N = 62
GRAPH6_HEADER = ">>graph6<<"


class ParseError(ValueError):
    """Malformed graph input, annotated with the offending line."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


def _data_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield number, stripped


def parse_edge_list(text: str) -> Graph:
    lines = _data_lines(text)
    try:
        header_no, header = next(lines)
    except StopIteration:
        raise ParseError("missing 'n m' header") from None
    fields = header.split()
    if len(fields) != 2:
        raise ParseError(f"expected header 'n m', got {header!r}", header_no)
    try:
        n, m = int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError(f"expected header 'n m', got {header!r}", header_no) from None
    if n < 0 or m < 0:
        raise ParseError("vertex and edge counts must be nonnegative", header_no)

    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    last_no = header_no
    for number, line in lines:
        last_no = number
        if len(edges) == m:
            raise ParseError(f"unexpected extra line after {m} edges", number)
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected edge 'u v', got {line!r}", number)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"expected edge 'u v', got {line!r}", number) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"edge ({u},{v}) has a label outside 1..{n}", number)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", number)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge ({u},{v})", number)
        seen.add(key)
        edges.append((u, v))
    if len(edges) != m:
        raise ParseError(f"expected {m} edge lines, found {len(edges)}", last_no)
    return Graph(n, edges)


def serialize_edge_list(g: Graph) -> str:
    """Inverse of parse_edge_list up to edge order."""
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> Graph:
    data = text.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise ParseError("empty graph6 input", 1)
    if "\n" in data:
        raise ParseError("graph6 input must be a single line", 2)
    first = ord(data[0])
    if first == 126:
        raise ParseError(
            f"multi-byte graph6 size fields are not supported (n > {GRAPH6_MAX_N})", 1
        )
    if not 63 <= first <= 125:
        raise ParseError(f"invalid graph6 size byte {data[0]!r}", 1)
    n = first - 63
    body = data[1:]
    needed_bits = n * (n - 1) // 2
    needed_bytes = (needed_bits + 5) // 6
    if len(body) != needed_bytes:
        raise ParseError(
            f"graph6 body for n = {n} needs {needed_bytes} bytes, got {len(body)}", 1
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise ParseError(f"invalid graph6 byte {ch!r}", 1)
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    edges = []
    idx = 0
    # upper triangle, column by column
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u + 1, v + 1))
            idx += 1
    return Graph(n, edges)


def load_graph(path: str | Path, fmt: str = "auto") -> Graph:
    """Read a graph file; ``auto`` picks graph6 for .g6/.graph6 suffixes."""
    path = Path(path)
    text = path.read_text()
    if fmt == "auto":
        fmt = "graph6" if path.suffix in (".g6", ".graph6") else "edge-list"
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edge-list":
        return parse_edge_list(text)
    raise ValueError(f"unknown format {fmt!r}")
