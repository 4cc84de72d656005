"""graph6 and plain edge-list reading and writing."""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphError

GRAPH6_HEADER = ">>graph6<<"


class GraphFormatError(ValueError):
    """Malformed graph input. ``offset`` is a byte offset (graph6) or 1-based line number."""

    def __init__(self, message: str, offset: int | None = None) -> None:
        super().__init__(message if offset is None else f"{message} (at {offset})")
        self.offset = offset


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)`` for the vertex-count prefix of ``data``."""
    if not data:
        raise GraphFormatError("empty graph6 input", 0)
    for pos, byte in enumerate(data[:8]):
        if not 63 <= byte <= 126:
            raise GraphFormatError(f"byte {byte!r} outside graph6 range 63..126", pos)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("truncated 8-byte graph6 size header", len(data))
        n = 0
        for byte in data[2:8]:
            n = n << 6 | (byte - 63)
        if n < 258048:
            raise GraphFormatError(f"8-byte size header used for small order {n}", 2)
        return n, 8
    if len(data) < 4:
        raise GraphFormatError("truncated 4-byte graph6 size header", len(data))
    n = 0
    for byte in data[1:4]:
        n = n << 6 | (byte - 63)
    if n < 63:
        raise GraphFormatError(f"4-byte size header used for small order {n}", 1)
    return n, 4


def parse_graph6(text: str | bytes, name: str = "") -> Graph:
    """Decode one graph6 string (optional ``>>graph6<<`` header, trailing newline ok)."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(GRAPH6_HEADER.encode()):
        data = data[len(GRAPH6_HEADER):]
    n, start = _decode_size(data)
    body = data[start:]
    n_bits = n * (n - 1) // 2
    expected = (n_bits + 5) // 6
    if len(body) != expected:
        raise GraphFormatError(
            f"expected {expected} body bytes for {n} vertices, got {len(body)}", start + min(len(body), expected))
    for pos, byte in enumerate(body):
        if not 63 <= byte <= 126:
            raise GraphFormatError(f"byte {byte!r} outside graph6 range 63..126", start + pos)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    pad = expected * 6 - n_bits
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise GraphFormatError("non-zero padding bits", start + expected - 1)
    return Graph.from_edges(edges, n_vertices=n, name=name)


def emit_graph6(g: Graph) -> str:
    n = g.n_vertices
    if n <= 62:
        out = [n + 63]
    elif n <= 258047:
        out = [126] + [(n >> s & 63) + 63 for s in (12, 6, 0)]
    else:
        out = [126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    present = set(g.edges)
    bits = [1 if (i, j) in present else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(val + 63)
    return bytes(out).decode("ascii")


def parse_edge_list(text: str, name: str = "") -> Graph:
    """Parse ``u v`` lines (0-based labels, ``#`` comments, blank lines ignored)."""
    pairs: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"expected two vertex labels, got {len(tokens)} tokens", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex label in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"negative vertex label in {line!r}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key} (first on line {seen[key]})", lineno)
        seen[key] = lineno
        pairs.append(key)
    if not pairs:
        raise GraphFormatError("edge list contains no edges", None)
    try:
        return Graph.from_edges(pairs, name=name)
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from exc


def emit_edge_list(g: Graph, comment: str | None = None) -> str:
    lines = [f"# {line}" for line in comment.splitlines()] if comment else []
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    """Load a graph file; format from ``fmt`` (``g6``/``edges``) or the file extension."""
    path = Path(path)
    if fmt is None:
        fmt = "g6" if path.suffix.lower() in (".g6", ".graph6") else "edges"
    if fmt not in ("g6", "edges"):
        raise GraphFormatError(f"unknown format {fmt!r}")
    text = path.read_text(encoding="ascii", errors="replace")
    if fmt == "g6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphFormatError(f"expected exactly one graph6 line, found {len(lines)}")
        return parse_graph6(lines[0], name=path.stem)
    return parse_edge_list(text, name=path.stem)
