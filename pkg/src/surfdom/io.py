"""Edge-list and graph6 readers/writers."""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphError

FORMATS = ("edge-list", "graph6")


class ParseError(GraphError):
    """Malformed graph text. ``position`` is a 1-based line (edge-list) or 0-based byte (graph6)."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        super().__init__(message)


# -- edge list --------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"line {lineno}: expected integers, got {raw!r}", lineno) from None
        if n is None:
            if len(nums) != 1 or nums[0] < 0:
                raise ParseError(f"line {lineno}: first line must be the vertex count", lineno)
            n = nums[0]
            continue
        if len(nums) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw!r}", lineno)
        u, v = nums
        if u == v:
            raise ParseError(f"line {lineno}: loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: vertex out of range 0..{n - 1}", lineno)
        edges.append((u, v))
    if n is None:
        raise ParseError("missing vertex count", 1)
    if len({(min(e), max(e)) for e in edges}) != len(edges):
        raise ParseError("duplicate edge")
    return Graph(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edge_list]
    return "\n".join(lines) + "\n"


# -- graph6 -----------------------------------------------------------------

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    raise GraphError(f"graph6 cannot encode n={n}")


def serialize_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + int("".join(map(str, bits[k : k + 6])), 2) for k in range(0, len(bits), 6)
    )
    return (_encode_n(g.n) + body).decode("ascii")


def parse_graph6(text: str) -> Graph:
    data = text.strip()
    offset = 0
    if data.startswith(_HEADER):
        data = data[len(_HEADER) :]
        offset = len(_HEADER)
    if "\n" in data:
        raise ParseError("graph6 input holds more than one graph")
    try:
        raw = data.encode("ascii")
    except UnicodeEncodeError:
        raise ParseError("graph6 must be ASCII") from None
    if not raw:
        raise ParseError("empty graph6 string", offset)
    for pos, b in enumerate(raw):
        if not 63 <= b <= 126:
            raise ParseError(f"byte {offset + pos}: value {b} outside graph6 range 63..126", offset + pos)
    if raw[0] == 126:
        if len(raw) >= 2 and raw[1] == 126:
            raise ParseError(f"byte {offset + 1}: 8-byte size form not supported", offset + 1)
        if len(raw) < 4:
            raise ParseError(f"byte {offset}: truncated size field", offset)
        n = ((raw[1] - 63) << 12) | ((raw[2] - 63) << 6) | (raw[3] - 63)
        body = raw[4:]
        body_off = offset + 4
    else:
        n = raw[0] - 63
        body = raw[1:]
        body_off = offset + 1
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ParseError(
            f"byte {body_off}: expected {need} adjacency bytes for n={n}, got {len(body)}", body_off
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


# -- dispatch ---------------------------------------------------------------


def parse_graph(text: str, fmt: str = "edge-list") -> Graph:
    if fmt == "edge-list":
        return parse_edge_list(text)
    if fmt == "graph6":
        return parse_graph6(text)
    raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")


def serialize_graph(g: Graph, fmt: str = "edge-list") -> str:
    if fmt == "edge-list":
        return serialize_edge_list(g)
    if fmt == "graph6":
        return serialize_graph6(g) + "\n"
    raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")


def guess_format(text: str) -> str:
    first = text.lstrip()
    if first.startswith(_HEADER):
        return "graph6"
    head = first.split("\n", 1)[0].strip()
    if head and not head.split("#")[0].strip().replace(" ", "").isdigit():
        return "graph6"
    return "edge-list"


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    text = Path(path).read_text()
    return parse_graph(text, fmt or guess_format(text))


def write_graph(g: Graph, path: str | Path, fmt: str = "edge-list") -> None:
    Path(path).write_text(serialize_graph(g, fmt))
