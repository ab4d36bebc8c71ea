"""Graph serialization: graph6 strings and a plain edge-list text format."""

from __future__ import annotations

from .graph import Graph, from_edge_list

_G6_MAX_SMALL = 62
_G6_MAX = 258047  # largest n encodable in the 18-bit header form


def _g6_header(n: int) -> bytes:
    if n <= _G6_MAX_SMALL:
        return bytes([n + 63])
    if n <= _G6_MAX:
        return bytes([126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    raise ValueError(f"graph6 supports at most {_G6_MAX} vertices here, got {n}")


def to_graph6(g: Graph) -> str:
    """Encode as graph6: upper-triangle bits in column-major order, 6 per byte."""
    n = g.n
    out = bytearray(_g6_header(n))
    acc = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (1 if g.adjacent(i, j) else 0)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def from_graph6(text: str) -> Graph:
    """Decode a graph6 string; malformed length or padding is an error."""
    data = text.strip().encode("ascii")
    if not data:
        raise ValueError("empty graph6 string")
    if data[0] == 126:
        if len(data) < 4:
            raise ValueError("truncated graph6 header")
        vals = [b - 63 for b in data[1:4]]
        if any(v < 0 or v > 63 for v in vals):
            raise ValueError("invalid graph6 header byte")
        n = (vals[0] << 12) | (vals[1] << 6) | vals[2]
        body = data[4:]
    else:
        n = data[0] - 63
        if n < 0 or n > _G6_MAX_SMALL:
            raise ValueError("invalid graph6 header byte")
        body = data[1:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits = []
    for b in body:
        v = b - 63
        if v < 0 or v > 63:
            raise ValueError("invalid graph6 body byte")
        bits.extend((v >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ValueError("nonzero padding bits in graph6 body")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Graph(n, edges)


def to_edge_text(g: Graph, comment: str | None = None) -> str:
    """Edge-list text: optional '#' comments, a 'n m' header, one edge per line."""
    lines = []
    if comment:
        for piece in comment.splitlines():
            lines.append(f"# {piece}")
    lines.append(f"{g.n} {g.num_edges}")
    for u, v in g.sorted_edges():
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def from_edge_text(text: str) -> Graph:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise ValueError("edge text has no content")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"expected 'n m' header, got {rows[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise ValueError(f"header claims {m} edges, found {len(rows) - 1}")
    edges = []
    for line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return from_edge_list(n, edges)


def read_graph(path: str, fmt: str) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    if fmt == "graph6":
        return from_graph6(text)
    if fmt == "edges":
        return from_edge_text(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def write_graph(g: Graph, path: str, fmt: str, comment: str | None = None) -> None:
    if fmt == "graph6":
        text = to_graph6(g) + "\n"
    elif fmt == "edges":
        text = to_edge_text(g, comment=comment)
    else:
        raise ValueError(f"unknown graph format {fmt!r}")
    with open(path, "w", encoding="ascii") as fh:
        fh.write(text)
