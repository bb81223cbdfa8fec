"""graph6 encoding plus a plain edge-list text format.

graph6 packs the upper triangle of the adjacency matrix in column-major
order x(0,1), x(0,2), x(1,2), x(0,3), ... into 6-bit groups offset by 63,
after a length header: a single char 63+n for n <= 62, '~' plus three
6-bit chars for larger n, '~~' plus six for n beyond 258047.

The edge-list format is for hand-authored inputs: first line "n m", then
m lines "u v" with 0-based endpoints.
"""
from __future__ import annotations

from .graphs import Graph


class Graph6Error(ValueError):
    """Malformed graph6 input; `offset` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def encode(g: Graph) -> str:
    n = g.n
    out = []
    if n <= 62:
        out.append(chr(63 + n))
    elif n <= 258047:
        out.append("~")
        out.extend(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    elif n <= 68719476735:
        out.append("~~")
        out.extend(chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0))
    else:
        raise ValueError(f"n={n} exceeds the graph6 length range")
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(63 + acc))
    return "".join(out)


def decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    data = [ord(c) - 63 for c in s]
    for pos, val in enumerate(data):
        if not 0 <= val <= 63:
            raise Graph6Error(f"character {s[pos]!r} outside graph6 range", pos)
    if data[0] < 63:
        n = data[0]
        body = 1
    elif len(data) >= 2 and data[1] < 63:
        if len(data) < 4:
            raise Graph6Error("truncated extended length header", len(s))
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = 4
    else:
        if len(data) < 8:
            raise Graph6Error("truncated long length header", len(s))
        n = 0
        for val in data[2:8]:
            n = (n << 6) | val
        body = 8
    need_bits = n * (n - 1) // 2
    need_chars = (need_bits + 5) // 6
    if len(data) - body != need_chars:
        raise Graph6Error(
            f"expected {need_chars} body chars for n={n}, got {len(data) - body}",
            min(body + need_chars, len(s)),
        )
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            val = data[body + pos // 6]
            if (val >> (5 - pos % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    # trailing pad bits must be zero
    if need_bits % 6:
        tail = data[body + need_chars - 1]
        if tail & ((1 << (6 - need_bits % 6)) - 1):
            raise Graph6Error("nonzero padding bits", body + need_chars - 1)
    return Graph(n, rows)


def read_graph6_lines(text: str) -> list[Graph]:
    graphs = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            graphs.append(decode(line))
    return graphs


def write_graph6_lines(graphs) -> str:
    return "\n".join(encode(g) for g in graphs) + "\n"


def read_edge_list(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"edge-list header must be 'n m', got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    g = Graph.from_edges(n, edges)
    g.validate()
    return g


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
