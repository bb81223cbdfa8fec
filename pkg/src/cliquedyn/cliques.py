"""Maximal clique enumeration and the clique graph operator.

Enumeration is recursive extension with pivot selection, all state kept
in bitmasks. A configurable cap converts runaway clique counts (typical
for iterated clique graphs of divergent inputs) into a CliqueLimitError
carrying the partial count instead of an unbounded run.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass

from .graphs import Graph, bits

DEFAULT_CLIQUE_CAP = 2_000_000


class CliqueLimitError(RuntimeError):
    """Clique count exceeded the configured cap."""

    def __init__(self, cap: int):
        super().__init__(f"maximal clique count exceeded the cap of {cap}")
        self.cap = cap
        self.partial_count = cap


@dataclass(frozen=True)
class CliqueList:
    """Maximal cliques of a host graph, as vertex masks in a fixed order."""

    host: Graph
    masks: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self):
        return iter(self.masks)

    def vertex_sets(self) -> list[tuple[int, ...]]:
        return [tuple(bits(m)) for m in self.masks]


def maximal_cliques(g: Graph, cap: int = DEFAULT_CLIQUE_CAP) -> CliqueList:
    """All maximal cliques of g, deduplicated, in deterministic order.

    Order is lexicographic on the sorted vertex tuples. The empty graph
    has no cliques; an isolated vertex is a clique of size one.
    """
    n = g.n
    rows = g.rows
    out: list[int] = []
    if n == 0:
        return CliqueList(g, ())
    limit = sys.getrecursionlimit()
    if n + 64 > limit:
        sys.setrecursionlimit(n + 128)

    def extend(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            if len(out) > cap:
                raise CliqueLimitError(cap)
            return
        # pivot: vertex of P|X covering most of P
        pivot = -1
        best = -1
        for u in bits(p | x):
            c = (p & rows[u]).bit_count()
            if c > best:
                best = c
                pivot = u
                if c == p.bit_count():
                    break
        for v in bits(p & ~rows[pivot]):
            vb = 1 << v
            extend(r | vb, p & rows[v], x & rows[v])
            p &= ~vb
            x |= vb

    try:
        extend(0, g.full_mask(), 0)
    finally:
        sys.setrecursionlimit(limit)
    out.sort(key=lambda m: tuple(bits(m)))
    return CliqueList(g, tuple(out))


def clique_graph(g: Graph, cap: int = DEFAULT_CLIQUE_CAP) -> tuple[Graph, CliqueList]:
    """The intersection graph of the maximal cliques of g.

    Vertex i of the returned graph is clique i of the returned
    CliqueList; vertices are adjacent iff the cliques share a vertex.
    """
    cl = maximal_cliques(g, cap=cap)
    k = len(cl)
    rows = [0] * k
    # cliques through a common vertex form a complete block in K(g)
    through: list[list[int]] = [[] for _ in range(g.n)]
    for i, m in enumerate(cl.masks):
        for v in bits(m):
            through[v].append(i)
    for group in through:
        if len(group) < 2:
            continue
        gm = 0
        for i in group:
            gm |= 1 << i
        for i in group:
            rows[i] |= gm
    for i in range(k):
        rows[i] &= ~(1 << i)
    return Graph(k, rows), cl
