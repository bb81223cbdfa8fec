"""Canonical labeling, isomorphism tests and coaffination search.

The canonizer refines an ordered partition to equitability, then
backtracks over individualizations of the first smallest non-singleton
cell. Automorphisms discovered from coinciding leaves prune sibling
branches (only permutations fixing the current prefix pointwise are
used, which keeps the pruning sound). The canonical form of a graph is
the graph6 string of the best relabeling found; two graphs are
isomorphic iff their canonical forms are equal.

A brute-force permutation oracle (`isomorphic_brute`) is provided for
cross-checking the canonizer on small graphs.
"""
from __future__ import annotations

from itertools import permutations

from . import graph6
from .graphs import Graph, bits, mask_of, relabel

# generators kept per canonization; beyond this the group is already
# collapsing the tree well enough
_MAX_GENERATORS = 64


def _refine(rows: tuple[int, ...], cells: list[int], worklist: list[int]) -> list[int]:
    """Refine an ordered partition to equitability.

    Cells are vertex masks. Splitting a cell orders the fragments by
    their neighbor count into the splitter, ascending, so the result
    depends only on the isomorphism type of (graph, ordered partition).
    """
    while worklist:
        splitter = worklist.pop()
        new_cells: list[int] = []
        for cell in cells:
            if cell & (cell - 1) == 0:  # empty or singleton
                new_cells.append(cell)
                continue
            groups: dict[int, int] = {}
            for v in bits(cell):
                d = (rows[v] & splitter).bit_count()
                groups[d] = groups.get(d, 0) | (1 << v)
            if len(groups) == 1:
                new_cells.append(cell)
                continue
            for d in sorted(groups):
                part = groups[d]
                new_cells.append(part)
                worklist.append(part)
        cells = new_cells
    return cells


def _first_target_cell(cells: list[int]) -> int:
    """Index of the first cell of minimal size >= 2, or -1 if discrete."""
    best = -1
    best_size = 0
    for i, cell in enumerate(cells):
        size = cell.bit_count()
        if size >= 2 and (best < 0 or size < best_size):
            best = i
            best_size = size
            if size == 2:
                break
    return best


def _relabeled_rows(rows: tuple[int, ...], label: list[int]) -> list[int]:
    """Adjacency rows after sending vertex label[i] to position i."""
    n = len(label)
    inv = [0] * n
    for pos, v in enumerate(label):
        inv[v] = pos
    out = [0] * n
    for v in range(n):
        r = rows[v]
        nr = 0
        while r:
            low = r & -r
            nr |= 1 << inv[low.bit_length() - 1]
            r ^= low
        out[inv[v]] = nr
    return out


class _CanonSearch:
    def __init__(self, g: Graph):
        self.rows = g.rows
        self.n = g.n
        self.best: tuple[int, ...] | None = None
        self.best_label: list[int] | None = None
        self.generators: list[tuple[int, ...]] = []
        self.leaf_labels: dict[tuple[int, ...], list[int]] = {}

    def run(self) -> list[int]:
        if self.n == 0:
            return []
        full = (1 << self.n) - 1
        cells = _refine(self.rows, [full], [full])
        self._descend(cells, ())
        assert self.best_label is not None
        return self.best_label

    def _descend(self, cells: list[int], prefix: tuple[int, ...]) -> None:
        tgt = _first_target_cell(cells)
        if tgt < 0:
            self._leaf(cells)
            return
        cell = cells[tgt]
        candidates = list(bits(cell))
        # orbit pruning: a candidate equivalent to an explored sibling
        # under automorphisms fixing the prefix pointwise yields the
        # same leaf strings and is skipped
        applicable: list[tuple[int, ...]] = []
        gen_count = -1
        explored: list[int] = []
        closure: set[int] = set()
        for v in candidates:
            if len(self.generators) != gen_count:
                gen_count = len(self.generators)
                applicable = [
                    g for g in self.generators if all(g[p] == p for p in prefix)
                ]
                closure = self._orbit_closure(explored, applicable)
            if v in closure:
                continue
            explored.append(v)
            closure |= self._orbit_closure([v], applicable)
            rest = cell & ~(1 << v)
            new_cells = cells[:tgt] + [1 << v, rest] + cells[tgt + 1 :]
            refined = _refine(self.rows, new_cells, [1 << v, rest])
            self._descend(refined, prefix + (v,))
        return

    @staticmethod
    def _orbit_closure(seed: list[int], gens: list[tuple[int, ...]]) -> set[int]:
        out = set(seed)
        if not gens:
            return out
        frontier = list(seed)
        while frontier:
            v = frontier.pop()
            for g in gens:
                w = g[v]
                if w not in out:
                    out.add(w)
                    frontier.append(w)
        return out

    def _leaf(self, cells: list[int]) -> None:
        label = [cell.bit_length() - 1 for cell in cells]
        rel = tuple(_relabeled_rows(self.rows, label))
        prev = self.leaf_labels.get(rel)
        if prev is not None:
            if len(self.generators) < _MAX_GENERATORS:
                gen = [0] * self.n
                for pos in range(self.n):
                    gen[prev[pos]] = label[pos]
                self.generators.append(tuple(gen))
        elif len(self.leaf_labels) < 4096:
            self.leaf_labels[rel] = label
        if self.best is None or rel < self.best:
            self.best = rel
            self.best_label = label


def canonical_labeling(g: Graph) -> list[int]:
    """A labeling (position -> original vertex) realizing the canonical form."""
    return _CanonSearch(g).run()


def canonical_graph(g: Graph) -> Graph:
    label = canonical_labeling(g)
    inv = [0] * g.n
    for pos, v in enumerate(label):
        inv[v] = pos
    return relabel(g, inv)


def canonical_form(g: Graph) -> str:
    """Relabeling-invariant identifier: graph6 of the canonical labeling.

    canonical_form(g) == canonical_form(h) iff g and h are isomorphic.
    """
    return graph6.encode(canonical_graph(g))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def isomorphic_brute(g: Graph, h: Graph) -> bool:
    """Exhaustive isomorphism oracle, independent of the canonizer.

    Plain backtracking over vertex assignments with degree and adjacency
    consistency checks; exponential, for small-n testing only.
    """
    if g.n != h.n:
        return False
    if g.n > 10:
        raise ValueError("brute-force isomorphism oracle capped at n=10")
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    n = g.n
    gd = g.degrees()
    hd = h.degrees()
    assigned = [-1] * n
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or gd[v] != hd[w]:
                continue
            if any(
                ((g.rows[v] >> u) & 1) != ((h.rows[w] >> assigned[u]) & 1)
                for u in range(v)
            ):
                continue
            assigned[v] = w
            used[w] = True
            if extend(v + 1):
                return True
            used[w] = False
            assigned[v] = -1
        return False

    return extend(0)


def automorphisms_brute(g: Graph) -> list[tuple[int, ...]]:
    """All automorphisms by exhaustive search; for small-n testing only."""
    if g.n > 8:
        raise ValueError("brute-force automorphism listing capped at n=8")
    out = []
    deg = g.degrees()
    for perm in permutations(range(g.n)):
        if any(deg[v] != deg[perm[v]] for v in range(g.n)):
            continue
        if all(
            ((g.rows[u] >> v) & 1) == ((g.rows[perm[u]] >> perm[v]) & 1)
            for u in range(g.n)
            for v in range(u + 1, g.n)
        ):
            out.append(perm)
    return out


def is_coaffination(g: Graph, perm: tuple[int, ...] | list[int]) -> bool:
    """Check that perm is an automorphism moving every vertex off its closed neighborhood."""
    if sorted(perm) != list(range(g.n)):
        return False
    for v in range(g.n):
        img = perm[v]
        if img == v or (g.rows[v] >> img) & 1:
            return False
    for u in range(g.n):
        for v in bits(g.rows[u]):
            if not (g.rows[perm[u]] >> perm[v]) & 1:
                return False
    return True


def find_coaffination(g: Graph, node_cap: int = 500_000) -> tuple[int, ...] | None:
    """Automorphism sigma with sigma(x) outside N[x] for every x, or None.

    The constraint is folded into the backtracking as a candidate filter
    rather than enumerating the automorphism group first. The graph on
    zero vertices has no coaffination by convention. `node_cap` bounds
    the search; on cap exhaustion the search reports None, which callers
    treat as "no certificate found" (never as a wrong answer).
    """
    n = g.n
    if n == 0:
        return None
    deg = g.degrees()
    rows = g.rows
    full = (1 << n) - 1
    base_candidates = []
    for v in range(n):
        cand = full & ~rows[v] & ~(1 << v)
        cand = mask_of(u for u in bits(cand) if deg[u] == deg[v])
        if not cand:
            return None
        base_candidates.append(cand)
    # assign vertices in order of fewest candidates first
    order = sorted(range(n), key=lambda v: base_candidates[v].bit_count())
    assigned: list[int] = [-1] * n
    used = 0
    nodes = 0

    def backtrack(idx: int) -> bool:
        nonlocal used, nodes
        if idx == n:
            return True
        nodes += 1
        if nodes > node_cap:
            return False
        v = order[idx]
        cand = base_candidates[v] & ~used
        for w in bits(cand):
            ok = True
            for prev_idx in range(idx):
                u = order[prev_idx]
                if ((rows[v] >> u) & 1) != ((rows[w] >> assigned[u]) & 1):
                    ok = False
                    break
            if not ok:
                continue
            assigned[v] = w
            used |= 1 << w
            if backtrack(idx + 1):
                return True
            used &= ~(1 << w)
            assigned[v] = -1
            if nodes > node_cap:
                return False
        return False

    if backtrack(0):
        return tuple(assigned)
    return None
