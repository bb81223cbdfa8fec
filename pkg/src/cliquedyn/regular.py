"""Exhaustive and random generation of k-regular graphs, plus 2-switches.

Exhaustive enumeration dispatches by degree:

  * k = 0, 1 and k = n-1 are single classes,
  * k = 2 graphs are disjoint unions of cycles, one class per partition
    of n into parts >= 3,
  * k > (n-1)/2 is enumerated through complements,
  * k = 3 uses an expansion closure: every cubic graph on n vertices
    either arises from one on n-2 vertices by subdividing two distinct
    edges and joining the new vertices, or belongs to an explicitly
    constructible irreducible family (diamond necklaces and diamond/
    connector assemblies) or is a disjoint union of smaller components.
    The closure is cross-checked against the independent brute-force
    enumerator in the test suite,
  * other degrees fall back to a pruned row-by-row backtracking.

All paths deduplicate through canonical forms and emit canonically
labeled graphs sorted by their graph6 string, so output order is
reproducible. `enumerate_regular_brute` is a deliberately naive
enumerator (no symmetry pruning, brute-force isomorphism dedup) kept as
an independent oracle for small orders.
"""
from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product

from . import graph6
from .canon import canonical_graph, isomorphic_brute
from .graphs import (
    Graph,
    bits,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    is_connected,
    matching_graph,
)
from .helly import triangle_count

CUBIC_CEILING_DEFAULT = 14
GENERIC_CEILING_DEFAULT = 10
CUBIC_CEILING_MAX = 20


@dataclass(frozen=True)
class RegularGenSpec:
    """What to generate: degree, order, mode and connectivity filter."""

    k: int
    n: int
    mode: str = "exhaustive"  # or "random"
    count: int = 0
    seed: int = 0
    connected_only: bool = False

    def __post_init__(self):
        if self.k < 0 or self.n < 0:
            raise ValueError("degree and order must be non-negative")
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown generation mode {self.mode!r}")
        if self.mode == "random" and self.count < 1:
            raise ValueError("random mode needs a positive sample count")

    def satisfiable(self) -> bool:
        return 0 <= self.k < self.n and (self.n * self.k) % 2 == 0

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "mode": self.mode,
            "count": self.count,
            "seed": self.seed,
            "connected_only": self.connected_only,
        }


def two_switch(g: Graph, e1: tuple[int, int], e2: tuple[int, int]) -> Graph:
    """Replace edges {a,b},{u,v} by {a,u},{b,v}; preserves all degrees.

    Requires both edges present, the four vertices distinct, and the new
    pairs non-adjacent. Violations raise ValueError naming the pair.
    """
    a, b = e1
    u, v = e2
    if len({a, b, u, v}) != 4:
        raise ValueError(f"2-switch endpoints must be distinct, got {e1} and {e2}")
    if not g.has_edge(a, b):
        raise ValueError(f"({a}, {b}) is not an edge")
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    if g.has_edge(a, u):
        raise ValueError(f"vertices {a} and {u} are already adjacent")
    if g.has_edge(b, v):
        raise ValueError(f"vertices {b} and {v} are already adjacent")
    rows = list(g.rows)
    rows[a] &= ~(1 << b)
    rows[b] &= ~(1 << a)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    rows[a] |= 1 << u
    rows[u] |= 1 << a
    rows[b] |= 1 << v
    rows[v] |= 1 << b
    return Graph(g.n, rows)


# ---------------------------------------------------------------------------
# random generation: pairing model plus 2-switch burn-in

_PAIRING_TRIES = 100_000
BURN_IN_FACTOR = 200


def random_regular(k: int, n: int, seed: int = 0) -> Graph:
    """Seeded random k-regular graph via the pairing model.

    Stubs are paired repeatedly, re-shuffling only the conflicted stubs,
    then the result is mixed with 200*n random 2-switch attempts.
    Identical (k, n, seed) always produce the identical edge set.
    """
    if not 0 <= k < n:
        raise ValueError(f"need 0 <= k < n, got k={k}, n={n}")
    if (n * k) % 2:
        raise ValueError(f"n*k must be even, got n={n}, k={k}")
    rng = random.Random(seed)
    if k == 0:
        return empty_graph(n)
    edges = None
    for _ in range(_PAIRING_TRIES):
        edges = _try_pairing(rng, n, k)
        if edges is not None:
            break
    if edges is None:
        raise RuntimeError(f"pairing model failed after {_PAIRING_TRIES} attempts")
    return _burn_in(rng, n, sorted(edges))


def _try_pairing(rng: random.Random, n: int, k: int) -> set[tuple[int, int]] | None:
    edges: set[tuple[int, int]] = set()
    stubs = list(range(n)) * k
    while stubs:
        conflicted: dict[int, int] = {}
        rng.shuffle(stubs)
        it = iter(stubs)
        for s1, s2 in zip(it, it):
            if s1 > s2:
                s1, s2 = s2, s1
            if s1 != s2 and (s1, s2) not in edges:
                edges.add((s1, s2))
            else:
                conflicted[s1] = conflicted.get(s1, 0) + 1
                conflicted[s2] = conflicted.get(s2, 0) + 1
        if conflicted and not _pairing_can_continue(edges, conflicted):
            return None
        stubs = [v for v, c in conflicted.items() for _ in range(c)]
    return edges


def _pairing_can_continue(edges, conflicted) -> bool:
    nodes = sorted(conflicted)
    for i, s1 in enumerate(nodes):
        for s2 in nodes[i + 1 :]:
            if (s1, s2) not in edges:
                return True
    return False


def _burn_in(rng: random.Random, n: int, edges: list[tuple[int, int]]) -> Graph:
    rows = [0] * n
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    m = len(edges)
    if m >= 2:
        for _ in range(BURN_IN_FACTOR * n):
            i = rng.randrange(m)
            j = rng.randrange(m)
            if i == j:
                continue
            a, b = edges[i]
            u, v = edges[j]
            if rng.getrandbits(1):
                u, v = v, u
            if len({a, b, u, v}) != 4:
                continue
            if (rows[a] >> u) & 1 or (rows[b] >> v) & 1:
                continue
            rows[a] &= ~(1 << b)
            rows[b] &= ~(1 << a)
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
            rows[a] |= 1 << u
            rows[u] |= 1 << a
            rows[b] |= 1 << v
            rows[v] |= 1 << b
            edges[i] = (a, u)
            edges[j] = (b, v)
    return Graph(n, rows)


# ---------------------------------------------------------------------------
# exhaustive enumeration

def enumerate_regular(spec: RegularGenSpec, ceiling: int | None = None):
    """Yield the generated graphs for a RegularGenSpec.

    Exhaustive mode yields exactly one canonically labeled representative
    per isomorphism class, sorted by graph6 string. Random mode yields
    `count` seeded samples (classes may repeat). Unsatisfiable degree
    specs warn and yield nothing.
    """
    if not spec.satisfiable():
        warnings.warn(
            f"no {spec.k}-regular graphs on {spec.n} vertices exist", stacklevel=2
        )
        return
    if spec.mode == "random":
        for i in range(spec.count):
            g = random_regular(spec.k, spec.n, seed=spec.seed + i)
            if spec.connected_only and not is_connected(g):
                continue
            yield g
        return
    for g in _regular_classes(spec.k, spec.n, ceiling):
        if spec.connected_only and not is_connected(g):
            continue
        yield g


def _sorted_canonical(graphs) -> tuple[Graph, ...]:
    by_form: dict[str, Graph] = {}
    for g in graphs:
        cg = canonical_graph(g)
        by_form[graph6.encode(cg)] = cg
    return tuple(by_form[s] for s in sorted(by_form))


def _regular_classes(k: int, n: int, ceiling: int | None) -> tuple[Graph, ...]:
    if k == 0:
        return (empty_graph(n),)
    if k == n - 1:
        return (complete_graph(n),)
    if 2 * k > n - 1:
        flipped = _regular_classes(n - 1 - k, n, ceiling)
        return _sorted_canonical(complement(g) for g in flipped)
    if k == 1:
        return (canonical_graph(matching_graph(n // 2)),)
    if k == 2:
        return _sorted_canonical(
            disjoint_union([cycle_graph(p) for p in part])
            for part in _partitions_min_part(n, 3)
        )
    if k == 3:
        lid = CUBIC_CEILING_DEFAULT if ceiling is None else min(ceiling, CUBIC_CEILING_MAX)
        if n > lid:
            raise ValueError(
                f"exhaustive cubic enumeration capped at n={lid} (requested {n})"
            )
        return _cubic_classes(n)
    lid = GENERIC_CEILING_DEFAULT if ceiling is None else ceiling
    if n > lid:
        raise ValueError(
            f"exhaustive {k}-regular enumeration capped at n={lid} (requested {n})"
        )
    return _sorted_canonical(_pruned_labeled_regular(n, k))


def _partitions_min_part(n: int, min_part: int):
    """Partitions of n into parts >= min_part, descending, lex order."""

    def rec(rest: int, cap: int, acc: list[int]):
        if rest == 0:
            yield tuple(acc)
            return
        top = min(cap, rest)
        for p in range(top, min_part - 1, -1):
            if rest - p == 0 or rest - p >= min_part:
                acc.append(p)
                yield from rec(rest - p, p, acc)
                acc.pop()

    yield from rec(n, n, [])


# -- cubic graphs via expansion closure -------------------------------------

def _edge_insert(g: Graph, e1: tuple[int, int], e2: tuple[int, int]) -> Graph:
    """Subdivide two distinct edges and join the two new vertices."""
    a, b = e1
    c, d = e2
    n = g.n
    x, y = n, n + 1
    rows = list(g.rows) + [0, 0]
    rows[a] &= ~(1 << b)
    rows[b] &= ~(1 << a)
    rows[c] &= ~(1 << d)
    rows[d] &= ~(1 << c)
    for p, q in ((x, a), (x, b), (y, c), (y, d), (x, y)):
        rows[p] |= 1 << q
        rows[q] |= 1 << p
    return Graph(n + 2, rows)


def _diamond_block(i: int) -> list[tuple[int, int]]:
    # diamond on 4i..4i+3: chord (4i, 4i+1), tips 4i+2 and 4i+3
    b = 4 * i
    return [(b, b + 1), (b, b + 2), (b, b + 3), (b + 1, b + 2), (b + 1, b + 3)]


def _tip_partitions(tips: list[int], n_pairs: int, n_triples: int):
    """Partitions of the tip list into n_pairs 2-blocks and n_triples 3-blocks."""
    if not tips:
        yield []
        return
    first = tips[0]
    rest = tips[1:]
    if n_pairs:
        for other in rest:
            remaining = [t for t in rest if t != other]
            for tail in _tip_partitions(remaining, n_pairs - 1, n_triples):
                yield [(first, other)] + tail
    if n_triples:
        for pair in combinations(rest, 2):
            remaining = [t for t in rest if t not in pair]
            for tail in _tip_partitions(remaining, n_pairs, n_triples - 1):
                yield [(first,) + pair] + tail


def _irreducible_cubic_connected(n: int) -> list[Graph]:
    """Connected cubic graphs on n >= 6 vertices with no reducible edge.

    These are assemblies of vertex-disjoint diamonds whose tips are
    matched up pairwise or attached in triples to connector vertices.
    Every edge of such a graph is blocked for the 2-edge reduction, and
    conversely a reduction-free connected cubic graph has this shape.
    """
    out: list[Graph] = []
    if n < 8 or n % 2:
        return out
    for d in range(1, n // 4 + 1):
        c = n - 4 * d
        if 3 * c > 2 * d or (2 * d - 3 * c) % 2:
            continue
        p = (2 * d - 3 * c) // 2
        tips = [4 * i + 2 + j for i in range(d) for j in (0, 1)]
        edges_base = [e for i in range(d) for e in _diamond_block(i)]
        for blocks in _tip_partitions(tips, p, c):
            edges = list(edges_base)
            extra = 0
            ok = True
            for block in blocks:
                if len(block) == 2:
                    t1, t2 = block
                    if t1 // 4 == t2 // 4:
                        ok = False  # same-diamond tip edge closes a K4 component
                        break
                    edges.append((t1, t2))
                else:
                    v = 4 * d + extra
                    extra += 1
                    edges.extend((v, t) for t in block)
            if not ok:
                continue
            g = Graph.from_edges(4 * d + extra, edges)
            if is_connected(g):
                out.append(g)
    return out


@lru_cache(maxsize=None)
def _connected_cubic_classes(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in _cubic_classes(n) if is_connected(g))


@lru_cache(maxsize=None)
def _cubic_classes(n: int) -> tuple[Graph, ...]:
    if n < 4 or n % 2:
        return ()
    if n == 4:
        return (canonical_graph(complete_graph(4)),)
    candidates: list[Graph] = []
    for g in _cubic_classes(n - 2):
        edge_list = list(g.edges())
        for e1, e2 in combinations(edge_list, 2):
            candidates.append(_edge_insert(g, e1, e2))
    for part in _partitions_min_part(n, 4):
        if len(part) < 2 or any(p % 2 for p in part):
            continue
        sizes: dict[int, int] = {}
        for p in part:
            sizes[p] = sizes.get(p, 0) + 1
        pools = [
            list(combinations_with_replacement(_connected_cubic_classes(s), mult))
            for s, mult in sorted(sizes.items())
        ]
        for choice in product(*pools):
            parts = [g for group in choice for g in group]
            candidates.append(disjoint_union(parts))
    candidates.extend(_irreducible_cubic_connected(n))
    return _sorted_canonical(candidates)


# -- generic degrees: pruned row-by-row backtracking -------------------------

def _tail_ge(a: int, b: int) -> bool:
    # lexicographic from the low bit: first differing position must be in a
    diff = a ^ b
    if not diff:
        return True
    return bool(a & (diff & -diff))


def _pruned_labeled_regular(n: int, k: int):
    """Labeled k-regular graphs surviving two sound symmetry prunings.

    Vertex 0's neighborhood is fixed to {1..k}, and consecutive vertices
    with identical earlier columns must have non-increasing forward
    rows. Every isomorphism class keeps at least one representative
    (its maximal-string labeling satisfies both rules), so canonical
    deduplication downstream yields the full census.
    """
    rows = [0] * n
    deg = [0] * n
    out: list[Graph] = []

    def feasible(v: int) -> bool:
        residual = [k - deg[w] for w in range(v + 1, n)]
        if sum(residual) % 2:
            return False
        open_idx = [w for w in range(v + 1, n) if deg[w] < k]
        for w in open_idx:
            free = sum(
                1
                for u in open_idx
                if u != w and not (rows[w] >> u) & 1
            )
            if k - deg[w] > free:
                return False
        return True

    def place(v: int):
        if v == n:
            out.append(Graph(n, rows.copy()))
            return
        need = k - deg[v]
        if need < 0:
            return
        avail = [w for w in range(v + 1, n) if deg[w] < k and not (rows[v] >> w) & 1]
        if need > len(avail):
            return
        for combo in combinations(avail, need):
            for w in combo:
                rows[v] |= 1 << w
                rows[w] |= 1 << v
                deg[v] += 1
                deg[w] += 1
            ok = True
            if v >= 1:
                low = (1 << (v - 1)) - 1
                if (rows[v - 1] & low) == (rows[v] & low):
                    ok = _tail_ge(rows[v - 1] >> (v + 1), rows[v] >> (v + 1))
            if ok and feasible(v):
                place(v + 1)
            for w in combo:
                rows[v] &= ~(1 << w)
                rows[w] &= ~(1 << v)
                deg[v] -= 1
                deg[w] -= 1

    # fix N(0) = {1..k}
    for w in range(1, k + 1):
        rows[0] |= 1 << w
        rows[w] |= 1
        deg[w] = 1
    deg[0] = k
    place(1)
    return out


# -- naive oracle ------------------------------------------------------------

def enumerate_regular_brute(k: int, n: int, max_n: int = 8) -> list[Graph]:
    """Independent brute-force census: all labeled graphs, brute-force dedup.

    No symmetry pruning and no shared canonical machinery: isomorphism
    is decided by permutation search, with cheap invariants only used to
    shortcut comparisons. Exponential; capped at small n.
    """
    if n > max_n:
        raise ValueError(f"brute-force enumeration capped at n={max_n}")
    if not (0 <= k < n) or (n * k) % 2:
        return []
    reps: list[Graph] = []
    invariants: list[tuple] = []
    for g in _all_labeled_regular(n, k):
        inv = _cheap_invariant(g)
        found = False
        for rep, rinv in zip(reps, invariants):
            if rinv == inv and isomorphic_brute(g, rep):
                found = True
                break
        if not found:
            reps.append(g)
            invariants.append(inv)
    reps.sort(key=graph6.encode)
    return reps


def _cheap_invariant(g: Graph) -> tuple:
    per_vertex = []
    for v in range(g.n):
        tri = 0
        for u in bits(g.rows[v]):
            tri += (g.rows[v] & g.rows[u]).bit_count()
        per_vertex.append(tri // 2)
    return (triangle_count(g), tuple(sorted(per_vertex)))


def _all_labeled_regular(n: int, k: int):
    rows = [0] * n
    deg = [0] * n

    def place(v: int):
        if v == n:
            yield Graph(n, rows.copy())
            return
        need = k - deg[v]
        if need < 0:
            return
        avail = [w for w in range(v + 1, n) if deg[w] < k]
        if need > len(avail):
            return
        for combo in combinations(avail, need):
            for w in combo:
                rows[v] |= 1 << w
                rows[w] |= 1 << v
                deg[v] += 1
                deg[w] += 1
            yield from place(v + 1)
            for w in combo:
                rows[v] &= ~(1 << w)
                rows[w] &= ~(1 << v)
                deg[v] -= 1
                deg[w] -= 1

    yield from place(0)
