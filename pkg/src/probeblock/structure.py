"""Recognizers for the supporting graph classes.

Universal vertices, complete split partitions, the (K, X, Y, Z) shape that
characterizes 2-probe complete graphs, block graphs, chordality (lex-BFS),
distance-hereditary graphs (pruning by pendants and twins) and ptolemaic
graphs.  Every negative answer carries a concrete witness.

The (K, X, Y, Z) decomposition of a graph G:

* K is the set of ALL universal vertices,
* Z the isolated vertices of G - K,
* the remainder must form at most one connected component, and that
  component must be complete bipartite with parts (X, Y).

X is canonically the part containing the smallest remaining vertex id; the
empty remainder yields X = Y = {}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _kernels
from .decomposition import BlockDecomposition, block_decomposition
from .graphs import Graph, induced
from .patterns import find_induced, pattern

__all__ = [
    "KxyzPartition",
    "KxyzFailure",
    "CompleteSplitPartition",
    "CompleteSplitFailure",
    "CheckResult",
    "universal_set",
    "complete_split",
    "kxyz",
    "block_structures",
    "is_block_graph",
    "is_chordal",
    "is_distance_hereditary",
    "is_ptolemaic",
]


@dataclass(frozen=True)
class KxyzPartition:
    """Partition into universal / cross-joined / isolated parts.

    Invariants: K is exactly the universal vertex set; X u Z and Y u Z are
    independent; every X-Y pair is adjacent; Z is exactly the set of
    isolated vertices once K is removed.
    """

    k: frozenset
    x: frozenset
    y: frozenset
    z: frozenset

    def __bool__(self) -> bool:
        return True


_KXYZ_REASONS = {
    _kernels.KXYZ_TWO_COMPONENTS: "two-components",
    _kernels.KXYZ_ODD_CYCLE: "odd-cycle",
    _kernels.KXYZ_MISSING_CROSS: "missing-cross-edge",
}


@dataclass(frozen=True)
class KxyzFailure:
    """Why a graph is not a (K, X, Y, Z)-graph.

    reason is one of "two-components" (witness: one vertex from each
    non-trivial component), "odd-cycle" (witness: an edge whose ends were
    forced into the same side; `cycle` holds a full odd cycle when it was
    extracted) or "missing-cross-edge" (witness: a non-adjacent cross pair).
    """

    reason: str
    witness: tuple[int, int]
    cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class CompleteSplitPartition:
    clique: frozenset
    independent: frozenset

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class CompleteSplitFailure:
    """Witness: an induced K2+K1 or C4 (pattern name plus its vertices)."""

    pattern: str
    vertices: tuple[int, ...]

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class CheckResult:
    """Boolean verdict plus certificate payloads (used by several checks)."""

    ok: bool
    witness: tuple[int, ...] | None = None
    order: tuple[int, ...] | None = None
    block: int | None = None

    def __bool__(self) -> bool:
        return self.ok


# ---------------------------------------------------------------------------


def universal_set(g: Graph) -> frozenset:
    """Vertices adjacent to everything else (degree n - 1)."""
    return frozenset(int(v) for v in np.flatnonzero(g.degrees == g.n - 1))


def complete_split(g: Graph) -> CompleteSplitPartition | CompleteSplitFailure:
    """Split into a clique fully joined to an independent set, or a witness.

    The clique side is maximal: it is exactly the universal vertex set, so
    success means the rest of the graph is edgeless.  On failure the witness
    is a concrete induced K2+K1 or C4.
    """
    k = universal_set(g)
    adj = g.neighbor_sets
    rest_edge = None
    for u, v in g.edges():
        if u not in k and v not in k:
            rest_edge = (u, v)
            break
    if rest_edge is None:
        return CompleteSplitPartition(clique=k, independent=frozenset(range(g.n)) - k)
    u, v = rest_edge
    all_v = set(range(g.n))
    w = min(all_v - adj[u] - {u})  # exists: u is not universal
    if w not in adj[v]:
        return CompleteSplitFailure("K2+K1", (u, v, w))
    x = min(all_v - adj[v] - {v})
    if x not in adj[u]:
        return CompleteSplitFailure("K2+K1", (u, v, x))
    # u ~ v, w ~ v, x ~ u, u !~ w, v !~ x; w-x decides between C4 and K2+K1
    if w in adj[x]:
        return CompleteSplitFailure("C4", (u, v, w, x))
    return CompleteSplitFailure("K2+K1", (x, u, w))


def _extract_odd_cycle(g: Graph, banned: frozenset) -> tuple[int, ...]:
    """An odd cycle inside g - banned (which must contain one)."""
    adj = g.neighbor_sets
    parent: dict[int, int] = {}
    depth: dict[int, int] = {}
    for root in range(g.n):
        if root in banned or root in depth:
            continue
        depth[root] = 0
        parent[root] = -1
        queue = [root]
        while queue:
            nxt: list[int] = []
            for u in queue:
                for w in sorted(adj[u]):
                    if w in banned:
                        continue
                    if w not in depth:
                        depth[w] = depth[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif depth[w] == depth[u] and w > u:
                        # same BFS layer: the tree paths close an odd cycle
                        pu, pw = [u], [w]
                        a, b = u, w
                        while a != b:
                            a, b = parent[a], parent[b]
                            pu.append(a)
                            pw.append(b)
                        return tuple(pu + pw[-2::-1])
            queue = nxt
    raise AssertionError("no odd cycle found")


def _kxyz_from_arrays(g: Graph, vertices: np.ndarray, vlabel: np.ndarray,
                      status: int, wa: int, wb: int,
                      extract_cycle: bool = True) -> KxyzPartition | KxyzFailure:
    if status != _kernels.KXYZ_OK:
        reason = _KXYZ_REASONS[status]
        cycle = None
        if reason == "odd-cycle" and extract_cycle:
            # search only inside the scope (a block, or the whole graph)
            sub = induced(g, [int(v) for v in vertices])
            k_local = frozenset(s for s in range(len(vertices))
                                if vlabel[s] == _kernels.LAB_K)
            local = _extract_odd_cycle(sub, k_local)
            cycle = tuple(int(vertices[i]) for i in local)
        return KxyzFailure(reason, (int(wa), int(wb)), cycle)
    sets: dict[int, set[int]] = {0: set(), 1: set(), 2: set(), 3: set()}
    for s, v in enumerate(vertices):
        sets[int(vlabel[s])].add(int(v))
    return KxyzPartition(k=frozenset(sets[0]), x=frozenset(sets[1]),
                         y=frozenset(sets[2]), z=frozenset(sets[3]))


def kxyz(g: Graph) -> KxyzPartition | KxyzFailure:
    """Decompose g into (K, X, Y, Z), or explain why that is impossible."""
    n, m = g.n, g.m
    block_ptr = np.array([0, n], dtype=np.int32)
    block_verts = np.arange(n, dtype=np.int32)
    eb_ptr = np.array([0, m], dtype=np.int32)
    eb_order = np.arange(m, dtype=np.int32)
    eu = np.ascontiguousarray(g.edge_array[:, 0])
    ev = np.ascontiguousarray(g.edge_array[:, 1])
    vlabel, status, counts, is_clique, wa, wb, _ = _kernels.kxyz_blocks(
        1, block_ptr, block_verts, eb_ptr, eb_order, eu, ev, n, m)
    return _kxyz_from_arrays(g, block_verts, vlabel, int(status[0]),
                             int(wa[0]), int(wb[0]))


def _block_kxyz_arrays(bd: BlockDecomposition):
    """Kernel-level (K, X, Y, Z) classification of every block, cached."""
    cached = getattr(bd, "_kxyz_arrays", None)
    if cached is None:
        eb_ptr, eb_order = bd.edges_by_block
        eu, ev = bd.edge_cols
        sizes = np.diff(bd.block_ptr)
        max_bsize = int(sizes.max()) if bd.n_blocks else 0
        max_bedges = int(bd.block_edge_counts.max()) if bd.n_blocks else 0
        cached = _kernels.kxyz_blocks(
            bd.n_blocks, bd.block_ptr, bd.block_verts, eb_ptr, eb_order,
            eu, ev, max_bsize, max_bedges)
        bd._kxyz_arrays = cached
    return cached


def block_structures(g: Graph, bd: BlockDecomposition | None = None
                     ) -> list[KxyzPartition | KxyzFailure]:
    """Per-block (K, X, Y, Z) partitions, aligned with bd.blocks."""
    if bd is None:
        bd = block_decomposition(g)
    vlabel, status, counts, is_clique, wa, wb, _ = _block_kxyz_arrays(bd)
    out: list[KxyzPartition | KxyzFailure] = []
    for b in range(bd.n_blocks):
        s0, s1 = int(bd.block_ptr[b]), int(bd.block_ptr[b + 1])
        res = _kxyz_from_arrays(g, bd.block_verts[s0:s1], vlabel[s0:s1],
                                int(status[b]), int(wa[b]), int(wb[b]))
        out.append(res)
    return out


def is_block_graph(g: Graph) -> CheckResult:
    """True iff every block induces a clique; else a non-adjacent co-block pair."""
    bd = block_decomposition(g)
    sizes = np.diff(bd.block_ptr)
    want = sizes * (sizes - 1) // 2
    bad = np.flatnonzero(want != bd.block_edge_counts)
    if bad.size == 0:
        return CheckResult(ok=True)
    b = int(bad[0])
    verts = bd.block(b)
    adj = g.neighbor_sets
    for i, u in enumerate(verts):
        for w in verts[i + 1:]:
            if w not in adj[u]:
                return CheckResult(ok=False, witness=(u, w), block=b)
    raise AssertionError("miscounted block edges")


# ---------------------------------------------------------------------------
# chordality


def _lex_bfs(g: Graph) -> list[int]:
    """Lexicographic BFS order, lowest id first among ties."""
    adj = g.neighbor_sets
    n = g.n
    labels: list[list[int]] = [[] for _ in range(n)]
    visited = [False] * n
    order: list[int] = []
    for i in range(n, 0, -1):
        best = -1
        for v in range(n):
            if not visited[v] and (best == -1 or labels[v] > labels[best]):
                best = v
        visited[best] = True
        order.append(best)
        for w in adj[best]:
            if not visited[w]:
                labels[w].append(i)
    return order


def _find_hole(g: Graph, hint: tuple[int, int, int] | None = None) -> tuple[int, ...]:
    """A chordless cycle of length >= 4 in a non-chordal graph.

    For a vertex u with two non-adjacent neighbors a, b, the shortest a-b
    path avoiding N[u] closes a chordless cycle through u.  The hint triple
    from the elimination-order check is tried first.
    """
    adj = g.neighbor_sets
    triples = []
    if hint is not None:
        triples.append(hint)
    for u in range(g.n):
        nbrs = sorted(adj[u])
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                if b not in adj[a]:
                    triples.append((u, a, b))
    for u, a, b in triples:
        banned = (adj[u] | {u}) - {a, b}
        prev = {a: -1}
        queue = [a]
        while queue:
            nxt = []
            for x in queue:
                for w in sorted(adj[x]):
                    if w in banned or w in prev:
                        continue
                    prev[w] = x
                    nxt.append(w)
            queue = nxt
            if b in prev:
                break
        if b not in prev:
            continue
        path = [b]
        while path[-1] != a:
            path.append(prev[path[-1]])
        return tuple([u] + path[::-1])
    raise AssertionError("no hole found in a non-chordal graph")


def is_chordal(g: Graph) -> CheckResult:
    """Lex-BFS based chordality test.

    On success `order` is a perfect elimination order; on failure `witness`
    is a chordless cycle of length >= 4.
    """
    peo = _lex_bfs(g)[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    adj = g.neighbor_sets
    for v in peo:
        later = [w for w in adj[v] if pos[w] > pos[v]]
        if not later:
            continue
        w0 = min(later, key=pos.__getitem__)
        for x in later:
            if x != w0 and x not in adj[w0]:
                return CheckResult(ok=False, witness=_find_hole(g, (v, w0, x)))
    return CheckResult(ok=True, order=tuple(peo))


# ---------------------------------------------------------------------------
# distance-hereditary / ptolemaic


def is_distance_hereditary(g: Graph) -> bool:
    """Prune pendant vertices and twins until only isolated vertices remain.

    At every step the lowest-id vertex that is pendant, or has a twin
    (same neighborhood up to each other), is removed.  The graph is
    distance-hereditary iff this empties every component down to one vertex,
    i.e. no edges survive.
    """
    adj = [set(s) for s in g.neighbor_sets]
    alive = sorted(range(g.n))
    while True:
        victim = -1
        for v in alive:
            if len(adj[v]) == 1:
                victim = v
                break
            has_twin = any(adj[v] - {u} == adj[u] - {v} for u in alive if u != v)
            if has_twin:
                victim = v
                break
        if victim == -1:
            break
        for w in adj[victim]:
            adj[w].discard(victim)
        adj[victim].clear()
        alive.remove(victim)
    return all(not adj[v] for v in alive)


def is_ptolemaic(g: Graph) -> bool:
    """Chordal and with no induced gem."""
    if not is_chordal(g):
        return False
    return find_induced(g, pattern("gem")) is None
