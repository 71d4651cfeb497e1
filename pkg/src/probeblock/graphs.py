"""Immutable simple graphs on dense integer vertex ids.

Vertices are always 0..n-1. Edges live in a canonical (m, 2) int32 array
(u < v per row, rows lexicographically sorted, no duplicates), which makes
equality, hashing and file round-trips bit-exact. Derived views (adjacency
sets, CSR arrays) are built lazily and cached; graphs are immutable after
construction and safe to read from any number of threads.

Two interchange formats are supported: a plain edge-list text format and
graph6 (single-byte size prefix, so n <= 62).
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

__all__ = [
    "Graph",
    "ParseError",
    "parse_graph",
    "to_edge_list",
    "to_graph6",
    "compose",
    "induced",
    "complement",
    "empty_graph",
    "complete_graph",
    "path_graph",
    "cycle_graph",
]


class ParseError(ValueError):
    """Malformed graph input; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


def _canonical_edge_array(n: int, edges: Iterable[tuple[int, int]]) -> np.ndarray:
    arr = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
    if arr.size:
        if arr.min() < 0 or arr.max() >= n:
            raise ValueError(f"vertex id out of range 0..{n - 1}")
        if (arr[:, 0] == arr[:, 1]).any():
            raise ValueError("self-loops are not allowed")
        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        keys = np.unique(lo * n + hi)
        arr = np.stack([keys // n, keys % n], axis=1)
    return np.ascontiguousarray(arr, dtype=np.int32)


class Graph:
    """An undirected simple graph, immutable after construction."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = int(n)
        self.edge_array = _canonical_edge_array(self.n, edges)
        self.edge_array.setflags(write=False)

    @classmethod
    def _from_canonical(cls, n: int, arr: np.ndarray) -> "Graph":
        """Trusted constructor: `arr` must already be canonical int32."""
        g = object.__new__(cls)
        g.n = int(n)
        g.edge_array = np.ascontiguousarray(arr, dtype=np.int32)
        g.edge_array.setflags(write=False)
        return g

    @property
    def m(self) -> int:
        return self.edge_array.shape[0]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, v in self.edge_array:
            yield int(u), int(v)

    @cached_property
    def _edge_keys(self) -> np.ndarray:
        e = self.edge_array.astype(np.int64)
        return e[:, 0] * max(self.n, 1) + e[:, 1]

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        lo, hi = (u, v) if u < v else (v, u)
        key = lo * max(self.n, 1) + hi
        i = np.searchsorted(self._edge_keys, key)
        return bool(i < self.m and self._edge_keys[i] == key)

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.bincount(self.edge_array.reshape(-1), minlength=self.n)

    def degree(self, v: int) -> int:
        return int(self.degrees[v])

    @cached_property
    def edge_cols(self) -> tuple[np.ndarray, np.ndarray]:
        """Contiguous copies of the endpoint columns (kernel-friendly)."""
        e = self.edge_array
        return np.ascontiguousarray(e[:, 0]), np.ascontiguousarray(e[:, 1])

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(indptr, indices, arc_eid): adjacency with edge ids per arc.

        Arc order per vertex follows the canonical edge order (deterministic
        but not sorted); `neighbors` sorts its slice on demand.
        """
        from . import _kernels
        eu, ev = self.edge_cols
        return _kernels.build_csr(self.n, eu, ev)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset, ...]:
        """Per-vertex frozensets; convenient for desk-scale set algebra."""
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edge_array:
            adj[u].add(int(v))
            adj[v].add(int(u))
        return tuple(frozenset(s) for s in adj)

    def neighbors(self, v: int) -> np.ndarray:
        indptr, indices, _ = self.csr
        return np.sort(indices[indptr[v]:indptr[v + 1]])

    def edge_set(self) -> frozenset:
        return frozenset((int(u), int(v)) for u, v in self.edge_array)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edge_array, other.edge_array)

    def __hash__(self) -> int:
        return hash((self.n, self.edge_array.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# builders


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    iu, iv = np.triu_indices(n, k=1)
    return Graph._from_canonical(n, np.stack([iu, iv], axis=1))


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


# ---------------------------------------------------------------------------
# composition / subgraphs


def compose(kind: str, g: Graph, h: Graph) -> Graph:
    """Disjoint union or join; h's vertices are relabeled to g.n..g.n+h.n-1."""
    if kind not in ("disjoint-union", "join"):
        raise ValueError(f"unknown composition kind: {kind!r}")
    n = g.n + h.n
    parts = [g.edge_array.astype(np.int64), h.edge_array.astype(np.int64) + g.n]
    if kind == "join":
        left = np.repeat(np.arange(g.n, dtype=np.int64), h.n)
        right = np.tile(np.arange(g.n, n, dtype=np.int64), g.n)
        parts.append(np.stack([left, right], axis=1))
    arr = np.concatenate(parts) if parts else np.empty((0, 2), np.int64)
    if arr.size:
        order = np.argsort(arr[:, 0] * max(n, 1) + arr[:, 1])
        arr = arr[order]
    return Graph._from_canonical(n, arr)


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by `vertices`, relabeled 0..k-1 preserving id order."""
    vs = np.unique(np.asarray(list(vertices), dtype=np.int64))
    if vs.size and (vs.min() < 0 or vs.max() >= g.n):
        raise ValueError(f"vertex id out of range 0..{g.n - 1}")
    keep = np.zeros(g.n, dtype=bool)
    keep[vs] = True
    e = g.edge_array
    mask = keep[e[:, 0]] & keep[e[:, 1]] if e.size else np.zeros(0, bool)
    sub = e[mask].astype(np.int64)
    relabeled = np.searchsorted(vs, sub) if sub.size else sub
    return Graph._from_canonical(int(vs.size), relabeled)


def complement(g: Graph) -> Graph:
    iu, iv = np.triu_indices(g.n, k=1)
    all_keys = iu.astype(np.int64) * max(g.n, 1) + iv
    missing = all_keys[~np.isin(all_keys, g._edge_keys)]
    n = max(g.n, 1)
    return Graph._from_canonical(g.n, np.stack([missing // n, missing % n], axis=1))


# ---------------------------------------------------------------------------
# edge-list format


def _parse_edge_list(text: str) -> Graph:
    n = m = None
    edges: list[tuple[int, int]] = []
    seen_edges = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2:
                raise ParseError("header must be two integers `n m`", lineno)
            try:
                n, m = int(fields[0]), int(fields[1])
            except ValueError:
                raise ParseError("header must be two integers `n m`", lineno) from None
            if n < 0 or m < 0:
                raise ParseError("header counts must be non-negative", lineno)
            continue
        if seen_edges >= m:
            raise ParseError(f"more than the {m} edge lines announced", lineno)
        if len(fields) != 2:
            raise ParseError("edge line must be two integers `u v`", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError("edge line must be two integers `u v`", lineno) from None
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range 0..{n - 1}", lineno)
        edges.append((u, v))
        seen_edges += 1
    if n is None:
        raise ParseError("missing header line `n m`")
    if seen_edges < m:
        raise ParseError(f"expected {m} edge lines, found {seen_edges}")
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# graph6 format (single-byte size prefix: n <= 62)


def _graph6_pair_order(n: int) -> tuple[np.ndarray, np.ndarray]:
    # upper triangle by columns: (0,1), (0,2), (1,2), (0,3), ...
    cols = np.concatenate([np.full(v, v) for v in range(1, n)]) if n > 1 else np.empty(0, np.int64)
    rows = np.concatenate([np.arange(v) for v in range(1, n)]) if n > 1 else np.empty(0, np.int64)
    return rows.astype(np.int64), cols.astype(np.int64)


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("graph6 output supports n <= 62 only")
    rows, cols = _graph6_pair_order(g.n)
    keys = rows * max(g.n, 1) + cols
    bits = np.isin(keys, g._edge_keys).astype(np.uint8)
    pad = (-len(bits)) % 6
    bits = np.concatenate([bits, np.zeros(pad, np.uint8)])
    out = [chr(g.n + 63)]
    weights = np.array([32, 16, 8, 4, 2, 1], np.uint8)
    for i in range(0, len(bits), 6):
        out.append(chr(int(np.dot(bits[i:i + 6], weights)) + 63))
    return "".join(out)


def _parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 input", 1)
    first = ord(s[0])
    if first == 126:
        raise ParseError("graph6 inputs with n > 62 are not supported", 1)
    if not 63 <= first <= 125:
        raise ParseError("invalid graph6 size byte", 1)
    n = first - 63
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    body = s[1:]
    if len(body) != nbytes:
        raise ParseError(f"graph6 body must be {nbytes} bytes, got {len(body)}", 1)
    bits: list[int] = []
    for ch in body:
        b = ord(ch) - 63
        if not 0 <= b < 64:
            raise ParseError("invalid graph6 data byte", 1)
        bits.extend((b >> k) & 1 for k in (5, 4, 3, 2, 1, 0))
    if any(bits[npairs:]):
        raise ParseError("non-zero padding bits in graph6 data", 1)
    rows, cols = _graph6_pair_order(n)
    chosen = np.flatnonzero(np.asarray(bits[:npairs], dtype=np.uint8))
    return Graph(n, [(int(rows[i]), int(cols[i])) for i in chosen])


def parse_graph(text: str, fmt: str = "edge-list") -> Graph:
    """Parse `text` in the given format ("edge-list" or "graph6")."""
    if fmt == "edge-list":
        return _parse_edge_list(text)
    if fmt == "graph6":
        return _parse_graph6(text)
    raise ValueError(f"unknown graph format: {fmt!r}")
