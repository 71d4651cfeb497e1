"""Blocks, cut vertices and the end-block elimination order.

A block is a maximal 2-connected subgraph, a bridge, or an isolated vertex.
`block_decomposition` runs a lowpoint DFS once and exposes the result both
as flat arrays (consumed by the recognition pipeline) and as Python views
(blocks as vertex tuples, the cut-vertex set, the block-cut incidence).

Block ordering is deterministic: blocks are sorted by (smallest contained
vertex, size), ties broken by the stable DFS discovery order, so runs are
reproducible and certificates stable.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from . import _kernels
from .graphs import Graph

__all__ = ["BlockDecomposition", "block_decomposition", "peel_order"]


class BlockDecomposition:
    """Immutable decomposition view over a graph's blocks."""

    def __init__(self, graph: Graph):
        # holds plain arrays only (shared with the graph when possible), so a
        # graph and its cached decomposition never form a reference cycle
        self.n, self.m = graph.n, graph.m
        self._edge_keys = graph._edge_keys
        self.edge_cols = graph.edge_cols
        indptr, indices, arc_eid = graph.csr
        raw_edge_block, nbe = _kernels.biconnect(self.n, self.m, indptr, indices, arc_eid)
        iso = np.flatnonzero(graph.degrees == 0).astype(np.int32)
        self.n_blocks = int(nbe) + int(iso.size)
        (self.edge_block, self.block_ptr, self.block_verts,
         self.v_ptr, self.v_blocks, cut) = _kernels.block_incidence(
            self.n, indptr, indices, arc_eid, raw_edge_block, int(nbe), iso)
        self.cut_flags = cut.astype(bool)
        self.block_edge_counts = (np.bincount(self.edge_block, minlength=self.n_blocks)
                                  if self.m else np.zeros(self.n_blocks, np.int64))

    # -- array-level helpers used by the recognition pipeline ---------------

    @cached_property
    def edges_by_block(self) -> tuple[np.ndarray, np.ndarray]:
        """(eb_ptr, eb_order): edge ids grouped by block id."""
        if self.m == 0:
            return np.zeros(self.n_blocks + 1, np.int32), np.empty(0, np.int32)
        return _kernels.counting_sort(self.edge_block, self.n_blocks)

    @cached_property
    def peel(self) -> tuple[np.ndarray, np.ndarray]:
        """(order, ocut) arrays from the end-block elimination kernel."""
        order, ocut, k = _kernels.peel(
            self.n, self.n_blocks, self.block_ptr, self.block_verts,
            self.v_ptr, self.v_blocks)
        if k != self.n_blocks:
            raise AssertionError("peeling failed to consume every block")
        return order, ocut

    def block_size(self, b: int) -> int:
        return int(self.block_ptr[b + 1] - self.block_ptr[b])

    def block(self, b: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self.block_verts[self.block_ptr[b]:self.block_ptr[b + 1]])

    # -- object-level views --------------------------------------------------

    @cached_property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.block(b) for b in range(self.n_blocks))

    @cached_property
    def cut_vertices(self) -> frozenset:
        return frozenset(int(v) for v in np.flatnonzero(self.cut_flags))

    @cached_property
    def tree(self) -> dict[int, tuple[int, ...]]:
        """Block-cut incidence: cut vertex -> blocks containing it."""
        out: dict[int, tuple[int, ...]] = {}
        for v in sorted(self.cut_vertices):
            out[v] = tuple(sorted(int(b) for b in self.v_blocks[self.v_ptr[v]:self.v_ptr[v + 1]]))
        return out

    def block_of_edge(self, u: int, v: int) -> int:
        """Index of the unique block containing edge {u, v}."""
        lo, hi = (u, v) if u < v else (v, u)
        key = lo * max(self.n, 1) + hi
        i = int(np.searchsorted(self._edge_keys, key))
        if i >= self.m or self._edge_keys[i] != key:
            raise KeyError(f"no edge {{{u}, {v}}}")
        return int(self.edge_block[i])

    def is_cut_vertex(self, v: int) -> bool:
        return bool(self.cut_flags[v])

    def __repr__(self) -> str:
        return f"BlockDecomposition(n_blocks={self.n_blocks}, cut_vertices={len(self.cut_vertices)})"


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Blocks and cut vertices of g (cached on the graph)."""
    bd = getattr(g, "_bd_cache", None)
    if bd is None:
        bd = BlockDecomposition(g)
        g._bd_cache = bd
    return bd


def peel_order(bd: BlockDecomposition) -> list[tuple[int, int | None]]:
    """End-block elimination order as (block index, residual cut vertex) pairs.

    Each listed block is an end-block of the graph left after removing the
    interiors of the blocks before it; the paired vertex is its residual cut
    vertex, or None for the last block of its component.  Ties between
    eligible end-blocks go to the lowest block index.
    """
    order, ocut = bd.peel
    return [(int(b), None if c < 0 else int(c)) for b, c in zip(order, ocut)]
