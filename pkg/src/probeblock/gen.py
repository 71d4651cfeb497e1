"""Deterministic instance generators.

Random block graphs are trees of cliques; planted probe instances start
from such an embedding and delete the edges inside sampled vertex sets, so
the deleted sets certify the instance by construction.  All randomness
flows from numpy's PCG64 bit generator seeded with `GenSpec.seed`, with a
fixed draw order, so identical specs reproduce identical instances
bit-for-bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph
from .probe import ProbePartition

__all__ = ["GenSpec", "random_block_graph", "plant", "random_graph"]


@dataclass(frozen=True)
class GenSpec:
    """Generator knobs.

    n: vertex count.  seed: 64-bit PCG64 seed.  max_block: largest clique
    size per block (>= 2).  blocks_per_cut: attachment bias; higher values
    reuse earlier glue vertices more often, so cut vertices accumulate more
    blocks.  draft_frac: fraction of block slots drafted into the planted
    non-probe sets.
    """

    n: int
    seed: int
    max_block: int = 6
    blocks_per_cut: float = 2.0
    draft_frac: float = 0.5

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if self.max_block < 2:
            raise ValueError("max_block must be at least 2")
        if self.blocks_per_cut < 1.0:
            raise ValueError("blocks_per_cut must be at least 1")
        if not 0.0 <= self.draft_frac <= 1.0:
            raise ValueError("draft_frac must be in [0, 1]")


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _tree_of_cliques(spec: GenSpec, rng: np.random.Generator):
    """Block skeleton: per block a glue vertex (-1 for the first) and a
    contiguous run of fresh vertices."""
    n = spec.n
    if n == 0:
        return []
    if n == 1:
        return [(-1, 0, 1)]
    first = int(rng.integers(2, spec.max_block + 1))
    first = min(first, n)
    blocks = [(-1, 0, first)]  # (glue, fresh_start, fresh_count)
    used = first
    p_reuse = 1.0 - 1.0 / spec.blocks_per_cut
    glues: list[int] = []
    while used < n:
        size = int(rng.integers(2, spec.max_block + 1))
        take = min(size - 1, n - used)
        coin = float(rng.random())
        pick = float(rng.random())
        if glues and coin < p_reuse:
            glue = glues[int(pick * len(glues))]
        else:
            glue = int(pick * used)
        blocks.append((glue, used, take))
        glues.append(glue)
        used += take
    return blocks


def _clique_edges(members: np.ndarray) -> np.ndarray:
    k = members.shape[0]
    iu, iv = np.triu_indices(k, k=1)
    return np.stack([members[iu], members[iv]], axis=1)


def _edges_of_blocks(blocks) -> np.ndarray:
    chunks = []
    for glue, start, cnt in blocks:
        members = np.arange(start, start + cnt, dtype=np.int64)
        if glue >= 0:
            members = np.concatenate([[glue], members])
        if members.shape[0] >= 2:
            chunks.append(_clique_edges(members))
    if not chunks:
        return np.empty((0, 2), dtype=np.int64)
    return np.concatenate(chunks)


def random_block_graph(spec: GenSpec) -> Graph:
    """A random tree of cliques on spec.n vertices."""
    rng = _rng(spec.seed)
    blocks = _tree_of_cliques(spec, rng)
    edges = _edges_of_blocks(blocks)
    n = max(spec.n, 1) if spec.n else 0
    if edges.size:
        order = np.argsort(edges[:, 0] * n + edges[:, 1])
        edges = edges[order]
    return Graph._from_canonical(spec.n, edges)


def plant(k: int, spec: GenSpec) -> tuple[Graph, ProbePartition]:
    """A guaranteed k-probe block instance with its certificate.

    Builds a random block graph, drafts per-block vertex sets S1 (and S2
    when k = 2), and deletes every edge lying inside S1 or inside S2.  The
    surviving graph together with (S1, S2) passes partitioned verification
    by construction: the deleted sets are independent, and any non-adjacent
    pair inside a block of the survivor was a deleted clique edge.
    """
    if k not in (1, 2):
        raise ValueError("k must be 1 or 2")
    rng = _rng(spec.seed)
    blocks = _tree_of_cliques(spec, rng)
    edges = _edges_of_blocks(blocks)
    in1 = np.zeros(max(spec.n, 1), dtype=bool)
    in2 = np.zeros(max(spec.n, 1), dtype=bool)
    for glue, start, cnt in blocks:
        size = cnt + (1 if glue >= 0 else 0)
        draws = rng.random(size)
        members = np.arange(start, start + cnt, dtype=np.int64)
        if glue >= 0:
            members = np.concatenate([[glue], members])
        if k == 1:
            in1[members[draws < spec.draft_frac]] = True
        else:
            in1[members[draws < spec.draft_frac / 2]] = True
            in2[members[(draws >= spec.draft_frac / 2) & (draws < spec.draft_frac)]] = True
    if edges.size:
        keep = ~((in1[edges[:, 0]] & in1[edges[:, 1]])
                 | (in2[edges[:, 0]] & in2[edges[:, 1]]))
        edges = edges[keep]
        n = max(spec.n, 1)
        order = np.argsort(edges[:, 0] * n + edges[:, 1])
        edges = edges[order]
    g = Graph._from_canonical(spec.n, edges)
    part = ProbePartition(
        n1=frozenset(int(v) for v in np.flatnonzero(in1[:spec.n])),
        n2=frozenset(int(v) for v in np.flatnonzero(in2[:spec.n])),
        n=spec.n)
    return g, part


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p): every pair independently an edge with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be in [0, 1]")
    if n < 0:
        raise ValueError("n must be non-negative")
    rng = _rng(seed)
    npairs = n * (n - 1) // 2
    if npairs == 0 or p == 0.0:
        return Graph(n)
    if npairs <= 1 << 22:
        iu, iv = np.triu_indices(n, k=1)
        mask = rng.random(npairs) < p
        edges = np.stack([iu[mask], iv[mask]], axis=1).astype(np.int64)
    else:
        # geometric skipping through the flattened upper triangle
        picks: list[int] = []
        pos = -1
        while True:
            gap = int(rng.geometric(p))
            pos += gap
            if pos >= npairs:
                break
            picks.append(pos)
        idx = np.asarray(picks, dtype=np.int64)
        # invert the row-major flat index over the upper triangle
        rows = np.searchsorted(np.cumsum(np.arange(n - 1, 0, -1)), idx, side="right")
        offs = idx - np.concatenate([[0], np.cumsum(np.arange(n - 1, 0, -1))])[rows]
        edges = np.stack([rows, rows + 1 + offs], axis=1)
    return Graph._from_canonical(n, edges)
