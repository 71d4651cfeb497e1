"""Probe block / probe complete recognition with certificates.

A graph G is a 2-probe block graph when two independent sets N1, N2 exist
such that adding edges inside N1 or inside N2 can turn G into a block graph
(and similarly "2-probe complete" for a complete target).  The partitioned
variants take N1, N2 as input.

Positive answers always come with a certificate: the partition and the
minimal embedding (exactly the forced edges).  Negative answers carry a
refutation telling which stage failed and why.

Partitioned verification uses the covering criterion: N1 and N2 must be
independent, and every non-adjacent vertex pair inside a common block
(every non-adjacent pair at all, for the complete target) must lie within
N1 or within N2.  Completing those pairs is then forced in any embedding,
and completing them always succeeds, so the criterion is exact and the
resulting embedding is edge-minimal.  Note that a clique block puts no
constraint on its vertices: its members may sit in either set or none.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Literal

import numpy as np

from . import _kernels
from .decomposition import BlockDecomposition, block_decomposition
from .graphs import Graph
from .structure import KxyzFailure, KxyzPartition, _block_kxyz_arrays, _kxyz_from_arrays, kxyz

__all__ = [
    "ProbePartition",
    "Embedding",
    "Refutation",
    "RecognitionOutcome",
    "ImpossibleBranch",
    "verify_partitioned",
    "enhanced_graph",
    "find_nonprobes",
    "recognize_2probe_block",
    "recognize_probe_block",
    "recognize_2probe_complete",
    "load_partition",
    "dump_partition",
]


def _vertex_array(vs) -> np.ndarray:
    if isinstance(vs, np.ndarray):
        return np.unique(vs.astype(np.int64))
    return np.unique(np.asarray(sorted(vs), dtype=np.int64))


class ProbePartition:
    """Non-probe sets of a recognition answer.

    n1 and n2 are independent sets in the host graph (a vertex may sit in
    both); everything else is a probe.  `n` is the host vertex count.
    Accepts any vertex iterables; the set views are materialized lazily so
    huge certificates stay cheap to produce.
    """

    def __init__(self, n1, n2, n: int):
        self._n1_array = _vertex_array(n1)
        self._n2_array = _vertex_array(n2)
        self.n = int(n)

    @cached_property
    def n1(self) -> frozenset:
        return frozenset(self._n1_array.tolist())

    @cached_property
    def n2(self) -> frozenset:
        return frozenset(self._n2_array.tolist())

    @property
    def probes(self) -> frozenset:
        return frozenset(range(self.n)) - self.n1 - self.n2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProbePartition):
            return NotImplemented
        return (self.n == other.n
                and np.array_equal(self._n1_array, other._n1_array)
                and np.array_equal(self._n2_array, other._n2_array))

    def __hash__(self) -> int:
        return hash((self.n, self._n1_array.tobytes(), self._n2_array.tobytes()))

    def __repr__(self) -> str:
        return f"ProbePartition(n1={set(self.n1) or '{}'}, n2={set(self.n2) or '{}'}, n={self.n})"


@dataclass(frozen=True, eq=False)
class Embedding:
    """A host graph plus added edges, all inside one of the non-probe sets."""

    host: Graph
    added_array: np.ndarray  # (k, 2) int32, canonical order

    @classmethod
    def from_pairs(cls, host: Graph, pairs: Iterable[tuple[int, int]]) -> "Embedding":
        arr = np.asarray(sorted(tuple(sorted(p)) for p in pairs), dtype=np.int32).reshape(-1, 2)
        return cls(host, arr)

    @cached_property
    def added(self) -> frozenset:
        return frozenset((int(u), int(v)) for u, v in self.added_array)

    @cached_property
    def result(self) -> Graph:
        merged = np.concatenate([self.host.edge_array, self.added_array])
        return Graph(self.host.n, [(int(u), int(v)) for u, v in merged])

    def __repr__(self) -> str:
        return f"Embedding(n={self.host.n}, added={self.added_array.shape[0]})"


@dataclass(frozen=True)
class Refutation:
    """Why recognition said no.

    stage: "dependent-sets" (pair = an adjacent pair inside set `side`),
    "block-structure" (block = failing block index or None for whole-graph
    checks, detail = the KxyzFailure), "impossible-branch" (tag, block,
    cut_vertex), "verification-failed" (pair = an uncovered non-adjacent
    pair), or "exhausted-search" for brute-force enumerations.
    """

    stage: str
    block: int | None = None
    tag: str | None = None
    cut_vertex: int | None = None
    pair: tuple[int, int] | None = None
    side: int | None = None
    detail: object = None

    def to_json(self) -> dict:
        out: dict = {"stage": self.stage}
        if self.block is not None:
            out["block"] = self.block
        if self.tag is not None:
            out["tag"] = self.tag
        if self.cut_vertex is not None:
            out["cut_vertex"] = self.cut_vertex
        if self.pair is not None:
            out["pair"] = list(self.pair)
        if self.side is not None:
            out["side"] = self.side
        if self.detail is not None:
            out["detail"] = repr(self.detail)
        return out


@dataclass(frozen=True)
class ImpossibleBranch:
    """A propagation state with no consistent extension (a firm no)."""

    tag: str
    block: int
    cut_vertex: int

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True, eq=False)
class RecognitionOutcome:
    verdict: Literal["yes", "no"]
    partition: ProbePartition | None = None
    embedding: Embedding | None = None
    refutation: Refutation | None = None
    timings: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.verdict == "yes"


FAIL_TAGS = {
    _kernels.FN_SATURATED: "side-saturated",
    _kernels.FN_ORIENTATION: "orientation-conflict",
}


def _as_flags(n: int, vs, what: str) -> np.ndarray:
    flags = np.zeros(n, dtype=np.uint8)
    if isinstance(vs, np.ndarray):
        if vs.size and (vs.min() < 0 or vs.max() >= n):
            raise ValueError(f"{what} contains a vertex outside 0..{n - 1}")
        flags[vs] = 1
        return flags
    for v in vs:
        if not 0 <= v < n:
            raise ValueError(f"{what} contains vertex {v}, outside 0..{n - 1}")
        flags[v] = 1
    return flags


# ---------------------------------------------------------------------------
# partitioned verification


def _verify_complete(g: Graph, in1: np.ndarray, in2: np.ndarray):
    """Covering check against the complete target, in vectorized numpy."""
    eu = g.edge_array[:, 0]
    ev = g.edge_array[:, 1]
    both1 = np.flatnonzero((in1[eu] == 1) & (in1[ev] == 1))
    if both1.size:
        e = int(both1[0])
        return _kernels.VF_DEPENDENT_N1, int(eu[e]), int(ev[e])
    both2 = np.flatnonzero((in2[eu] == 1) & (in2[ev] == 1))
    if both2.size:
        e = int(both2[0])
        return _kernels.VF_DEPENDENT_N2, int(eu[e]), int(ev[e])
    cls = in1.astype(np.int8) + 2 * in2.astype(np.int8)
    probes = np.flatnonzero(cls == 0)
    bad = probes[g.degrees[probes] != g.n - 1]
    if bad.size:
        u = int(bad[0])
        nbrs = set(int(w) for w in g.neighbors(u))
        w = min(v for v in range(g.n) if v != u and v not in nbrs)
        return _kernels.VF_UNCOVERED, u, w
    only1 = np.flatnonzero(cls == 1)
    only2 = np.flatnonzero(cls == 2)
    cross = int(np.count_nonzero(((cls[eu] == 1) & (cls[ev] == 2))
                                 | ((cls[eu] == 2) & (cls[ev] == 1))))
    if cross != only1.size * only2.size:
        s2 = set(int(v) for v in only2)
        for u in only1:
            missing = s2 - set(int(w) for w in g.neighbors(int(u))) - {int(u)}
            if missing:
                return _kernels.VF_UNCOVERED, int(u), min(missing)
        raise AssertionError("miscounted cross edges")
    return _kernels.VF_OK, -1, -1


def _all_nonadjacent_pairs(g: Graph) -> np.ndarray:
    out: list[tuple[int, int]] = []
    adj = g.neighbor_sets
    for u in range(g.n):
        out.extend((u, v) for v in range(u + 1, g.n) if v not in adj[u])
    return np.asarray(out, dtype=np.int32).reshape(-1, 2)


def verify_partitioned(g: Graph, n1: Iterable[int], n2: Iterable[int] = (),
                       target: str = "block") -> RecognitionOutcome:
    """Decide whether (g, n1, n2) admits an embedding into the target class.

    target "block": every non-adjacent pair inside a common block must lie
    within n1 or within n2 (and both sets must be independent); the
    certificate embedding completes each block.  target "complete": the
    same covering condition over all non-adjacent pairs.
    """
    if target not in ("block", "complete"):
        raise ValueError(f"unknown target: {target!r}")
    in1 = _as_flags(g.n, n1, "N1")
    in2 = _as_flags(g.n, n2, "N2")
    return _verify_flags(g, in1, in2, target)


_NO_DEGB = np.empty(0, np.int32)


def _verify_flags(g: Graph, in1: np.ndarray, in2: np.ndarray, target: str,
                  deg_b: np.ndarray = _NO_DEGB) -> RecognitionOutcome:
    if target == "complete":
        code, a, b = _verify_complete(g, in1, in2)
    else:
        bd = block_decomposition(g)
        if deg_b.shape[0] == 0:
            from .structure import _block_kxyz_arrays
            deg_b = _block_kxyz_arrays(bd)[6]  # cached per decomposition
        indptr, indices, _ = g.csr
        eu, ev = g.edge_cols
        code, a, b = _kernels.verify_block_kernel(
            g.n, eu, ev,
            bd.edge_block, bd.n_blocks, bd.block_ptr, bd.block_verts,
            indptr, indices, in1, in2, deg_b)
        code, a, b = int(code), int(a), int(b)
    if code == _kernels.VF_DEPENDENT_N1:
        refu = Refutation(stage="dependent-sets", pair=(a, b), side=1)
    elif code == _kernels.VF_DEPENDENT_N2:
        refu = Refutation(stage="dependent-sets", pair=(a, b), side=2)
    elif code == _kernels.VF_UNCOVERED:
        refu = Refutation(stage="verification-failed", pair=(a, b))
    else:
        refu = None
    if refu is not None:
        return RecognitionOutcome(verdict="no", refutation=refu)
    part = ProbePartition(n1=np.flatnonzero(in1), n2=np.flatnonzero(in2), n=g.n)
    if target == "complete":
        added = _all_nonadjacent_pairs(g)
    else:
        bd = block_decomposition(g)
        indptr, indices, _ = g.csr
        added = _kernels.block_fill_pairs(
            bd.n_blocks, bd.block_ptr, bd.block_verts, bd.block_edge_counts,
            indptr, indices, g.n)
    return RecognitionOutcome(verdict="yes", partition=part,
                              embedding=Embedding(g, added))


# ---------------------------------------------------------------------------
# enhanced graph


def enhanced_graph(g: Graph, n1: Iterable[int], n2: Iterable[int] = (),
                   mode: str = "diamond-c4") -> Embedding:
    """Add exactly the forced pairs inside the given independent sets.

    A non-adjacent pair {x, y} inside one set is forced when x and y are the
    two degree-2 vertices of an induced diamond (mode "diamond") or of an
    induced diamond or 4-cycle (mode "diamond-c4").  Equivalently: x and y
    share at least two common neighbors, at least one adjacent pair of them
    for the diamond-only mode.  Enumeration is per in-set vertex pair and is
    meant for desk-scale hosts.
    """
    if mode not in ("diamond", "diamond-c4"):
        raise ValueError(f"unknown enhancement mode: {mode!r}")
    sets = [sorted(set(n1)), sorted(set(n2))]
    adj = g.neighbor_sets
    for side in sets:
        for v in side:
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
        for i, x in enumerate(side):
            for y in side[i + 1:]:
                if y in adj[x]:
                    raise ValueError(f"set is not independent: edge {{{x}, {y}}}")
    added: set[tuple[int, int]] = set()
    for side in sets:
        for i, x in enumerate(side):
            for y in side[i + 1:]:
                common = adj[x] & adj[y]
                if len(common) < 2:
                    continue
                if mode == "diamond-c4":
                    added.add((x, y))
                elif any(adj[a] & common for a in common):
                    added.add((x, y))
    return Embedding.from_pairs(g, added)


# ---------------------------------------------------------------------------
# non-probe propagation


_LABEL_BY_NAME = {"k": _kernels.LAB_K, "x": _kernels.LAB_X,
                  "y": _kernels.LAB_Y, "z": _kernels.LAB_Z}


def _labels_from_structures(bd: BlockDecomposition,
                            structures) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Turn per-block KxyzPartition objects into kernel label arrays."""
    if len(structures) != bd.n_blocks:
        raise ValueError(f"need one structure per block "
                         f"({bd.n_blocks}), got {len(structures)}")
    vlabel = np.zeros(int(bd.block_ptr[-1]), dtype=np.int8)
    counts = np.zeros((bd.n_blocks, 4), dtype=np.int32)
    is_clique = np.zeros(bd.n_blocks, dtype=np.uint8)
    for b, st in enumerate(structures):
        if not isinstance(st, KxyzPartition):
            raise ValueError(f"block {b} has no valid structure: {st!r}")
        s0, s1 = int(bd.block_ptr[b]), int(bd.block_ptr[b + 1])
        verts = bd.block_verts[s0:s1]
        members = {**{v: "k" for v in st.k}, **{v: "x" for v in st.x},
                   **{v: "y" for v in st.y}, **{v: "z" for v in st.z}}
        if len(members) != s1 - s0 or set(members) != {int(v) for v in verts}:
            raise ValueError(f"structure of block {b} does not cover its vertices")
        for s in range(s0, s1):
            lab = _LABEL_BY_NAME[members[int(bd.block_verts[s])]]
            vlabel[s] = lab
            counts[b, lab] += 1
        if counts[b, _kernels.LAB_K] == s1 - s0:
            is_clique[b] = 1
    return vlabel, counts, is_clique


def _run_find_nonprobes(g: Graph, bd: BlockDecomposition, vlabel, counts, is_clique):
    eu, ev = g.edge_cols
    code, b, v, in1, in2 = _kernels.find_nonprobes_kernel(
        g.n, eu, ev,
        bd.n_blocks, bd.block_ptr, bd.block_verts, vlabel, counts, is_clique)
    if int(code) != _kernels.FN_OK:
        return ImpossibleBranch(tag=FAIL_TAGS[int(code)], block=int(b), cut_vertex=int(v))
    return in1, in2


def find_nonprobes(g: Graph, bd: BlockDecomposition | None = None,
                   structures=None) -> ProbePartition | ImpossibleBranch:
    """Candidate non-probe sets from the blocks' structure partitions.

    Each non-clique block must send its whole X u Z bundle into one
    candidate set and Y u Z into the other (with Z landing in both when X
    and Y are non-empty), leaving one free orientation bit per block.
    Independence couples those bits along edges; the kernel solves the
    resulting parity constraints and anchors every free component so the
    lowest block sends X u Z to the first set.  The result is a candidate
    partition only (verification is separate); an ImpossibleBranch - a
    doubly-committed vertex with a committed neighbor, or an odd cycle of
    orientation constraints - is already a firm "no" for the whole graph.

    The tag carries the conflicting block in `block` and the conflicting
    vertex in `cut_vertex`.
    """
    if bd is None:
        bd = block_decomposition(g)
    if structures is None:
        from .structure import block_structures
        structures = block_structures(g, bd)
    vlabel, counts, is_clique = _labels_from_structures(bd, structures)
    res = _run_find_nonprobes(g, bd, vlabel, counts, is_clique)
    if isinstance(res, ImpossibleBranch):
        return res
    in1, in2 = res
    return ProbePartition(
        n1=frozenset(int(x) for x in np.flatnonzero(in1)),
        n2=frozenset(int(x) for x in np.flatnonzero(in2)),
        n=g.n)


# ---------------------------------------------------------------------------
# recognizers


def recognize_2probe_block(g: Graph) -> RecognitionOutcome:
    """Four-stage linear-time recognition of 2-probe block graphs.

    1. block decomposition; 2. per-block (K, X, Y, Z) classification;
    3. candidate non-probe sets by orienting every block's bundles under
    independence constraints; 4. partitioned verification of the candidate.
    Rejection at stage 3 is sound: the constraints are necessary for any
    valid partition, so a true 2-probe block graph never trips them.
    """
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    bd = block_decomposition(g)
    t1 = time.perf_counter()
    timings["decompose"] = (t1 - t0) * 1e3
    vlabel, status, counts, is_clique, wa, wb, deg_b = _block_kxyz_arrays(bd)
    t2 = time.perf_counter()
    timings["block-structure"] = (t2 - t1) * 1e3
    bad = np.flatnonzero(status != _kernels.KXYZ_OK)
    if bad.size:
        b = int(bad[0])
        s0, s1 = int(bd.block_ptr[b]), int(bd.block_ptr[b + 1])
        failure = _kxyz_from_arrays(g, bd.block_verts[s0:s1], vlabel[s0:s1],
                                    int(status[b]), int(wa[b]), int(wb[b]))
        return RecognitionOutcome(
            verdict="no", timings=timings,
            refutation=Refutation(stage="block-structure", block=b, detail=failure))
    res = _run_find_nonprobes(g, bd, vlabel, counts, is_clique)
    t3 = time.perf_counter()
    timings["find-nonprobes"] = (t3 - t2) * 1e3
    if isinstance(res, ImpossibleBranch):
        return RecognitionOutcome(
            verdict="no", timings=timings,
            refutation=Refutation(stage="impossible-branch", tag=res.tag,
                                  block=res.block, cut_vertex=res.cut_vertex))
    in1, in2 = res
    outcome = _verify_flags(g, in1, in2, "block", deg_b)
    t4 = time.perf_counter()
    timings["verify"] = (t4 - t3) * 1e3
    return RecognitionOutcome(verdict=outcome.verdict, partition=outcome.partition,
                              embedding=outcome.embedding,
                              refutation=outcome.refutation, timings=timings)


def recognize_probe_block(g: Graph) -> RecognitionOutcome:
    """1-probe recognition: accept iff the 2-probe pass leaves N2 empty.

    On a true probe block graph the propagation never commits anything to
    the second set, so a non-empty N2 means "no"; re-verifying with just N1
    then yields a concrete refutation (or, defensively, a certificate).
    """
    out = recognize_2probe_block(g)
    if not out:
        return out
    assert out.partition is not None
    if not out.partition.n2:
        return out
    single = verify_partitioned(g, sorted(out.partition.n1), (), target="block")
    return RecognitionOutcome(verdict=single.verdict, partition=single.partition,
                              embedding=single.embedding,
                              refutation=single.refutation, timings=out.timings)


def recognize_2probe_complete(g: Graph) -> RecognitionOutcome:
    """2-probe complete recognition via the (K, X, Y, Z) decomposition."""
    t0 = time.perf_counter()
    res = kxyz(g)
    timings = {"kxyz": (time.perf_counter() - t0) * 1e3}
    if isinstance(res, KxyzFailure):
        return RecognitionOutcome(
            verdict="no", timings=timings,
            refutation=Refutation(stage="block-structure", detail=res))
    out = verify_partitioned(g, sorted(res.x | res.z), sorted(res.y | res.z),
                             target="complete")
    assert out.verdict == "yes"
    return RecognitionOutcome(verdict="yes", partition=out.partition,
                              embedding=out.embedding, timings=timings)


# ---------------------------------------------------------------------------
# partition files


def load_partition(text: str) -> tuple[frozenset, frozenset]:
    """JSON object with arrays "N1" and "N2"; a missing "N2" means empty."""
    data = json.loads(text)
    if not isinstance(data, dict) or "N1" not in data:
        raise ValueError('partition file must be a JSON object with key "N1"')
    n1 = data["N1"]
    n2 = data.get("N2", [])
    if not isinstance(n1, list) or not isinstance(n2, list):
        raise ValueError('"N1" and "N2" must be arrays of vertex ids')
    return frozenset(int(v) for v in n1), frozenset(int(v) for v in n2)


def dump_partition(n1: Iterable[int], n2: Iterable[int] = ()) -> str:
    return json.dumps({"N1": sorted(set(n1)), "N2": sorted(set(n2))}) + "\n"
