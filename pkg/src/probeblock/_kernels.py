"""JIT-compiled array kernels for the linear-time recognition pipeline.

Everything here works on flat numpy arrays (CSR adjacency, per-block CSR
slices) so the whole recognition path runs at native speed; the Python
wrappers in `decomposition`, `structure` and `probe` own all object-level
semantics.  Kernels are deterministic: adjacency is sorted, roots and blocks
are visited in ascending order, and every tie-break is by lowest id.

Compiled code is cached on disk (`cache=True`), so only the first call in a
fresh environment pays the JIT cost.
"""

from __future__ import annotations

import numpy as np
from numba import njit

NIL = np.int32(-1)

# per-block vertex labels
LAB_K = 0  # universal inside the block
LAB_X = 1  # one side of the cross-joined independent part
LAB_Y = 2  # other side
LAB_Z = 3  # isolated after removing the universal vertices

# kxyz failure codes
KXYZ_OK = 0
KXYZ_TWO_COMPONENTS = 1
KXYZ_ODD_CYCLE = 2
KXYZ_MISSING_CROSS = 3

# find_nonprobes failure codes -> tags (see probe.FAIL_TAGS)
FN_OK = 0
FN_SATURATED = 1     # doubly-committed vertex next to a committed one
FN_ORIENTATION = 2   # odd cycle of orientation constraints

# verify failure codes
VF_OK = 0
VF_DEPENDENT_N1 = 1
VF_DEPENDENT_N2 = 2
VF_UNCOVERED = 3


@njit(cache=True)
def counting_sort(keys, nkeys):
    """Stable counting sort; (ptr, order) group positions by key value."""
    m = keys.shape[0]
    ptr = np.zeros(nkeys + 1, np.int32)
    for i in range(m):
        ptr[keys[i] + 1] += 1
    for k in range(nkeys):
        ptr[k + 1] += ptr[k]
    fill = ptr.copy()
    order = np.empty(m, np.int32)
    for i in range(m):
        k = keys[i]
        order[fill[k]] = i
        fill[k] += 1
    return ptr, order


@njit(cache=True)
def build_csr(n, eu, ev):
    """Adjacency in CSR form with per-arc edge ids, one counting pass.

    Arcs of a vertex appear in canonical edge order (sorted by the far end
    for one direction, by edge rank for the other), which is deterministic;
    callers needing ascending neighbors sort the slice themselves.
    """
    m = eu.shape[0]
    indptr = np.zeros(n + 1, np.int32)
    for e in range(m):
        indptr[eu[e] + 1] += 1
        indptr[ev[e] + 1] += 1
    for v in range(n):
        indptr[v + 1] += indptr[v]
    indices = np.empty(2 * m, np.int32)
    arc_eid = np.empty(2 * m, np.int32)
    fill = indptr.copy()
    for e in range(m):
        p = fill[eu[e]]
        indices[p] = ev[e]
        arc_eid[p] = e
        fill[eu[e]] = p + 1
        p = fill[ev[e]]
        indices[p] = eu[e]
        arc_eid[p] = e
        fill[ev[e]] = p + 1
    return indptr, indices, arc_eid


@njit(cache=True)
def biconnect(n, m, indptr, indices, arc_eid):
    """Assign every edge to its block (iterative lowpoint DFS).

    Returns (edge_block, n_blocks); isolated vertices carry no edges and are
    handled by the caller.  Block ids appear in DFS pop order and are
    deterministic for sorted adjacency.
    """
    disc = np.full(n, NIL, np.int32)
    low = np.empty(n, np.int32)
    parent_eid = np.full(n, NIL, np.int32)
    stack_v = np.empty(n if n > 0 else 1, np.int32)
    stack_ai = np.empty(n if n > 0 else 1, np.int32)
    estack = np.empty(m if m > 0 else 1, np.int32)
    edge_block = np.full(m, NIL, np.int32)
    timer = 0
    nb = 0
    for root in range(n):
        if disc[root] != NIL or indptr[root] == indptr[root + 1]:
            continue
        sp = 0
        esp = 0
        stack_v[0] = root
        stack_ai[0] = indptr[root]
        disc[root] = timer
        low[root] = timer
        timer += 1
        while sp >= 0:
            v = stack_v[sp]
            i = stack_ai[sp]
            if i < indptr[v + 1]:
                stack_ai[sp] = i + 1
                w = indices[i]
                eid = arc_eid[i]
                if disc[w] == NIL:
                    estack[esp] = eid
                    esp += 1
                    parent_eid[w] = eid
                    disc[w] = timer
                    low[w] = timer
                    timer += 1
                    sp += 1
                    stack_v[sp] = w
                    stack_ai[sp] = indptr[w]
                elif eid != parent_eid[v] and disc[w] < disc[v]:
                    estack[esp] = eid
                    esp += 1
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                sp -= 1
                if sp >= 0:
                    u = stack_v[sp]
                    if low[v] < low[u]:
                        low[u] = low[v]
                    if low[v] >= disc[u]:
                        pe = parent_eid[v]
                        while True:
                            e = estack[esp - 1]
                            esp -= 1
                            edge_block[e] = nb
                            if e == pe:
                                break
                        nb += 1
    return edge_block, nb


@njit(cache=True)
def block_incidence(n, indptr, indices, arc_eid, edge_block, nbe, iso):
    """Deterministic block-vertex incidence from raw DFS block ids.

    Isolated vertices become singleton blocks after the edge blocks.  Blocks
    are relabeled by (smallest contained vertex, size), ties keeping the DFS
    discovery order, and every output is grouped by linear counting passes:

    returns (edge_block, block_ptr, block_verts, v_ptr, v_blocks, cut_flags)
    with block_verts ascending within each block; v_blocks groups each
    vertex's blocks in arc order (deterministic, not sorted).
    """
    nb = nbe + iso.shape[0]
    stamp = np.full(nb, -1, np.int32)
    narcs = indices.shape[0]
    pair_v = np.empty(narcs + iso.shape[0], np.int32)  # capacity bound
    pair_b = np.empty(narcs + iso.shape[0], np.int32)
    v_ptr = np.zeros(n + 1, np.int32)
    sizes = np.zeros(nb, np.int32)
    minv = np.full(nb, np.int32(n), np.int32)
    k = 0
    iso_at = 0
    for v in range(n):
        if iso_at < iso.shape[0] and iso[iso_at] == v:
            b = nbe + iso_at
            pair_v[k] = v
            pair_b[k] = b
            sizes[b] += 1
            if v < minv[b]:
                minv[b] = v
            k += 1
            iso_at += 1
        for i in range(indptr[v], indptr[v + 1]):
            b = edge_block[arc_eid[i]]
            if stamp[b] != v:
                stamp[b] = v
                pair_v[k] = v
                pair_b[k] = b
                sizes[b] += 1
                if v < minv[b]:
                    minv[b] = v
                k += 1
        v_ptr[v + 1] = k
    total = k
    # radix over blocks: size first, then smallest vertex (stable on DFS id)
    _, by_size = counting_sort(sizes, n + 1)
    minv_in_size_order = np.empty(nb, np.int32)
    for j in range(nb):
        minv_in_size_order[j] = minv[by_size[j]]
    _, by_minv = counting_sort(minv_in_size_order, n)
    rank = np.empty(nb, np.int32)
    for j in range(nb):
        rank[by_size[by_minv[j]]] = j
    new_edge_block = np.empty(edge_block.shape[0], np.int32)
    for e in range(edge_block.shape[0]):
        new_edge_block[e] = rank[edge_block[e]]
    for t in range(total):
        pair_b[t] = rank[pair_b[t]]
    v_blocks = np.ascontiguousarray(pair_b[:total])
    block_ptr, order2 = counting_sort(v_blocks, nb)
    block_verts = np.empty(total, np.int32)
    for t in range(total):
        block_verts[t] = pair_v[order2[t]]
    cut_flags = np.zeros(n, np.uint8)
    for v in range(n):
        if v_ptr[v + 1] - v_ptr[v] >= 2:
            cut_flags[v] = 1
    return new_edge_block, block_ptr, block_verts, v_ptr, v_blocks, cut_flags


@njit(cache=True)
def _slot_of(block_verts, s0, s1, v):
    """Binary search for v among a block's sorted vertex slots."""
    lo, hi = s0, s1
    while lo < hi:
        mid = (lo + hi) // 2
        if block_verts[mid] < v:
            lo = mid + 1
        else:
            hi = mid
    return lo


@njit(cache=True)
def kxyz_blocks(nb, block_ptr, block_verts, eb_ptr, eb_order, eu, ev,
                max_bsize, max_bedges):
    """Classify each block as a universal/cross-joined/isolated partition.

    For every block B: K = vertices universal in B, Z = isolated vertices of
    B - K, and the rest must form at most one connected component that is
    complete bipartite (parts X and Y, X holding the smallest vertex id).

    Returns per-slot labels, per-block status (0 ok, failure code otherwise),
    per-block K/X/Y/Z counts, a clique flag, a witness vertex pair for each
    failed block, and the per-slot within-block degrees (reused downstream).
    """
    total_slots = block_ptr[nb]
    vlabel = np.zeros(total_slots, np.int8)
    deg_b = np.zeros(total_slots, np.int32)
    status = np.zeros(nb, np.int8)
    counts = np.zeros((nb, 4), np.int32)
    is_clique = np.zeros(nb, np.uint8)
    wit_a = np.full(nb, NIL, np.int32)
    wit_b = np.full(nb, NIL, np.int32)

    # scratch reused across blocks
    ldeg = np.zeros(max_bsize + 1, np.int32)
    lptr = np.zeros(max_bsize + 1, np.int32)
    ladj = np.zeros(2 * max_bedges + 2, np.int32)
    color = np.full(max_bsize if max_bsize > 0 else 1, np.int8(-1))
    queue = np.empty(max_bsize if max_bsize > 0 else 1, np.int32)

    # within-block degrees
    for b in range(nb):
        s0, s1 = block_ptr[b], block_ptr[b + 1]
        for t in range(eb_ptr[b], eb_ptr[b + 1]):
            e = eb_order[t]
            deg_b[_slot_of(block_verts, s0, s1, eu[e])] += 1
            deg_b[_slot_of(block_verts, s0, s1, ev[e])] += 1

    for b in range(nb):
        s0, s1 = block_ptr[b], block_ptr[b + 1]
        size = s1 - s0
        nk = 0
        for s in range(s0, s1):
            if deg_b[s] == size - 1:
                vlabel[s] = LAB_K
                nk += 1
            else:
                vlabel[s] = LAB_Z  # provisional; refined below
        counts[b, LAB_K] = nk
        if nk == size:
            is_clique[b] = 1
            continue
        nz = 0
        nr = 0
        for s in range(s0, s1):
            if vlabel[s] != LAB_K:
                if deg_b[s] - nk == 0:
                    nz += 1
                else:
                    vlabel[s] = np.int8(4)  # unresolved rest
                    nr += 1
        counts[b, LAB_Z] = nz
        if nr == 0:
            continue

        # local adjacency among the unresolved rest
        for i in range(size + 1):
            ldeg[i] = 0
        ne = 0
        for t in range(eb_ptr[b], eb_ptr[b + 1]):
            e = eb_order[t]
            su = _slot_of(block_verts, s0, s1, eu[e]) - s0
            sv = _slot_of(block_verts, s0, s1, ev[e]) - s0
            if vlabel[s0 + su] == 4 and vlabel[s0 + sv] == 4:
                ldeg[su] += 1
                ldeg[sv] += 1
                ne += 1
        lptr[0] = 0
        for i in range(size):
            lptr[i + 1] = lptr[i] + ldeg[i]
            ldeg[i] = 0
        for t in range(eb_ptr[b], eb_ptr[b + 1]):
            e = eb_order[t]
            su = _slot_of(block_verts, s0, s1, eu[e]) - s0
            sv = _slot_of(block_verts, s0, s1, ev[e]) - s0
            if vlabel[s0 + su] == 4 and vlabel[s0 + sv] == 4:
                ladj[lptr[su] + ldeg[su]] = sv
                ldeg[su] += 1
                ladj[lptr[sv] + ldeg[sv]] = su
                ldeg[sv] += 1

        # two-color by BFS from the smallest unresolved vertex
        for i in range(size):
            color[i] = -1
        seed = -1
        for i in range(size):
            if vlabel[s0 + i] == 4:
                seed = i
                break
        color[seed] = 0
        queue[0] = seed
        qh, qt = 0, 1
        reached = 1
        failed = False
        while qh < qt and not failed:
            cur = queue[qh]
            qh += 1
            for t in range(lptr[cur], lptr[cur] + ldeg[cur]):
                nxt = ladj[t]
                if color[nxt] == -1:
                    color[nxt] = 1 - color[cur]
                    queue[qt] = nxt
                    qt += 1
                    reached += 1
                elif color[nxt] == color[cur]:
                    status[b] = KXYZ_ODD_CYCLE
                    wit_a[b] = block_verts[s0 + cur]
                    wit_b[b] = block_verts[s0 + nxt]
                    failed = True
                    break
        if failed:
            continue
        if reached < nr:
            status[b] = KXYZ_TWO_COMPONENTS
            other = -1
            for i in range(size):
                if vlabel[s0 + i] == 4 and color[i] == -1:
                    other = i
                    break
            wit_a[b] = block_verts[s0 + seed]
            wit_b[b] = block_verts[s0 + other]
            continue
        nx = 0
        ny = 0
        for i in range(size):
            if vlabel[s0 + i] == 4:
                if color[i] == 0:
                    vlabel[s0 + i] = LAB_X
                    nx += 1
                else:
                    vlabel[s0 + i] = LAB_Y
                    ny += 1
        counts[b, LAB_X] = nx
        counts[b, LAB_Y] = ny
        # completeness of the X-Y join: degrees inside the rest must saturate
        for i in range(size):
            s = s0 + i
            if vlabel[s] == LAB_X and deg_b[s] - nk != ny:
                status[b] = KXYZ_MISSING_CROSS
            elif vlabel[s] == LAB_Y and deg_b[s] - nk != nx:
                status[b] = KXYZ_MISSING_CROSS
        if status[b] == KXYZ_MISSING_CROSS:
            # locate a concrete missing cross pair
            done = False
            for i in range(size):
                if done or vlabel[s0 + i] != LAB_X:
                    continue
                for j2 in range(size):
                    if vlabel[s0 + j2] != LAB_Y:
                        continue
                    adjacent = False
                    for t in range(lptr[i], lptr[i] + ldeg[i]):
                        if ladj[t] == j2:
                            adjacent = True
                            break
                    if not adjacent:
                        wit_a[b] = block_verts[s0 + i]
                        wit_b[b] = block_verts[s0 + j2]
                        done = True
                        break
    return vlabel, status, counts, is_clique, wit_a, wit_b, deg_b


@njit(cache=True)
def _heap_push(heap, hs, val):
    heap[hs] = val
    i = hs
    while i > 0:
        p = (i - 1) // 2
        if heap[p] <= heap[i]:
            break
        heap[p], heap[i] = heap[i], heap[p]
        i = p
    return hs + 1


@njit(cache=True)
def _heap_pop(heap, hs):
    top = heap[0]
    hs -= 1
    heap[0] = heap[hs]
    i = 0
    while True:
        l = 2 * i + 1
        r = l + 1
        small = i
        if l < hs and heap[l] < heap[small]:
            small = l
        if r < hs and heap[r] < heap[small]:
            small = r
        if small == i:
            break
        heap[i], heap[small] = heap[small], heap[i]
        i = small
    return top, hs


@njit(cache=True)
def peel(n, nb, block_ptr, block_verts, v_ptr, v_blocks):
    """End-block elimination order over the block-cut forest.

    Repeatedly removes a block with at most one remaining cut vertex,
    lowest block id first; returns the order and each block's residual cut
    vertex (-1 for the last block of its component).
    """
    cnt = np.empty(n, np.int32)
    for v in range(n):
        cnt[v] = np.int32(v_ptr[v + 1] - v_ptr[v])
    acc = np.zeros(nb, np.int32)
    for b in range(nb):
        for s in range(block_ptr[b], block_ptr[b + 1]):
            if cnt[block_verts[s]] >= 2:
                acc[b] += 1
    peeled = np.zeros(nb, np.uint8)
    heap = np.empty(nb + n + 8, np.int32)
    hs = 0
    for b in range(nb):
        if acc[b] <= 1:
            hs = _heap_push(heap, hs, b)
    order = np.empty(nb, np.int32)
    ocut = np.full(nb, NIL, np.int32)
    k = 0
    while hs > 0:
        b, hs = _heap_pop(heap, hs)
        if peeled[b]:
            continue
        peeled[b] = 1
        order[k] = b
        for s in range(block_ptr[b], block_ptr[b + 1]):
            if cnt[block_verts[s]] >= 2:
                ocut[k] = block_verts[s]
        for s in range(block_ptr[b], block_ptr[b + 1]):
            u = block_verts[s]
            cnt[u] -= 1
            if cnt[u] == 1:
                # u stopped separating; its last block may now be an end-block
                for t in range(v_ptr[u], v_ptr[u + 1]):
                    b2 = v_blocks[t]
                    if peeled[b2] == 0:
                        acc[b2] -= 1
                        if acc[b2] <= 1:
                            hs = _heap_push(heap, hs, b2)
                        break
        k += 1
    return order, ocut, k


@njit(cache=True)
def _uf_find(parent, par, b):
    """Union-find root of b plus the parity of b relative to that root."""
    p = 0
    r = b
    while parent[r] != r:
        p ^= par[r]
        r = parent[r]
    p0 = p
    # path compression, keeping every hop's parity-to-root consistent
    while parent[b] != r:
        nxt = parent[b]
        hop = par[b]
        parent[b] = r
        par[b] = p
        p ^= hop
        b = nxt
    return r, p0


@njit(cache=True)
def _uf_union(parent, par, rank, a, b, rel):
    """Impose orientation(a) xor orientation(b) == rel; 0 ok, 1 conflict."""
    ra, pa = _uf_find(parent, par, a)
    rb, pb = _uf_find(parent, par, b)
    need = pa ^ pb ^ rel
    if ra == rb:
        return 1 if need != 0 else 0
    if rank[ra] < rank[rb]:
        ra, rb = rb, ra
    parent[rb] = ra
    par[rb] = need
    if rank[ra] == rank[rb]:
        rank[ra] += 1
    return 0


# contribution flavors: how a bundle slot maps to a side, given the block's
# orientation bit (0 = cross part X joins set 1)
FLAV_NONE = 0
FLAV_STRAIGHT = 1  # side = orientation      (X slots, Z of X-empty blocks)
FLAV_FLIPPED = 2   # side = not orientation  (Y slots)
FLAV_BOTH = 3      # both sides              (Z slots of cross-joined blocks)


@njit(cache=True)
def find_nonprobes_kernel(n, eu, ev, nb, block_ptr, block_verts,
                          vlabel, counts, is_clique):
    """Candidate non-probe sets by 2-coloring block orientations.

    Every non-clique block must place its X u Z bundle inside one candidate
    set and its Y u Z bundle inside the other (coverage forces whole bundles
    onto single sides; Z lands in both when X and Y are non-empty).  The
    free choice per block is a single orientation bit.  Independence then
    reads as constraints along edges whose two ends both carry bundle
    memberships: each such vertex must resolve to one side, and the two
    sides must differ.  The constraints form a parity CSP over the
    orientation bits, solved by union-find with parity; a vertex carrying
    both sides next to any committed vertex, or an odd constraint cycle, is
    a firm "no".  Orientations are anchored deterministically: the lowest
    block of every constraint component sends its X u Z bundle to set 1.
    """
    in1 = np.zeros(n, np.uint8)
    in2 = np.zeros(n, np.uint8)
    # per-vertex representative contribution plus a chain of extras
    rep_block = np.full(n, -1, np.int32)
    rep_par = np.zeros(n, np.uint8)
    flavor = np.zeros(n, np.uint8)
    both_block = np.full(n, -1, np.int32)
    total_slots = block_ptr[nb]
    ex_head = np.full(n, -1, np.int32)
    ex_next = np.empty(total_slots, np.int32)
    ex_block = np.empty(total_slots, np.int32)
    ex_par = np.empty(total_slots, np.uint8)
    n_ex = 0
    for b in range(nb):
        if is_clique[b] == 1:
            continue
        has_x = counts[b, LAB_X] > 0
        for s in range(block_ptr[b], block_ptr[b + 1]):
            lab = vlabel[s]
            if lab == LAB_K:
                continue
            u = block_verts[s]
            if lab == LAB_Z and has_x:
                flavor[u] = FLAV_BOTH
                both_block[u] = b
                continue
            p = np.uint8(1) if lab == LAB_Y else np.uint8(0)
            if flavor[u] == FLAV_NONE:
                rep_block[u] = b
                rep_par[u] = p
                flavor[u] = FLAV_FLIPPED if lab == LAB_Y else FLAV_STRAIGHT
            elif flavor[u] != FLAV_BOTH:
                ex_block[n_ex] = b
                ex_par[n_ex] = p
                ex_next[n_ex] = ex_head[u]
                ex_head[u] = n_ex
                n_ex += 1
    parent = np.empty(nb, np.int32)
    par = np.zeros(nb, np.uint8)
    rank = np.zeros(nb, np.int32)
    for b in range(nb):
        parent[b] = b
    # one pass over the edges: a vertex with committed company must resolve
    # to a single side (unify its contributions, lazily, once), and the two
    # ends of such an edge must land on opposite sides
    unified = np.zeros(n, np.uint8)
    m = eu.shape[0]
    for e in range(m):
        u, w = eu[e], ev[e]
        if flavor[u] == FLAV_NONE or flavor[w] == FLAV_NONE:
            continue
        if flavor[u] == FLAV_BOTH:
            return (np.int64(FN_SATURATED), np.int64(both_block[u]),
                    np.int64(u), in1, in2)
        if flavor[w] == FLAV_BOTH:
            return (np.int64(FN_SATURATED), np.int64(both_block[w]),
                    np.int64(w), in1, in2)
        if unified[u] == 0:
            unified[u] = 1
            i = ex_head[u]
            while i >= 0:
                if _uf_union(parent, par, rank, rep_block[u], ex_block[i],
                             rep_par[u] ^ ex_par[i]) != 0:
                    return (np.int64(FN_ORIENTATION), np.int64(ex_block[i]),
                            np.int64(u), in1, in2)
                i = ex_next[i]
        if unified[w] == 0:
            unified[w] = 1
            i = ex_head[w]
            while i >= 0:
                if _uf_union(parent, par, rank, rep_block[w], ex_block[i],
                             rep_par[w] ^ ex_par[i]) != 0:
                    return (np.int64(FN_ORIENTATION), np.int64(ex_block[i]),
                            np.int64(w), in1, in2)
                i = ex_next[i]
        if _uf_union(parent, par, rank, rep_block[u], rep_block[w],
                     np.uint8(1) ^ rep_par[u] ^ rep_par[w]) != 0:
            return (np.int64(FN_ORIENTATION), np.int64(rep_block[u]),
                    np.int64(u), in1, in2)
    # anchor each constraint component at its lowest block
    orient = np.zeros(nb, np.uint8)
    assigned = np.zeros(nb, np.uint8)
    root_val = np.zeros(nb, np.uint8)
    for b in range(nb):
        r, p = _uf_find(parent, par, b)
        if assigned[r] == 0:
            assigned[r] = 1
            root_val[r] = p  # makes orient[b] == 0 for the anchor
        orient[b] = root_val[r] ^ p
    for b in range(nb):
        if is_clique[b] == 1:
            continue
        has_x = counts[b, LAB_X] > 0
        side1 = orient[b] == 0
        for s in range(block_ptr[b], block_ptr[b + 1]):
            lab = vlabel[s]
            if lab == LAB_K:
                continue
            u = block_verts[s]
            if lab == LAB_Z and has_x:
                in1[u] = 1
                in2[u] = 1
            elif lab == LAB_Y:
                if side1:
                    in2[u] = 1
                else:
                    in1[u] = 1
            else:
                if side1:
                    in1[u] = 1
                else:
                    in2[u] = 1
    return np.int64(FN_OK), np.int64(-1), np.int64(-1), in1, in2


@njit(cache=True)
def verify_block_kernel(n, eu, ev, edge_block, nb, block_ptr, block_verts,
                        indptr, indices, in1, in2, deg_b):
    """Covering check for the block-graph target.

    Requires both sets independent, then within every block: each vertex in
    neither set is universal in the block, and the set-1-only / set-2-only
    vertices are completely joined.  Equivalently, every non-adjacent pair
    inside a block lies within one of the two sets.
    """
    m = eu.shape[0]
    total_slots = block_ptr[nb]
    if deg_b.shape[0] != total_slots:
        deg_b = np.zeros(total_slots, np.int32)
        for e in range(m):
            b = edge_block[e]
            s0, s1 = block_ptr[b], block_ptr[b + 1]
            deg_b[_slot_of(block_verts, s0, s1, eu[e])] += 1
            deg_b[_slot_of(block_verts, s0, s1, ev[e])] += 1
    cross = np.zeros(nb, np.int64)
    only1 = np.zeros(nb, np.int64)
    only2 = np.zeros(nb, np.int64)
    for e in range(m):
        u, v = eu[e], ev[e]
        cu = in1[u] + 2 * in2[u]
        cv = in1[v] + 2 * in2[v]
        if cu == cv or cu == 3 or cv == 3:
            if (cu & cv) & 1:
                return np.int64(VF_DEPENDENT_N1), np.int64(u), np.int64(v)
            if (cu & cv) & 2:
                return np.int64(VF_DEPENDENT_N2), np.int64(u), np.int64(v)
        if (cu == 1 and cv == 2) or (cu == 2 and cv == 1):
            cross[edge_block[e]] += 1
    for b in range(nb):
        for s in range(block_ptr[b], block_ptr[b + 1]):
            u = block_verts[s]
            c = in1[u] + 2 * in2[u]
            if c == 1:
                only1[b] += 1
            elif c == 2:
                only2[b] += 1
    stamp = np.full(n, NIL, np.int32)
    for b in range(nb):
        s0, s1 = block_ptr[b], block_ptr[b + 1]
        size = s1 - s0
        for s in range(s0, s1):
            u = block_verts[s]
            if in1[u] == 0 and in2[u] == 0 and deg_b[s] != size - 1:
                # a probe vertex missing some co-block partner
                for i in range(indptr[u], indptr[u + 1]):
                    stamp[indices[i]] = u
                for s2 in range(s0, s1):
                    w = block_verts[s2]
                    if w != u and stamp[w] != u:
                        return np.int64(VF_UNCOVERED), np.int64(u), np.int64(w)
        if only1[b] * only2[b] != cross[b]:
            for s in range(s0, s1):
                u = block_verts[s]
                if in1[u] == 1 and in2[u] == 0:
                    for i in range(indptr[u], indptr[u + 1]):
                        stamp[indices[i]] = u
                    for s2 in range(s0, s1):
                        w = block_verts[s2]
                        if w != u and in2[w] == 1 and in1[w] == 0 and stamp[w] != u:
                            return np.int64(VF_UNCOVERED), np.int64(u), np.int64(w)
    return np.int64(VF_OK), np.int64(-1), np.int64(-1)


@njit(cache=True)
def block_fill_pairs(nb, block_ptr, block_verts, block_edge_counts,
                     indptr, indices, n):
    """All non-adjacent vertex pairs lying inside a common block."""
    total = 0
    for b in range(nb):
        size = block_ptr[b + 1] - block_ptr[b]
        total += size * (size - 1) // 2 - block_edge_counts[b]
    out = np.empty((total, 2), np.int32)
    stamp = np.full(n, NIL, np.int32)
    k = 0
    for b in range(nb):
        s0, s1 = block_ptr[b], block_ptr[b + 1]
        size = s1 - s0
        if size * (size - 1) // 2 == block_edge_counts[b]:
            continue
        for s in range(s0, s1):
            u = block_verts[s]
            for i in range(indptr[u], indptr[u + 1]):
                stamp[indices[i]] = u
            for s2 in range(s + 1, s1):
                w = block_verts[s2]
                if stamp[w] != u:
                    out[k, 0] = u
                    out[k, 1] = w
                    k += 1
    return out[:k]
