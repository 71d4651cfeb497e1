"""Named small-graph catalog and induced-subgraph search.

The catalog collects every forbidden pattern used by the recognizers, under
fixed, documented vertex labelings:

* generic patterns: P4, 2K2, K2+K1, K3+K1, C4, diamond, gem, house, domino,
  octahedron, and a hole generator (chordless cycles of length >= 5);
* F1..F3 - the obstructions for (1-)probe block graphs;
* B1..B6 - the 2-connected block obstructions for 2-probe block graphs;
* G1..G16 - the block-gluing obstructions for 2-probe block graphs.

The F/B/G adjacency lists are frozen constants.  Their correctness is not
taken on faith: the test suite checks the two algebraic identities
B1 = (K2+K1)*2K1 and B3 = 2K1*2K1*2K1 (joins), the degree profile of F1,
and that every catalog member is itself rejected by the brute-force
recognizer it obstructs.

Label conventions (used by tests and by witness payloads):

* diamond: K4 on 0..3 minus the edge {2,3}; the non-adjacent pair is (2, 3).
* gem: path 0-1-2-3 plus apex 4 joined to all.
* house: cycle 0-1-2-3-4 plus the chord {0,3}.
* domino: cycle 0-1-2-3-4-5 plus the long chord {0,3}.
* F2: two diamonds sharing vertex 3 (degree 2 in one, degree 3 in the other).
* F3: two diamonds joined by the bridge {3,4} between degree-2 vertices.
* G1..G16: the left-to-right reading of the drawings, vertices numbered in
  first-appearance order; each consists of locally valid blocks whose
  combination around cut vertices is infeasible.
"""

from __future__ import annotations

from .graphs import Graph, compose, cycle_graph, path_graph

__all__ = ["pattern", "catalog_names", "hole", "find_induced", "isomorphic"]


def _g(n: int, edges: list[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


def _build_catalog() -> dict[str, Graph]:
    k1 = _g(1, [])
    k2 = _g(2, [(0, 1)])
    k3 = _g(3, [(0, 1), (0, 2), (1, 2)])
    two_k1 = _g(2, [])
    cat: dict[str, Graph] = {
        "K1": k1,
        "K2": k2,
        "K3": k3,
        "P4": path_graph(4),
        "2K2": compose("disjoint-union", k2, k2),
        "K2+K1": compose("disjoint-union", k2, k1),
        "K3+K1": compose("disjoint-union", k3, k1),
        "C4": cycle_graph(4),
        "diamond": _g(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
        "gem": compose("join", path_graph(4), k1),
        "house": _g(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 3)]),
        "domino": _g(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 3)]),
        "octahedron": compose("join", two_k1, compose("join", two_k1, two_k1)),
    }

    cat["F1"] = _g(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 3), (1, 3), (1, 4)])
    cat["F2"] = _g(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 6), (5, 6), (3, 5),
                       (1, 3), (0, 2), (3, 6)])
    cat["F3"] = _g(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7),
                       (5, 7), (0, 2), (1, 3), (4, 6)])

    cat["B1"] = _g(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 3), (1, 4)])
    cat["B2"] = _g(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 3), (2, 5)])
    cat["B3"] = _g(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 3), (2, 5),
                       (0, 4), (2, 4), (1, 3), (1, 5)])
    cat["B4"] = _g(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 2), (2, 5),
                       (3, 5), (0, 3)])
    cat["B5"] = _g(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 2), (2, 5),
                       (3, 5), (2, 4), (1, 5)])
    cat["B6"] = _g(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 2), (2, 5),
                       (3, 5), (0, 3), (1, 3), (1, 5)])

    cat["G1"] = _g(8, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (3, 6),
                       (3, 7), (4, 5), (4, 7), (5, 7), (6, 7)])
    cat["G2"] = _g(8, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (3, 6),
                       (3, 7), (4, 5), (4, 7), (5, 7), (6, 7)])
    cat["G3"] = _g(8, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (3, 6),
                       (3, 7), (4, 5), (4, 6), (5, 7), (6, 7)])
    cat["G4"] = _g(8, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (3, 6),
                       (3, 7), (4, 5), (4, 6), (5, 7), (6, 7)])
    cat["G5"] = _g(8, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4),
                       (4, 5), (4, 6), (4, 7), (5, 7), (6, 7)])
    cat["G6"] = _g(8, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4),
                       (4, 5), (4, 6), (5, 7), (6, 7)])
    cat["G7"] = _g(9, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4),
                       (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7), (6, 8), (7, 8)])
    cat["G8"] = _g(9, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4),
                       (4, 5), (5, 6), (5, 7), (6, 7), (6, 8), (7, 8)])
    cat["G9"] = _g(9, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4),
                       (4, 5), (5, 6), (5, 7), (6, 8), (7, 8)])
    cat["G10"] = _g(10, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (3, 6),
                         (4, 6), (5, 6), (6, 7), (6, 8), (7, 8), (7, 9), (8, 9)])
    cat["G11"] = _g(10, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (3, 6),
                         (4, 6), (5, 6), (6, 7), (6, 8), (7, 8), (7, 9), (8, 9)])
    cat["G12"] = _g(10, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (3, 6),
                         (4, 6), (5, 6), (6, 7), (6, 8), (7, 9), (8, 9)])
    cat["G13"] = _g(12, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (3, 8), (4, 8),
                         (4, 5), (4, 7), (5, 6), (5, 7), (6, 7),
                         (8, 9), (8, 10), (9, 10), (9, 11), (10, 11)])
    cat["G14"] = _g(12, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 8), (4, 8),
                         (4, 5), (4, 7), (5, 6), (5, 7), (6, 7),
                         (8, 9), (8, 10), (9, 10), (9, 11), (10, 11)])
    cat["G15"] = _g(12, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 8), (4, 8),
                         (4, 5), (4, 7), (5, 6), (6, 7),
                         (8, 9), (8, 10), (9, 10), (9, 11), (10, 11)])
    cat["G16"] = _g(12, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 8), (4, 8),
                         (4, 5), (4, 7), (5, 6), (6, 7),
                         (8, 9), (8, 10), (9, 11), (10, 11)])
    return cat


_CATALOG = _build_catalog()


def catalog_names() -> tuple[str, ...]:
    return tuple(_CATALOG)


def hole(length: int) -> Graph:
    """Chordless cycle of the given length (>= 5)."""
    if length < 5:
        raise ValueError("holes have length >= 5")
    return cycle_graph(length)


def pattern(name: str) -> Graph:
    """Look up a catalog pattern; `C<k>` (k >= 3) cycles resolve dynamically."""
    if name in _CATALOG:
        return _CATALOG[name]
    if name.startswith("C") and name[1:].isdigit():
        k = int(name[1:])
        if k >= 3:
            return cycle_graph(k)
    raise KeyError(f"unknown pattern name: {name!r}")


# ---------------------------------------------------------------------------
# induced-subgraph search


def find_induced(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """First induced copy of `h` inside `g`, or None.

    Returns the mapping phi as a tuple (phi[i] hosts h's vertex i) with
    uv in E(h) iff phi(u)phi(v) in E(g).  Backtracking assigns h's vertices
    in id order, trying host vertices in ascending id order, so the first
    match is the lexicographically least mapping; runs are deterministic.
    """
    hn, gn = h.n, g.n
    if hn > gn:
        return None
    if hn == 0:
        return ()
    gadj = g.neighbor_sets
    hadj = h.neighbor_sets
    gdeg = g.degrees
    hdeg = h.degrees
    phi: list[int] = []
    used = [False] * gn

    def extend() -> bool:
        i = len(phi)
        if i == hn:
            return True
        prev_nbrs = [j for j in range(i) if j in hadj[i]]
        prev_non = [j for j in range(i) if j not in hadj[i]]
        for cand in range(gn):
            if used[cand] or gdeg[cand] < hdeg[i]:
                continue
            if any(phi[j] not in gadj[cand] for j in prev_nbrs):
                continue
            if any(phi[j] in gadj[cand] for j in prev_non):
                continue
            phi.append(cand)
            used[cand] = True
            if extend():
                return True
            used[cand] = False
            phi.pop()
        return False

    return tuple(phi) if extend() else None


def isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return find_induced(g, h) is not None
