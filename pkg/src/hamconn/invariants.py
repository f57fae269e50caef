"""Predicates and numeric invariants: claws, connectivity, domination.

Everything here is exact.  The search routines are written for desk-scale
inputs (a few dozen vertices); they use bitmask adjacency throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import DisconnectedGraphError, GraphError
from .multigraph import Multigraph, SimpleGraph


# -- claws ---------------------------------------------------------------------


def find_claw(g: SimpleGraph) -> Optional[tuple[int, int, int, int]]:
    """An induced claw ``(center, a, b, c)`` with pairwise non-adjacent leaves."""
    masks = g.adjacency_masks()
    for center in range(g.n):
        nbrs = g.neighbors(center)
        if len(nbrs) < 3:
            continue
        for a, b, c in itertools.combinations(nbrs, 3):
            if not (masks[a] >> b & 1) and not (masks[a] >> c & 1) and not (masks[b] >> c & 1):
                return (center, a, b, c)
    return None


def is_claw_free(g: SimpleGraph) -> bool:
    return find_claw(g) is None


# -- simplicial vertices ---------------------------------------------------------


def simplicial_vertices(g: SimpleGraph) -> frozenset[int]:
    """Vertices whose neighborhoods induce complete graphs.

    Isolated and degree-1 vertices count as simplicial.
    """
    masks = g.adjacency_masks()
    out = []
    for v in range(g.n):
        nbrs = masks[v]
        ok = True
        rest = nbrs
        while rest:
            u = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if nbrs & ~masks[u] & ~(1 << u):
                ok = False
                break
        if ok:
            out.append(v)
    return frozenset(out)


# -- vertex connectivity ---------------------------------------------------------


def _max_vertex_disjoint_paths(g: SimpleGraph, s: int, t: int, cap: int) -> int:
    """Internally vertex-disjoint s-t paths via unit-capacity flow on the
    vertex-split digraph, stopping early once ``cap`` paths are found."""
    n = g.n
    # Node 2v = v_in, 2v+1 = v_out.  Arcs: v_in->v_out (capacity 1, v not s,t),
    # and u_out->w_in for each edge uw (capacity 1 each way).
    size = 2 * n
    capacity: list[dict[int, int]] = [dict() for _ in range(size)]

    def add(u: int, v: int, c: int) -> None:
        capacity[u][v] = capacity[u].get(v, 0) + c
        capacity[v].setdefault(u, 0)

    for v in range(n):
        if v not in (s, t):
            add(2 * v, 2 * v + 1, 1)
        else:
            add(2 * v, 2 * v + 1, n)
    for u, w in g.endpoints:
        add(2 * u + 1, 2 * w, 1)
        add(2 * w + 1, 2 * u, 1)
    source, sink = 2 * s, 2 * t + 1
    flow = 0
    while flow < cap:
        parent = {source: source}
        queue = [source]
        while queue and sink not in parent:
            nxt = []
            for x in queue:
                for y, c in capacity[x].items():
                    if c > 0 and y not in parent:
                        parent[y] = x
                        nxt.append(y)
            queue = nxt
        if sink not in parent:
            break
        y = sink
        while y != source:
            x = parent[y]
            capacity[x][y] -= 1
            capacity[y][x] += 1
            y = x
        flow += 1
    return flow


def vertex_connectivity(g: SimpleGraph) -> int:
    """Minimum number of vertex deletions disconnecting ``g`` (or reducing it
    to a single vertex); ``n - 1`` for complete graphs."""
    n = g.n
    if n <= 1:
        return 0
    if g.is_complete():
        return n - 1
    if not g.is_connected():
        return 0
    masks = g.adjacency_masks()
    degs = g.degrees()
    best = min(degs)
    # A minimum separator either separates a fixed minimum-degree vertex v
    # from some non-neighbor, or contains v, in which case it separates two
    # non-adjacent neighbors of v.
    v = min(range(n), key=lambda x: degs[x])
    for t in range(n):
        if t != v and not (masks[v] >> t & 1):
            best = min(best, _max_vertex_disjoint_paths(g, v, t, best))
    nbrs = g.neighbors(v)
    for a, b in itertools.combinations(nbrs, 2):
        if not (masks[a] >> b & 1):
            best = min(best, _max_vertex_disjoint_paths(g, a, b, best))
    return best


def is_k_connected(g: SimpleGraph, k: int) -> bool:
    """Whether ``vertex_connectivity(g) >= k``, with cheap early exits."""
    if k <= 0:
        return True
    n = g.n
    if n <= k:
        return g.is_complete() and n - 1 >= k
    if min(g.degrees(), default=0) < k:
        return False
    return vertex_connectivity(g) >= k


# -- edge connectivity (multigraphs, loops ignored) -------------------------------


def edge_connectivity(h: Multigraph) -> int:
    """Size of a minimum edge cut; loops are ignored.  Graphs with at most
    one vertex have no cuts and report ``edge_count + 1`` as a sentinel."""
    if h.n <= 1:
        return h.edge_count + 1
    if not h.is_connected():
        return 0
    mult: list[dict[int, int]] = [dict() for _ in range(h.n)]
    for u, v in h.endpoints:
        if u != v:
            mult[u][v] = mult[u].get(v, 0) + 1
            mult[v][u] = mult[v].get(u, 0) + 1
    best = None
    for t in range(1, h.n):
        capacity = [dict(row) for row in mult]
        flow = 0
        while True:
            parent = {0: 0}
            queue = [0]
            while queue and t not in parent:
                nxt = []
                for x in queue:
                    for y, c in capacity[x].items():
                        if c > 0 and y not in parent:
                            parent[y] = x
                            nxt.append(y)
                queue = nxt
            if t not in parent:
                break
            y = t
            bottleneck = min(
                capacity[parent[z]][z]
                for z in _walk_to_source(parent, t)
            )
            y = t
            while y != 0:
                x = parent[y]
                capacity[x][y] -= bottleneck
                capacity[y][x] = capacity[y].get(x, 0) + bottleneck
                y = x
            flow += bottleneck
        best = flow if best is None else min(best, flow)
    return best if best is not None else 0


def _walk_to_source(parent: dict[int, int], t: int) -> Iterable[int]:
    y = t
    while parent[y] != y:
        yield y
        y = parent[y]


# -- domination -------------------------------------------------------------------


@dataclass(frozen=True)
class DominatingSet:
    """A set of vertices whose closed neighborhoods cover the host graph."""

    vertices: frozenset[int]
    host: SimpleGraph

    def validate(self) -> bool:
        masks = self.host.adjacency_masks()
        covered = 0
        for v in self.vertices:
            self.host.check_vertex(v)
            covered |= masks[v] | (1 << v)
        return covered == (1 << self.host.n) - 1


def dominating_set(g: SimpleGraph, k: int) -> Optional[DominatingSet]:
    """A dominating set of size at most ``k`` if one exists.

    Branch and bound on the most-constrained uncovered vertex, using closed
    neighborhood bitmasks; exact.
    """
    if k < 0:
        return None
    n = g.n
    if n == 0:
        return DominatingSet(frozenset(), g)
    masks = g.adjacency_masks()
    closed = [masks[v] | (1 << v) for v in range(n)]
    full = (1 << n) - 1
    max_cover = max(mask.bit_count() for mask in closed)

    best: Optional[tuple[int, ...]] = None

    def search(covered: int, chosen: tuple[int, ...], budget: int) -> Optional[tuple[int, ...]]:
        if covered == full:
            return chosen
        if budget == 0:
            return None
        missing = full & ~covered
        if missing.bit_count() > budget * max_cover:
            return None
        # Branch on an uncovered vertex with the fewest potential dominators.
        pick, pick_cands = -1, None
        rest = missing
        while rest:
            u = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            cands = [v for v in range(n) if closed[v] >> u & 1]
            if pick_cands is None or len(cands) < len(pick_cands):
                pick, pick_cands = u, cands
                if len(cands) == 1:
                    break
        for v in sorted(pick_cands, key=lambda x: -(closed[x] & ~covered).bit_count()):
            result = search(covered | closed[v], chosen + (v,), budget - 1)
            if result is not None:
                return result
        return None

    # Iterative deepening keeps the returned set minimum-size within the budget.
    for size in range(0, k + 1):
        found = search(0, (), size)
        if found is not None:
            best = found
            break
    if best is None:
        return None
    ds = DominatingSet(frozenset(best), g)
    assert ds.validate()
    return ds


def domination_number(g: SimpleGraph) -> int:
    if g.n == 0:
        raise GraphError("the empty graph has no domination number")
    for k in range(1, g.n + 1):
        if dominating_set(g, k) is not None:
            return k
    raise AssertionError("unreachable: the full vertex set always dominates")


# -- essential edge connectivity ----------------------------------------------------


def _nontrivial_component_count(h: Multigraph, removed: frozenset[int]) -> int:
    inc = h.incidence()
    seen = [False] * h.n
    count = 0
    for start in range(h.n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        vertices = {start}
        while stack:
            x = stack.pop()
            for e, w in inc[x]:
                if e in removed:
                    continue
                if not seen[w]:
                    seen[w] = True
                    vertices.add(w)
                    stack.append(w)
        has_edge = any(
            e not in removed and u in vertices for e, (u, _) in enumerate(h.endpoints)
        )
        if has_edge:
            count += 1
    return count


def find_essential_cut(h: Multigraph, k: int) -> Optional[frozenset[int]]:
    """An edge set of size below ``k`` whose removal leaves two or more
    nontrivial components (components containing an edge), or ``None``.

    Exhaustive over subsets; meant for ``k <= 3``.
    """
    if not h.is_connected():
        raise DisconnectedGraphError("essential edge-connectivity needs a connected graph")
    m = h.edge_count
    for size in range(1, min(k - 1, m) + 1):
        for subset in itertools.combinations(range(m), size):
            removed = frozenset(subset)
            if _nontrivial_component_count(h, removed) >= 2:
                return removed
    return None


def is_essentially_k_edge_connected(h: Multigraph, k: int) -> bool:
    """True when every essential edge-cut has size at least ``k``.

    Graphs with no essential cut at all (stars, tiny paths) report True for
    every ``k``.
    """
    if k <= 1:
        if not h.is_connected():
            raise DisconnectedGraphError("essential edge-connectivity needs a connected graph")
        return True
    return find_essential_cut(h, k) is None


# -- edge domination by an edge set ---------------------------------------------------


def edges_dominate(h: Multigraph, f: Iterable[int]) -> bool:
    """Whether every edge of ``h`` has an endpoint among the endpoints of ``f``."""
    anchor = set()
    for e in f:
        h.check_edge(e)
        u, v = h.endpoints[e]
        anchor.add(u)
        anchor.add(v)
    return all(u in anchor or v in anchor for u, v in h.endpoints)


def vertices_dominate_edges(h: Multigraph, vertices: Iterable[int]) -> bool:
    """Whether every edge of ``h`` has an endpoint in ``vertices``."""
    vs = set(vertices)
    for v in vs:
        h.check_vertex(v)
    return all(u in vs or v in vs for u, v in h.endpoints)
