"""Exact trail and path search engines.

All searches are exhaustive depth-first backtracking over edge extensions,
pruned by reachability over unused edges and memoized dead states keyed by
``(current vertex, used-edge bitmask)``.  Loops are never traversed except
when a loop is itself the prescribed through-edge; loop edges still count
for domination checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import GraphError
from .multigraph import Multigraph, SimpleGraph


@dataclass(frozen=True)
class Trail:
    """An alternating vertex/edge walk with pairwise-distinct edges.

    ``vertices`` has one more entry than ``edges``; edge ``i`` joins
    ``vertices[i]`` and ``vertices[i + 1]``.  A trail is closed when it ends
    where it started (a single vertex with no edges is a closed trail).
    """

    host: Multigraph
    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def validate(self) -> None:
        if len(self.vertices) != len(self.edges) + 1 or not self.vertices:
            raise GraphError("trail shape mismatch")
        if len(set(self.edges)) != len(self.edges):
            raise GraphError("trail repeats an edge")
        for v in self.vertices:
            self.host.check_vertex(v)
        for i, e in enumerate(self.edges):
            self.host.check_edge(e)
            pair = self.host.endpoints[e]
            step = (self.vertices[i], self.vertices[i + 1])
            if pair != step and pair != (step[1], step[0]):
                raise GraphError(f"edge {e} does not join consecutive trail vertices")

    @property
    def is_closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def interior_vertices(self) -> frozenset[int]:
        """All vertices for a closed trail; for an open trail, the vertices at
        non-terminal positions (a terminal vertex revisited mid-trail counts)."""
        if self.is_closed and self.edges:
            return self.vertex_set()
        return frozenset(self.vertices[1:-1])

    def is_spanning(self) -> bool:
        return self.vertex_set() == frozenset(range(self.host.n))

    def dominates_host_edges(self) -> bool:
        vs = self.vertex_set()
        return all(u in vs or v in vs for u, v in self.host.endpoints)

    def reversed(self) -> "Trail":
        return Trail(self.host, self.vertices[::-1], self.edges[::-1])


@dataclass(frozen=True)
class IdtWitness:
    """A trail whose terminal edges are prescribed and whose interior
    vertices dominate every edge of the host."""

    trail: Trail
    first_edge: int
    last_edge: int

    def validate(self) -> None:
        self.trail.validate()
        if not self.trail.edges:
            raise GraphError("an internally dominating trail needs edges")
        if self.trail.edges[0] != self.first_edge or self.trail.edges[-1] != self.last_edge:
            raise GraphError("terminal edges do not match the witness")
        if self.first_edge == self.last_edge:
            raise GraphError("terminal edges must differ")
        interior = frozenset(self.trail.vertices[1:-1])
        host = self.trail.host
        for u, v in host.endpoints:
            if u not in interior and v not in interior:
                raise GraphError(f"edge ({u}, {v}) not dominated by interior vertices")


def _incidence_arrays(h: Multigraph) -> tuple[tuple[tuple[int, int], ...], ...]:
    return h.incidence()


def _cover_masks(h: Multigraph) -> list[int]:
    cover = [0] * h.n
    for e, (u, v) in enumerate(h.endpoints):
        cover[u] |= 1 << e
        cover[v] |= 1 << e
    return cover


def _component_mask(inc, cur: int, used: int) -> int:
    """Vertices reachable from ``cur`` along unused edges."""
    comp = 1 << cur
    stack = [cur]
    while stack:
        x = stack.pop()
        for eid, w in inc[x]:
            if not (used >> eid & 1) and not (comp >> w & 1):
                comp |= 1 << w
                stack.append(w)
    return comp


def _closed_trail_search(
    h: Multigraph,
    first_edge: int,
    *,
    min_edge_id: int = 0,
    required_mask: int = 0,
    need_domination: bool = False,
) -> Optional[Trail]:
    """A closed trail starting along ``first_edge`` that visits every required
    vertex (and, when asked, whose vertex set dominates all edges).

    Edges with id below ``min_edge_id`` are never traversed, which lets
    callers canonicalize on the minimum edge id of the trail.  The first edge
    may be a loop; no other loop is ever traversed.
    """
    h.check_edge(first_edge)
    inc = _incidence_arrays(h)
    loops = tuple(u == v for u, v in h.endpoints)
    cover = _cover_masks(h) if need_domination else None
    full_cover = (1 << h.edge_count) - 1
    start, second = h.endpoints[first_edge]
    verts = [start, second]
    edges = [first_edge]
    dead: set[tuple[int, int]] = set()

    def search(cur: int, used: int, visited: int, covered: int) -> bool:
        if cur == start and (required_mask & ~visited) == 0:
            if not need_domination or covered == full_cover:
                return True
        key = (cur, used)
        if key in dead:
            return False
        comp = _component_mask(inc, cur, used)
        if cur != start and not (comp >> start & 1):
            dead.add(key)
            return False
        if required_mask & ~visited & ~comp:
            dead.add(key)
            return False
        if need_domination:
            future = covered
            rest = comp & ~visited
            while rest:
                w = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                future |= cover[w]
            if future != full_cover:
                dead.add(key)
                return False
        for eid, w in inc[cur]:
            if eid < min_edge_id or loops[eid] or (used >> eid & 1):
                continue
            verts.append(w)
            edges.append(eid)
            next_cover = covered | cover[w] if need_domination else 0
            if search(w, used | (1 << eid), visited | (1 << w), next_cover):
                return True
            verts.pop()
            edges.pop()
        dead.add(key)
        return False

    initial_cover = (cover[start] | cover[second]) if need_domination else 0
    if search(second, 1 << first_edge, (1 << start) | (1 << second), initial_cover):
        trail = Trail(h, tuple(verts), tuple(edges))
        trail.validate()
        return trail
    return None


def find_closed_trail_through(
    h: Multigraph, required_vertices: Sequence[int], through_edge: int
) -> Optional[Trail]:
    """A closed trail visiting every required vertex and traversing the
    prescribed edge, or ``None`` after exhaustive search."""
    h.check_edge(through_edge)
    required_mask = 0
    for v in required_vertices:
        h.check_vertex(v)
        required_mask |= 1 << v
    return _closed_trail_search(h, through_edge, required_mask=required_mask)


def find_spanning_closed_trail(h: Multigraph) -> Optional[Trail]:
    """A closed trail visiting every vertex, or ``None``."""
    if h.n == 0:
        return None
    if h.n == 1:
        return Trail(h, (0,), ())
    if not h.is_connected():
        return None
    all_vertices = (1 << h.n) - 1
    for e, (u, v) in enumerate(h.endpoints):
        if u == v:
            continue
        # Canonicalization: e is the minimum edge id on the trail.
        trail = _closed_trail_search(h, e, min_edge_id=e, required_mask=all_vertices)
        if trail is not None:
            return trail
    return None


def find_dct(h: Multigraph) -> Optional[Trail]:
    """A closed trail whose vertex set touches every edge, or ``None``.

    Single-vertex trails count, so a star is dominated by the trivial trail
    at its center.
    """
    if h.n == 0:
        return None
    for v in range(h.n):
        trivial = Trail(h, (v,), ())
        if trivial.dominates_host_edges():
            return trivial
    for e, (u, v) in enumerate(h.endpoints):
        if u == v:
            continue
        trail = _closed_trail_search(h, e, min_edge_id=e, need_domination=True)
        if trail is not None:
            return trail
    return None


def find_idt(h: Multigraph, e1: int, e2: int) -> Optional[IdtWitness]:
    """An internally dominating trail with terminal edges ``e1`` and ``e2``.

    Exhaustive over trails that start along ``e1`` and end along ``e2``; the
    interior is positional, so a terminal vertex revisited mid-trail counts
    as interior.
    """
    h.check_edge(e1)
    h.check_edge(e2)
    if e1 == e2:
        raise GraphError("terminal edges of an internally dominating trail must differ")
    inc = _incidence_arrays(h)
    loops = tuple(u == v for u, v in h.endpoints)
    cover = _cover_masks(h)
    full_cover = (1 << h.edge_count) - 1
    e2_ends = h.endpoints[e2]

    a, b = h.endpoints[e1]
    orientations = ((a, b),) if a == b else ((a, b), (b, a))
    for start, second in orientations:
        verts = [start, second]
        edges = [e1]
        dead: set[tuple[int, int]] = set()

        def search(cur: int, used: int, interior: int) -> bool:
            # Closing move: traverse e2 now and test the interior.
            if not (used >> e2 & 1) and cur in e2_ends:
                final_interior = interior | (1 << cur)
                covered = 0
                rest = final_interior
                while rest:
                    w = (rest & -rest).bit_length() - 1
                    rest &= rest - 1
                    covered |= cover[w]
                if covered == full_cover:
                    verts.append(h.other_end(e2, cur))
                    edges.append(e2)
                    return True
            key = (cur, used)
            if key in dead:
                return False
            comp = _component_mask(inc, cur, used)
            if not (comp >> e2_ends[0] & 1) and not (comp >> e2_ends[1] & 1):
                dead.add(key)
                return False
            future = 0
            rest = comp | interior | (1 << cur)
            while rest:
                w = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                future |= cover[w]
            if future != full_cover:
                dead.add(key)
                return False
            for eid, w in inc[cur]:
                if eid == e2 or loops[eid] or (used >> eid & 1):
                    continue
                verts.append(w)
                edges.append(eid)
                if search(w, used | (1 << eid), interior | (1 << cur)):
                    return True
                verts.pop()
                edges.pop()
            dead.add(key)
            return False

        if search(second, 1 << e1, 0):
            trail = Trail(h, tuple(verts), tuple(edges))
            witness = IdtWitness(trail, e1, e2)
            witness.validate()
            return witness
    return None


# -- hamiltonian paths and cycles (simple graphs) ------------------------------


def _bit_component(masks: Sequence[int], seed: int, allowed: int) -> int:
    comp = seed & allowed
    frontier = comp
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            nxt |= masks[v]
        nxt &= allowed & ~comp
        comp |= nxt
        frontier = nxt
    return comp


def hamiltonian_path(g: SimpleGraph, a: int, b: int) -> Optional[Trail]:
    """A path visiting every vertex exactly once from ``a`` to ``b``.

    Exhaustive backtracking with pruning on disconnection of the unvisited
    subgraph, forced-degree dead ends, and memoized dead states.
    """
    g.check_vertex(a)
    g.check_vertex(b)
    if a == b:
        raise GraphError("hamiltonian path endpoints must differ")
    n = g.n
    masks = g.adjacency_masks()
    full = (1 << n) - 1
    if n == 1:
        return None
    b_bit = 1 << b
    dead: set[tuple[int, int]] = set()
    order: list[int] = [a]

    def search(cur: int, visited: int) -> bool:
        if visited == full:
            return cur == b
        key = (cur, visited)
        if key in dead:
            return False
        unvisited = full & ~visited
        # Finishing move into b.
        if unvisited == b_bit:
            if masks[cur] >> b & 1:
                order.append(b)
                return True
            dead.add(key)
            return False
        allowed = unvisited | (1 << cur)
        comp = _bit_component(masks, 1 << cur, allowed)
        if unvisited & ~comp:
            dead.add(key)
            return False
        # Every unvisited vertex except b still needs an entry and an exit,
        # drawn from the unvisited region (b may serve as exit), plus cur.
        rest = unvisited & ~b_bit
        cur_bit = 1 << cur
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            avail = masks[v] & (unvisited | cur_bit)
            if avail.bit_count() < 2:
                dead.add(key)
                return False
        candidates = masks[cur] & unvisited & ~b_bit
        # Most-constrained-first ordering speeds up positive instances.
        ranked = []
        while candidates:
            w = (candidates & -candidates).bit_length() - 1
            candidates &= candidates - 1
            ranked.append(((masks[w] & unvisited).bit_count(), w))
        for _, w in sorted(ranked):
            order.append(w)
            if search(w, visited | (1 << w)):
                return True
            order.pop()
        dead.add(key)
        return False

    if not search(a, 1 << a):
        return None
    edge_ids = {}
    for e, (u, v) in enumerate(g.endpoints):
        edge_ids[(u, v)] = e
        edge_ids[(v, u)] = e
    edges = tuple(edge_ids[(order[i], order[i + 1])] for i in range(len(order) - 1))
    trail = Trail(g, tuple(order), edges)
    trail.validate()
    return trail


def missing_hamiltonian_pair(g: SimpleGraph) -> Optional[tuple[int, int]]:
    """The first vertex pair without a hamiltonian path, or ``None``."""
    if g.n < 2:
        raise GraphError("hamiltonian connectivity needs at least 2 vertices")
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if hamiltonian_path(g, a, b) is None:
                return (a, b)
    return None


def is_hamiltonian_connected(g: SimpleGraph) -> bool:
    """Whether a hamiltonian path joins every pair of distinct vertices.

    Graphs on at most 2 vertices are hamiltonian-connected exactly when
    complete.
    """
    if g.n < 2:
        raise GraphError("hamiltonian connectivity needs at least 2 vertices")
    if g.n == 2:
        return g.edge_count == 1
    return missing_hamiltonian_pair(g) is None


def find_hamiltonian_cycle(g: SimpleGraph) -> Optional[Trail]:
    """A spanning cycle as a closed trail, or ``None``."""
    if g.n < 3:
        raise GraphError("hamiltonian cycles need at least 3 vertices")
    n = g.n
    masks = g.adjacency_masks()
    full = (1 << n) - 1
    if not g.is_connected():
        return None
    dead: set[tuple[int, int]] = set()
    order: list[int] = [0]
    home = 1

    def search(cur: int, visited: int) -> bool:
        if visited == full:
            return bool(masks[cur] & home)
        key = (cur, visited)
        if key in dead:
            return False
        unvisited = full & ~visited
        allowed = unvisited | (1 << cur)
        comp = _bit_component(masks, 1 << cur, allowed)
        if unvisited & ~comp:
            dead.add(key)
            return False
        if not (unvisited & masks[0]):
            dead.add(key)
            return False
        cur_bit = 1 << cur
        rest = unvisited
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            avail = masks[v] & (unvisited | cur_bit | home)
            if avail.bit_count() < 2:
                dead.add(key)
                return False
        candidates = masks[cur] & unvisited
        ranked = []
        while candidates:
            w = (candidates & -candidates).bit_length() - 1
            candidates &= candidates - 1
            ranked.append(((masks[w] & unvisited).bit_count(), w))
        for _, w in sorted(ranked):
            order.append(w)
            if search(w, visited | (1 << w)):
                return True
            order.pop()
        dead.add(key)
        return False

    if not search(0, 1):
        return None
    order.append(0)
    edge_ids = {}
    for e, (u, v) in enumerate(g.endpoints):
        edge_ids[(u, v)] = e
        edge_ids[(v, u)] = e
    edges = tuple(edge_ids[(order[i], order[i + 1])] for i in range(len(order) - 1))
    trail = Trail(g, tuple(order), edges)
    trail.validate()
    return trail


def is_hamiltonian(g: SimpleGraph) -> bool:
    return find_hamiltonian_cycle(g) is not None
