"""Immutable multigraph / simple graph model with structural editing.

Vertices are the dense integers ``0..n-1`` and edges carry dense integer ids
``0..m-1``; parallel edges get distinct ids and loops are allowed (a loop
contributes 2 to the degree of its vertex).  All graphs are immutable after
construction: editing operations (:meth:`Multigraph.subdivide`,
:meth:`Multigraph.suppress`, :meth:`Multigraph.contract`) return new graphs
together with the id renumbering they induced, so callers can track any edge
or vertex through an edit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import GraphError, UnknownEdgeError, UnknownVertexError

#: Default cap for the backtracking isomorphism search.
ISOMORPHISM_SIZE_GUARD = 32


class Multigraph:
    """Undirected multigraph on vertices ``0..n-1``.

    Edge ``i`` joins the unordered pair ``endpoints[i]``; pairs are stored
    normalized with the smaller vertex first.
    """

    __slots__ = ("n", "endpoints", "_incidence", "_degrees")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        normalized = []
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise UnknownVertexError(f"edge ({u}, {v}) leaves vertex range 0..{n - 1}")
            normalized.append((u, v) if u <= v else (v, u))
        self.n = n
        self.endpoints: tuple[tuple[int, int], ...] = tuple(normalized)
        self._incidence: Optional[tuple] = None
        self._degrees: Optional[tuple[int, ...]] = None

    # -- basic accessors ---------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.endpoints)

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise UnknownVertexError(f"vertex {v} not in 0..{self.n - 1}")

    def check_edge(self, e: int) -> None:
        if not (0 <= e < len(self.endpoints)):
            raise UnknownEdgeError(f"edge {e} not in 0..{len(self.endpoints) - 1}")

    def is_loop(self, e: int) -> bool:
        self.check_edge(e)
        u, v = self.endpoints[e]
        return u == v

    def other_end(self, e: int, v: int) -> int:
        """The endpoint of ``e`` opposite ``v`` (``v`` itself for a loop)."""
        a, b = self.endpoints[e]
        if v == a:
            return b
        if v == b:
            return a
        raise UnknownVertexError(f"vertex {v} is not an endpoint of edge {e}")

    def incidence(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per-vertex tuple of ``(edge_id, other_endpoint)``; loops listed once."""
        if self._incidence is None:
            inc: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
            for e, (u, v) in enumerate(self.endpoints):
                inc[u].append((e, v))
                if u != v:
                    inc[v].append((e, u))
            self._incidence = tuple(tuple(entries) for entries in inc)
        return self._incidence

    def degree(self, v: int) -> int:
        """Number of edge endpoints at ``v``; a loop contributes 2."""
        self.check_vertex(v)
        return self.degrees()[v]

    def degrees(self) -> tuple[int, ...]:
        if self._degrees is None:
            deg = [0] * self.n
            for u, v in self.endpoints:
                deg[u] += 1
                deg[v] += 1
            self._degrees = tuple(deg)
        return self._degrees

    def incident_edges(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return tuple(e for e, _ in self.incidence()[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Distinct neighbors of ``v`` through non-loop edges, ascending."""
        self.check_vertex(v)
        return tuple(sorted({w for _, w in self.incidence()[v] if w != v}))

    def multiplicity(self, u: int, v: int) -> int:
        """Number of edges joining ``u`` and ``v`` (loop count for ``u == v``)."""
        pair = (u, v) if u <= v else (v, u)
        return sum(1 for p in self.endpoints if p == pair)

    def loop_count(self, v: int) -> int:
        return sum(1 for u, w in self.endpoints if u == v and w == v)

    # -- structural queries ------------------------------------------------

    def is_connected(self) -> bool:
        """Reachability over non-loop edges; the empty graph counts as connected."""
        if self.n <= 1:
            return True
        inc = self.incidence()
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            x = stack.pop()
            for _, w in inc[x]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == self.n

    def component_of(self, v: int, forbidden_edges: frozenset[int] = frozenset()) -> frozenset[int]:
        """Vertices reachable from ``v`` avoiding ``forbidden_edges``."""
        self.check_vertex(v)
        inc = self.incidence()
        seen = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for e, w in inc[x]:
                if e not in forbidden_edges and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return frozenset(seen)

    # -- editing (each returns a new graph plus renumbering maps) -----------

    def subdivide(self, e: int) -> "SubdivisionResult":
        """Replace edge ``e`` by a path of two edges through a new vertex.

        Subdividing a loop yields two parallel edges between the loop vertex
        and the new vertex.  Edge ids are compacted; the returned
        ``edge_map`` sends every surviving old id to its new id.
        """
        self.check_edge(e)
        u, v = self.endpoints[e]
        new_vertex = self.n
        new_edges = []
        edge_map = {}
        for old, pair in enumerate(self.endpoints):
            if old == e:
                continue
            edge_map[old] = len(new_edges)
            new_edges.append(pair)
        first = len(new_edges)
        new_edges.append((u, new_vertex))
        second = len(new_edges)
        new_edges.append((v, new_vertex))
        graph = Multigraph(self.n + 1, new_edges)
        return SubdivisionResult(graph, new_vertex, first, second, edge_map)

    def suppress(self, v: int) -> "SuppressionResult":
        """Remove a degree-2 vertex and merge its two edges into one.

        The merged edge joins the two former neighbors and becomes a loop
        when they coincide.  Fails for vertices of degree other than 2 and
        for loop-incident vertices.  Vertex and edge ids are compacted; the
        returned maps track every surviving id.
        """
        self.check_vertex(v)
        if self.loop_count(v):
            raise GraphError(f"cannot suppress vertex {v}: it carries a loop")
        if self.degree(v) != 2:
            raise GraphError(f"cannot suppress vertex {v}: degree {self.degree(v)} != 2")
        (e1, w1), (e2, w2) = self.incidence()[v]
        vertex_map = {}
        for old in range(self.n):
            if old != v:
                vertex_map[old] = len(vertex_map)
        new_edges = []
        edge_map = {}
        for old, (a, b) in enumerate(self.endpoints):
            if old in (e1, e2):
                continue
            edge_map[old] = len(new_edges)
            new_edges.append((vertex_map[a], vertex_map[b]))
        merged = len(new_edges)
        new_edges.append((vertex_map[w1], vertex_map[w2]))
        graph = Multigraph(self.n - 1, new_edges)
        return SuppressionResult(graph, merged, vertex_map, edge_map)

    def contract(self, r_edges: Iterable[int]) -> "ContractionMap":
        """Contract the spanning subgraph with exactly the edges ``r_edges``.

        Each component of that subgraph becomes one target vertex; every
        source edge between two distinct components contributes its own
        target edge (so parallel edges survive), while intra-component edges
        and loops disappear.
        """
        r = set(r_edges)
        for e in r:
            self.check_edge(e)
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in r:
            u, v = self.endpoints[e]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
        roots = sorted({find(x) for x in range(self.n)})
        fiber_index = {root: i for i, root in enumerate(roots)}
        vertex_map = tuple(fiber_index[find(x)] for x in range(self.n))
        target_edges = []
        edge_map = {}
        for e, (u, v) in enumerate(self.endpoints):
            fu, fv = vertex_map[u], vertex_map[v]
            if fu != fv:
                edge_map[e] = len(target_edges)
                target_edges.append((fu, fv))
        target = Multigraph(len(roots), target_edges)
        cmap = ContractionMap(self, target, vertex_map, edge_map, frozenset(r))
        ok, reason = cmap.validate()
        if not ok:
            raise GraphError(f"contraction produced an inconsistent map: {reason}")
        return cmap

    def with_edge_added(self, u: int, v: int) -> tuple["Multigraph", int]:
        self.check_vertex(u)
        self.check_vertex(v)
        graph = Multigraph(self.n, self.endpoints + ((u, v) if u <= v else (v, u),))
        return graph, graph.edge_count - 1

    def without_edges(self, edge_ids: Iterable[int]) -> tuple["Multigraph", dict[int, int]]:
        """Delete edges, compacting ids; vertices stay put."""
        drop = set(edge_ids)
        for e in drop:
            self.check_edge(e)
        new_edges = []
        edge_map = {}
        for old, pair in enumerate(self.endpoints):
            if old in drop:
                continue
            edge_map[old] = len(new_edges)
            new_edges.append(pair)
        return Multigraph(self.n, new_edges), edge_map

    # -- equality / hashing (labeled, structural) ---------------------------

    def sorted_edge_multiset(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.endpoints))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and self.sorted_edge_multiset() == other.sorted_edge_multiset()

    def __hash__(self) -> int:
        return hash((self.n, self.sorted_edge_multiset()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, edges={list(self.endpoints)!r})"


class SimpleGraph(Multigraph):
    """Loop-free multigraph without parallel edges."""

    __slots__ = ("_adjacency",)

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        super().__init__(n, edges)
        seen = set()
        for u, v in self.endpoints:
            if u == v:
                raise GraphError(f"loop at vertex {u} not allowed in a simple graph")
            if (u, v) in seen:
                raise GraphError(f"parallel edge ({u}, {v}) not allowed in a simple graph")
            seen.add((u, v))
        self._adjacency: Optional[tuple[int, ...]] = None

    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks."""
        if self._adjacency is None:
            masks = [0] * self.n
            for u, v in self.endpoints:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            self._adjacency = tuple(masks)
        return self._adjacency

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self.adjacency_masks()[u] >> v & 1)

    def edge_id(self, u: int, v: int) -> int:
        pair = (u, v) if u <= v else (v, u)
        try:
            return self.endpoints.index(pair)
        except ValueError:
            raise UnknownEdgeError(f"no edge joins {u} and {v}") from None

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2


@dataclass(frozen=True)
class SubdivisionResult:
    graph: Multigraph
    new_vertex: int
    first_edge: int
    second_edge: int
    edge_map: dict[int, int]


@dataclass(frozen=True)
class SuppressionResult:
    graph: Multigraph
    merged_edge: int
    vertex_map: dict[int, int]
    edge_map: dict[int, int]


@dataclass(frozen=True)
class ContractionMap:
    """Certificate that ``target`` is ``source`` contracted along ``r_edges``.

    ``vertex_map`` sends each source vertex to its fiber's target vertex;
    ``edge_map`` is defined exactly on the source edges joining two distinct
    fibers and is a bijection onto the target edges.
    """

    source: Multigraph
    target: Multigraph
    vertex_map: tuple[int, ...]
    edge_map: dict[int, int]
    r_edges: frozenset[int]

    def validate(self) -> tuple[bool, Optional[str]]:
        src, tgt = self.source, self.target
        if len(self.vertex_map) != src.n:
            return False, "vertex_map size mismatch"
        if any(not (0 <= t < tgt.n) for t in self.vertex_map):
            return False, "vertex_map leaves target range"
        if set(self.vertex_map) != set(range(tgt.n)):
            return False, "vertex_map not surjective"
        # Fibers must be the components of the spanning subgraph on r_edges.
        fibers: dict[int, set[int]] = {}
        for v, t in enumerate(self.vertex_map):
            fibers.setdefault(t, set()).add(v)
        for t, fiber in fibers.items():
            start = next(iter(fiber))
            seen = {start}
            stack = [start]
            inc = src.incidence()
            while stack:
                x = stack.pop()
                for e, w in inc[x]:
                    if e in self.r_edges and w in fiber and w not in seen:
                        seen.add(w)
                        stack.append(w)
            if seen != fiber:
                return False, f"fiber of target vertex {t} is not connected via r_edges"
        for e in self.r_edges:
            u, v = src.endpoints[e]
            if self.vertex_map[u] != self.vertex_map[v]:
                return False, f"r_edge {e} joins two distinct fibers"
        # Inter-fiber edges map bijectively onto target edges, respecting endpoints.
        expected = {}
        for e, (u, v) in enumerate(src.endpoints):
            fu, fv = self.vertex_map[u], self.vertex_map[v]
            if fu != fv:
                expected[e] = (fu, fv) if fu <= fv else (fv, fu)
        if set(expected) != set(self.edge_map):
            return False, "edge_map domain is not the set of inter-fiber edges"
        if sorted(self.edge_map.values()) != list(range(tgt.edge_count)):
            return False, "edge_map is not a bijection onto target edges"
        for e, te in self.edge_map.items():
            if tgt.endpoints[te] != expected[e]:
                return False, f"edge {e} maps to target edge with wrong endpoints"
        return True, None


# -- isomorphism --------------------------------------------------------------


def _refine_colors(g: Multigraph) -> tuple[int, ...]:
    """Iterated neighborhood refinement; equal colors are a necessary condition
    for two vertices to correspond under an isomorphism.

    Colors are renumbered by sorted profile each round, which makes them
    comparable across different graphs.
    """
    profiles = [(g.degrees()[v], g.loop_count(v)) for v in range(g.n)]
    table = {p: i for i, p in enumerate(sorted(set(profiles)))}
    colors = [table[p] for p in profiles]
    for _ in range(g.n):
        profiles = [
            (colors[v], tuple(sorted(colors[w] for _, w in g.incidence()[v] if w != v)))
            for v in range(g.n)
        ]
        table = {p: i for i, p in enumerate(sorted(set(profiles)))}
        new = [table[p] for p in profiles]
        if new == colors:
            break
        colors = new
    return tuple(colors)


def _multiplicity_rows(g: Multigraph) -> list[dict[int, int]]:
    rows: list[dict[int, int]] = [dict() for _ in range(g.n)]
    for u, v in g.endpoints:
        rows[u][v] = rows[u].get(v, 0) + 1
        if u != v:
            rows[v][u] = rows[v].get(u, 0) + 1
    return rows


def find_isomorphism(
    a: Multigraph, b: Multigraph, *, size_guard: int = ISOMORPHISM_SIZE_GUARD
) -> Optional[tuple[int, ...]]:
    """A degree- and multiplicity-preserving vertex bijection, or ``None``.

    Backtracking with color refinement pruning; intended for desk-scale
    graphs only, hence the size guard.
    """
    if a.n > size_guard or b.n > size_guard:
        raise GraphError(f"isomorphism search capped at {size_guard} vertices")
    if a.n != b.n or a.edge_count != b.edge_count:
        return None
    if sorted(a.degrees()) != sorted(b.degrees()):
        return None
    ca, cb = _refine_colors(a), _refine_colors(b)
    if sorted(ca) != sorted(cb):
        return None
    rows_a, rows_b = _multiplicity_rows(a), _multiplicity_rows(b)
    # Map vertices of a in order of ascending color-class size (most constrained first).
    class_size = {c: cb.count(c) for c in set(cb)}
    order = sorted(range(a.n), key=lambda v: (class_size[ca[v]], ca[v], v))
    mapping: list[int] = [-1] * a.n
    used = [False] * b.n

    def extend(idx: int) -> bool:
        if idx == a.n:
            return True
        v = order[idx]
        for w in range(b.n):
            if used[w] or cb[w] != ca[v]:
                continue
            if rows_a[v].get(v, 0) != rows_b[w].get(w, 0):
                continue
            ok = True
            for prev_idx in range(idx):
                p = order[prev_idx]
                if rows_a[v].get(p, 0) != rows_b[w].get(mapping[p], 0):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if extend(idx + 1):
                return True
            mapping[v] = -1
            used[w] = False
        return False

    if not extend(0):
        return None
    result = tuple(mapping)
    assert _is_isomorphism(a, b, result)
    return result


def _is_isomorphism(a: Multigraph, b: Multigraph, mapping: Sequence[int]) -> bool:
    if sorted(mapping) != list(range(b.n)):
        return False
    mapped = sorted(
        (min(mapping[u], mapping[v]), max(mapping[u], mapping[v])) for u, v in a.endpoints
    )
    return tuple(mapped) == b.sorted_edge_multiset()


def isomorphic(a: Multigraph, b: Multigraph, *, size_guard: int = ISOMORPHISM_SIZE_GUARD) -> bool:
    return find_isomorphism(a, b, size_guard=size_guard) is not None


def _twins(rows: list[dict[int, int]], v: int, w: int) -> bool:
    """Whether swapping ``v`` and ``w`` is an automorphism (equal loops and
    equal multiplicities to every other vertex)."""
    if rows[v].get(v, 0) != rows[w].get(w, 0):
        return False
    keys = (set(rows[v]) | set(rows[w])) - {v, w}
    return all(rows[v].get(x, 0) == rows[w].get(x, 0) for x in keys)


def canonical_labeling(g: Multigraph, *, size_guard: int = ISOMORPHISM_SIZE_GUARD) -> tuple[int, ...]:
    """A relabeling permutation depending only on the isomorphism class:
    ``relabel(a, canonical_labeling(a)) == relabel(b, canonical_labeling(b))``
    whenever ``a`` and ``b`` are isomorphic.

    Backtracking over refinement-color-minimal orderings, taking the minimal
    adjacency code over the explored leaves; exponential in the worst case,
    fine at desk scale.
    """
    n = g.n
    if n > size_guard:
        raise GraphError(f"canonical labeling capped at {size_guard} vertices")
    if n == 0:
        return ()
    colors = _refine_colors(g)
    rows = _multiplicity_rows(g)
    best: dict = {"code": None, "perm": None}

    def extend(prefix: list[int], remaining: list[int], code: tuple) -> None:
        if not remaining:
            if best["code"] is None or code < best["code"]:
                best["code"] = code
                best["perm"] = tuple(prefix)
            return
        keyed = [
            (
                (colors[v], rows[v].get(v, 0), tuple(rows[v].get(u, 0) for u in prefix)),
                v,
            )
            for v in remaining
        ]
        min_key = min(key for key, _ in keyed)
        new_code = code + (min_key,)
        if best["code"] is not None and new_code > best["code"][: len(new_code)]:
            return
        # Twin candidates (interchangeable by a transposition automorphism)
        # yield identical subtrees; explore one representative per twin class.
        chosen: list[int] = []
        for key, v in keyed:
            if key != min_key:
                continue
            if any(_twins(rows, v, w) for w in chosen):
                continue
            chosen.append(v)
        for v in chosen:
            extend(prefix + [v], [u for u in remaining if u != v], new_code)

    extend([], list(range(n)), ())
    out = [0] * n
    for position, old in enumerate(best["perm"]):
        out[old] = position
    return tuple(out)


def relabel(g: Multigraph, permutation: Sequence[int]) -> Multigraph:
    """The graph with vertex ``v`` renamed to ``permutation[v]``."""
    if sorted(permutation) != list(range(g.n)):
        raise GraphError("relabeling must be a permutation of the vertices")
    edges = [(permutation[u], permutation[v]) for u, v in g.endpoints]
    cls = SimpleGraph if isinstance(g, SimpleGraph) else Multigraph
    return cls(g.n, edges)


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, list(itertools.combinations(range(n), 2)))


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise GraphError("cycle graphs need at least 3 vertices")
    return SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> SimpleGraph:
    return SimpleGraph(leaves + 1, [(0, i + 1) for i in range(leaves)])
