"""The core of a multigraph: strip pendant edges, suppress degree-2 vertices.

``core`` records a full back-mapping so that trails found in the core can be
lifted to the original graph: every core edge expands to an edge-disjoint
path of original edges, every original non-pendant edge lies in exactly one
expansion, and each suppressed vertex remembers the core edge whose
expansion swallowed it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import (
    DegenerateCoreError,
    DisconnectedGraphError,
    LiftFailedError,
    NotEssentially3EdgeConnectedError,
)
from .invariants import edge_connectivity, find_essential_cut, vertices_dominate_edges
from .multigraph import Multigraph
from .trails import Trail


class CoreLocation(NamedTuple):
    """Where an original vertex lives in the core: a core vertex, or the
    interior of a core edge's expansion."""

    kind: str  # "vertex" | "edge"
    index: int


@dataclass(frozen=True)
class CoreMap:
    """Correspondence between a multigraph and its core.

    ``edge_expansion[ce]`` lists original edge ids along the path the core
    edge ``ce`` contracts; ``expansion_vertices(ce)`` gives the matching
    original vertex path, oriented so its first vertex maps to the lower
    core endpoint.
    """

    original: Multigraph
    core: Multigraph
    removed_pendants: frozenset[int]
    vertex_image: dict[int, int]
    core_vertex_origin: tuple[int, ...]
    edge_expansion: dict[int, tuple[int, ...]]
    expansion_paths: dict[int, tuple[int, ...]]
    suppressed_location: dict[int, int]

    def expansion_vertices(self, core_edge: int) -> tuple[int, ...]:
        return self.expansion_paths[core_edge]

    def owner_of_edge(self, original_edge: int) -> Optional[int]:
        """The core edge whose expansion contains the original edge."""
        for ce, path in self.edge_expansion.items():
            if original_edge in path:
                return ce
        return None

    def validate(self) -> None:
        h, c = self.original, self.core
        seen: set[int] = set()
        for ce in range(c.edge_count):
            epath = self.edge_expansion[ce]
            vpath = self.expansion_paths[ce]
            if len(vpath) != len(epath) + 1 or not epath:
                raise LiftFailedError("expansion shape mismatch")
            if seen & set(epath):
                raise LiftFailedError("expansions are not edge-disjoint")
            seen.update(epath)
            for i, e in enumerate(epath):
                pair = h.endpoints[e]
                step = (vpath[i], vpath[i + 1])
                if pair != step and pair != (step[1], step[0]):
                    raise LiftFailedError("expansion path is not a walk in the original")
            a, b = c.endpoints[ce]
            if (self.vertex_image.get(vpath[0]), self.vertex_image.get(vpath[-1])) not in (
                (a, b),
                (b, a),
            ):
                raise LiftFailedError("expansion endpoints disagree with the core edge")
        if seen | self.removed_pendants != set(range(h.edge_count)) or (
            seen & self.removed_pendants
        ):
            raise LiftFailedError("edge accounting failed: expansions + pendants != all edges")


def core(
    h: Multigraph, *, rng: Optional[random.Random] = None, check: bool = True
) -> CoreMap:
    """Remove pendant edges to a fixed point, then suppress every degree-2
    vertex, recording the full back-mapping.

    ``rng`` shuffles the processing order (the result must not depend on it;
    this exists so order-independence is testable).  With ``check`` the input
    must be essentially 3-edge-connected and the resulting core is asserted
    3-edge-connected; ``check=False`` computes the same decomposition without
    those guarantees.
    """
    if not h.is_connected():
        raise DisconnectedGraphError("core is defined for connected multigraphs")

    def ordered(items):
        items = list(items)
        if rng is not None:
            rng.shuffle(items)
        return items

    # Phase 1: iterated pendant-edge removal (the 2-core of the graph).
    alive_edges = set(range(h.edge_count))
    removed: set[int] = set()
    degrees = list(h.degrees())
    inc = h.incidence()
    changed = True
    while changed:
        changed = False
        for v in ordered(range(h.n)):
            if degrees[v] != 1:
                continue
            (e, w) = next(
                (e, w) for e, w in inc[v] if e in alive_edges
            )
            alive_edges.discard(e)
            removed.add(e)
            degrees[v] -= 1
            degrees[w] -= 1
            changed = True
    alive_vertices = {v for v in range(h.n) if degrees[v] > 0}

    # Phase 2: suppress degree-2 vertices by merging their two thread edges.
    # Threads carry the original edge path and vertex path as they merge.
    threads: dict[int, dict] = {}
    for e in alive_edges:
        u, v = h.endpoints[e]
        threads[e] = {"u": u, "v": v, "epath": [e], "vpath": [u, v], "absorbed": []}
    incident: dict[int, set[int]] = {v: set() for v in alive_vertices}
    for t, data in threads.items():
        incident[data["u"]].add(t)
        if data["v"] != data["u"]:
            incident[data["v"]].add(t)

    def thread_degree(v: int) -> int:
        return sum(2 if threads[t]["u"] == threads[t]["v"] else 1 for t in incident[v])

    next_tid = h.edge_count
    progress = True
    while progress:
        progress = False
        for v in ordered(list(alive_vertices)):
            if v not in incident or thread_degree(v) != 2:
                continue
            ts = list(incident[v])
            if len(ts) != 2:
                continue  # a loop thread at v: nothing to suppress
            t1, t2 = ts
            d1, d2 = threads.pop(t1), threads.pop(t2)
            if d1["u"] == v:
                d1 = _flip(d1)
            if d2["v"] == v:
                d2 = _flip(d2)
            merged = {
                "u": d1["u"],
                "v": d2["v"],
                "epath": d1["epath"] + d2["epath"],
                "vpath": d1["vpath"] + d2["vpath"][1:],
                "absorbed": d1["absorbed"] + [v] + d2["absorbed"],
            }
            tid = next_tid
            next_tid += 1
            threads[tid] = merged
            for x in (d1["u"], d2["v"]):
                incident[x].discard(t1)
                incident[x].discard(t2)
            incident[merged["u"]].add(tid)
            if merged["v"] != merged["u"]:
                incident[merged["v"]].add(tid)
            alive_vertices.discard(v)
            del incident[v]
            progress = True

    core_vertices = sorted(alive_vertices)
    if len(core_vertices) <= 1:
        raise DegenerateCoreError(
            f"core collapsed to {len(core_vertices)} vertices; "
            "the input has no vertex of degree 3 or more after pendant removal"
        )
    if check:
        cut = find_essential_cut(h, 3)
        if cut is not None:
            raise NotEssentially3EdgeConnectedError(
                f"essential edge-cut of size {len(cut)} found", cut=cut
            )

    vertex_image = {v: i for i, v in enumerate(core_vertices)}
    core_edges = []
    edge_expansion: dict[int, tuple[int, ...]] = {}
    expansion_paths: dict[int, tuple[int, ...]] = {}
    suppressed_location: dict[int, int] = {}
    # Deterministic core edge order regardless of processing order: sort
    # threads by their original edge path (each original edge appears once).
    for data in sorted(threads.values(), key=lambda d: min(d["epath"])):
        u, v = data["u"], data["v"]
        epath, vpath = data["epath"], data["vpath"]
        if vertex_image[u] > vertex_image[v]:
            epath, vpath = epath[::-1], vpath[::-1]
            u, v = v, u
        ce = len(core_edges)
        core_edges.append((vertex_image[u], vertex_image[v]))
        edge_expansion[ce] = tuple(epath)
        expansion_paths[ce] = tuple(vpath)
        for x in data["absorbed"]:
            suppressed_location[x] = ce
    core_graph = Multigraph(len(core_vertices), core_edges)
    cm = CoreMap(
        original=h,
        core=core_graph,
        removed_pendants=frozenset(removed),
        vertex_image=vertex_image,
        core_vertex_origin=tuple(core_vertices),
        edge_expansion=edge_expansion,
        expansion_paths=expansion_paths,
        suppressed_location=suppressed_location,
    )
    cm.validate()
    if check and edge_connectivity(core_graph) < 3:
        raise LiftFailedError(
            "core of an essentially 3-edge-connected multigraph must be 3-edge-connected"
        )
    return cm


def _flip(data: dict) -> dict:
    return {
        "u": data["v"],
        "v": data["u"],
        "epath": data["epath"][::-1],
        "vpath": data["vpath"][::-1],
        "absorbed": data["absorbed"][::-1],
    }


def project_vertex(cm: CoreMap, v: int) -> CoreLocation:
    """The core location of an original vertex: its core vertex when it
    survived suppression, else the core edge whose expansion contains it."""
    cm.original.check_vertex(v)
    if v in cm.vertex_image:
        return CoreLocation("vertex", cm.vertex_image[v])
    if v in cm.suppressed_location:
        return CoreLocation("edge", cm.suppressed_location[v])
    from .errors import NoCoreLocationError

    raise NoCoreLocationError(f"vertex {v} was stripped with the pendant edges")


def lift_walk(
    cm: CoreMap, vertices: tuple[int, ...], edges: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Expand a core walk into the original graph, replacing each core edge
    by its expansion path oriented to match the walk."""
    origin = cm.core_vertex_origin
    out_vertices = [origin[vertices[0]]]
    out_edges: list[int] = []
    for i, ce in enumerate(edges):
        vpath = list(cm.expansion_paths[ce])
        epath = list(cm.edge_expansion[ce])
        if origin[vertices[i]] == vpath[0]:
            pass
        elif origin[vertices[i]] == vpath[-1]:
            vpath.reverse()
            epath.reverse()
        else:
            raise LiftFailedError("walk vertex does not match expansion endpoint")
        out_vertices.extend(vpath[1:])
        out_edges.extend(epath)
    return tuple(out_vertices), tuple(out_edges)


def lift_closed_trail(cm: CoreMap, t: Trail) -> Trail:
    """Lift a closed trail of the core to a closed trail of the original.

    When the input spans the core, the lifted trail is checked to dominate
    every original edge (the executable content of the core's trail-lifting
    guarantee).
    """
    if t.host is not cm.core and t.host != cm.core:
        raise LiftFailedError("trail does not live in this core")
    t.validate()
    if not t.is_closed:
        raise LiftFailedError("only closed trails lift")
    vertices, edges = lift_walk(cm, t.vertices, t.edges)
    lifted = Trail(cm.original, vertices, edges)
    lifted.validate()
    if not lifted.is_closed:
        raise LiftFailedError("lift of a closed trail must be closed")
    if t.is_spanning():
        if not vertices_dominate_edges(cm.original, lifted.vertex_set()):
            raise LiftFailedError("lift of a spanning closed trail failed to dominate")
    return lifted
