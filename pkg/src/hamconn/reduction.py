"""From dominating triples to hamiltonian paths, via the core.

The pipeline realizes the reduction that proves hamiltonian connectivity
for 3-connected claw-free line graphs with small domination number:

1. take the multigraph preimage H of the input line graph g;
2. compute the core of H and project the two terminal edges onto core
   edges;
3. build ``h_n`` (the core, or the core with both projected edges
   subdivided and the subdivision vertices joined by a new edge);
4. project the dominating triple the same way and collect the at most six
   endpoints ``z`` of the projected edges;
5. find a closed trail of ``h_n`` through the new edge visiting ``z``;
6. convert that trail into an internally dominating trail of H with the
   prescribed terminal edges, and then into a hamiltonian path of g.

Every construction step is revalidated; a failed validation raises
``LiftFailedError`` and is treated as a bug, never silently accepted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import CoreMap, core, lift_walk, project_vertex
from .errors import (
    DegenerateCoreError,
    GraphError,
    LiftFailedError,
    NoCoreLocationError,
    TrailNotFoundError,
)
from .invariants import DominatingSet, edge_connectivity, edges_dominate
from .linegraph import LineGraphMap, line_graph, preimage
from .multigraph import Multigraph, SimpleGraph
from .trails import IdtWitness, Trail, find_closed_trail_through


# -- edge projection -----------------------------------------------------------


def _edge_owner_index(cm: CoreMap) -> dict[int, int]:
    owner = {}
    for ce, path in cm.edge_expansion.items():
        for e in path:
            owner[e] = ce
    return owner


def _pendant_ends(cm: CoreMap, e: int) -> tuple[int, int]:
    """(leaf, support) of a removed pendant edge, by original degree."""
    u, v = cm.original.endpoints[e]
    du, dv = cm.original.degree(u), cm.original.degree(v)
    if du == dv:
        raise NoCoreLocationError(
            f"pendant edge {e} joins two vertices of equal degree; no support vertex"
        )
    return (u, v) if du < dv else (v, u)


def project_edge(cm: CoreMap, e: int) -> int:
    """The core edge standing in for an original edge.

    An edge surviving into the core projects to itself; an edge inside an
    expansion projects to the owning core edge; a pendant edge projects to
    the smallest-id non-loop core edge at the image of its support vertex
    (or to the owning expansion when the support itself was suppressed).
    """
    cm.original.check_edge(e)
    owner = _edge_owner_index(cm)
    if e in owner:
        return owner[e]
    if e not in cm.removed_pendants:
        raise LiftFailedError(f"edge {e} is neither expanded nor pendant")
    _, support = _pendant_ends(cm, e)
    loc = project_vertex(cm, support)
    if loc.kind == "edge":
        return loc.index
    for ce, _ in sorted(cm.core.incidence()[loc.index]):
        if not cm.core.is_loop(ce):
            return ce
    raise NoCoreLocationError(f"support of pendant edge {e} has only loops in the core")


# -- building h_n ----------------------------------------------------------------


@dataclass(frozen=True)
class SubdivisionRecord:
    """Bookkeeping for one subdivided core edge inside ``h_n``."""

    core_edge: int
    new_vertex: int
    half_edges: tuple[tuple[int, int], ...]  # (h_n edge id, outer core vertex)


@dataclass(frozen=True)
class HnConstruction:
    """The trail-search host ``h_n`` plus maps back to the core.

    ``edge_origin[e]`` tags every ``h_n`` edge as ``("core", ce)`` for an
    unsubdivided core edge, ``("half", ce, outer_vertex)`` for one half of a
    subdivided edge, or ``("new",)`` for the joining edge.
    """

    graph: Multigraph
    e_n: int
    subdivided: dict[int, SubdivisionRecord]
    edge_origin: dict[int, tuple]


def build_hn(cm: CoreMap, e0_1: int, e0_2: int) -> HnConstruction:
    """The core when the projected edges coincide; otherwise the core with
    both projected edges subdivided and the new vertices joined.

    The result is checked 3-edge-connected.
    """
    c = cm.core
    c.check_edge(e0_1)
    c.check_edge(e0_2)
    if e0_1 == e0_2:
        origin = {e: ("core", e) for e in range(c.edge_count)}
        hn = HnConstruction(c, e0_1, {}, origin)
    else:
        a1, b1 = c.endpoints[e0_1]
        res1 = c.subdivide(e0_1)
        e0_2_shifted = res1.edge_map[e0_2]
        a2, b2 = res1.graph.endpoints[e0_2_shifted]
        half1 = {res1.first_edge: a1, res1.second_edge: b1}
        res2 = res1.graph.subdivide(e0_2_shifted)
        half2 = {res2.first_edge: a2, res2.second_edge: b2}
        graph, e_n = res2.graph.with_edge_added(res1.new_vertex, res2.new_vertex)
        origin: dict[int, tuple] = {e_n: ("new",)}
        for ce in range(c.edge_count):
            if ce in (e0_1, e0_2):
                continue
            origin[res2.edge_map[res1.edge_map[ce]]] = ("core", ce)
        rec1_halves = []
        for he, outer in half1.items():
            shifted = res2.edge_map[he]
            origin[shifted] = ("half", e0_1, outer)
            rec1_halves.append((shifted, outer))
        rec2_halves = []
        for he, outer in half2.items():
            origin[he] = ("half", e0_2, outer)
            rec2_halves.append((he, outer))
        subdivided = {
            e0_1: SubdivisionRecord(e0_1, res1.new_vertex, tuple(sorted(rec1_halves))),
            e0_2: SubdivisionRecord(e0_2, res2.new_vertex, tuple(sorted(rec2_halves))),
        }
        hn = HnConstruction(graph, e_n, subdivided, origin)
    if edge_connectivity(hn.graph) < 3:
        raise LiftFailedError("h_n must be 3-edge-connected when built from a valid core")
    return hn


def pick_z(cm: CoreMap, f_edges: tuple[int, ...]) -> frozenset[int]:
    """Endpoints, in ``h_n``, of the projections of the dominating edges.

    Original core vertices keep their ids under subdivision, so the result
    is valid in every ``h_n`` built from this core.  At most six vertices.
    """
    z: set[int] = set()
    for f in f_edges:
        f0 = project_edge(cm, f)
        u, v = cm.core.endpoints[f0]
        z.add(u)
        z.add(v)
    if len(z) > 6:
        raise LiftFailedError("three projected edges cannot have more than 6 endpoints")
    return frozenset(z)


# -- pipeline context -------------------------------------------------------------


@dataclass(frozen=True)
class PipelineContext:
    """Everything the trail-to-IDT conversion needs to look at."""

    g: SimpleGraph
    h: Multigraph
    cm: CoreMap
    e1: int
    e2: int
    e0_1: int
    e0_2: int
    hn: HnConstruction
    z: frozenset[int]

    @property
    def h_n(self) -> Multigraph:
        return self.hn.graph

    @property
    def e_n(self) -> int:
        return self.hn.e_n

    @property
    def subdivision_record(self) -> Optional[tuple[SubdivisionRecord, ...]]:
        if not self.hn.subdivided:
            return None
        return tuple(self.hn.subdivided[ce] for ce in sorted(self.hn.subdivided))


# -- terminal attachments -----------------------------------------------------------


@dataclass(frozen=True)
class _Attachment:
    """How a terminal edge hangs off its projected core edge.

    ``kind == "on"`` means the edge is the ``index``-th edge (1-based) of the
    expansion; ``kind == "pendant"`` means a pendant edge attached at the
    expansion vertex with the given path index.
    """

    core_edge: int
    kind: str
    index: int
    pendant_edge: Optional[int] = None
    leaf: Optional[int] = None


def _attachment(cm: CoreMap, e: int) -> _Attachment:
    owner = _edge_owner_index(cm)
    if e in owner:
        ce = owner[e]
        j = cm.edge_expansion[ce].index(e) + 1
        return _Attachment(ce, "on", j)
    leaf, support = _pendant_ends(cm, e)
    loc = project_vertex(cm, support)
    if loc.kind == "edge":
        ce = loc.index
        p = cm.expansion_paths[ce].index(support)
    else:
        ce = project_edge(cm, e)
        vpath = cm.expansion_paths[ce]
        p = 0 if cm.vertex_image[vpath[0]] == loc.index else len(vpath) - 1
        if cm.vertex_image[vpath[p]] != loc.index:
            raise LiftFailedError("support vertex is not an endpoint of its projected edge")
    return _Attachment(ce, "pendant", p, pendant_edge=e, leaf=leaf)


def _piece(cm: CoreMap, att: _Attachment, toward_low: bool) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The terminal sub-trail: starts with the terminal edge at its tip and
    walks along the expansion to one end of the core edge."""
    vpath = cm.expansion_paths[att.core_edge]
    epath = cm.edge_expansion[att.core_edge]
    if att.kind == "on":
        j = att.index
        if toward_low:
            verts = (vpath[j],) + tuple(reversed(vpath[:j]))
            edges = tuple(reversed(epath[:j]))
        else:
            verts = (vpath[j - 1],) + tuple(vpath[j:])
            edges = tuple(epath[j - 1 :])
    else:
        p = att.index
        if toward_low:
            verts = (att.leaf,) + tuple(reversed(vpath[: p + 1]))
            edges = (att.pendant_edge,) + tuple(reversed(epath[:p]))
        else:
            verts = (att.leaf,) + tuple(vpath[p:])
            edges = (att.pendant_edge,) + tuple(epath[p:])
    return verts, edges


# -- trail to IDT --------------------------------------------------------------------


def _rotate_closed(trail: Trail, edge_pos: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    edges = trail.edges[edge_pos:] + trail.edges[:edge_pos]
    verts = trail.vertices[edge_pos:-1] + trail.vertices[: edge_pos + 1]
    return verts, edges


def idt_from_trail(ctx: PipelineContext, trail: Trail) -> IdtWitness:
    """Convert a closed trail of ``h_n`` through ``e_n`` visiting ``z`` into
    an internally dominating trail of H with terminal edges e1, e2."""
    trail.validate()
    if trail.host != ctx.h_n:
        raise LiftFailedError("trail does not live in h_n")
    if not trail.is_closed or ctx.e_n not in trail.edges:
        raise LiftFailedError("need a closed trail through e_n")
    if not ctx.z <= trail.vertex_set():
        raise LiftFailedError("trail misses part of z")
    cm = ctx.cm
    rverts, redges = _rotate_closed(trail, trail.edges.index(ctx.e_n))
    x0, x1 = rverts[0], rverts[1]
    rest_edges = redges[1:]
    rest_verts = rverts[1:]
    att1, att2 = _attachment(cm, ctx.e1), _attachment(cm, ctx.e2)
    if (att1.core_edge, att2.core_edge) != (ctx.e0_1, ctx.e0_2):
        raise LiftFailedError("attachments disagree with the projected edges")

    candidates = []
    if not ctx.hn.subdivided:
        # e_n is the shared projected core edge itself.  The lifted cycle may
        # be traversed in either direction, so try both.
        core_walk_v, core_walk_e = rest_verts, rest_edges
        mv, me = lift_walk(cm, core_walk_v, core_walk_e)
        hx1 = cm.core_vertex_origin[x1]
        hx0 = cm.core_vertex_origin[x0]
        for m_verts, m_edges, enter, leave in (
            (mv, me, hx1, hx0),
            (mv[::-1], me[::-1], hx0, hx1),
        ):
            for t1 in (True, False):
                p1v, p1e = _piece(cm, att1, t1)
                if p1v[-1] != enter:
                    continue
                for t2 in (True, False):
                    p2v, p2e = _piece(cm, att2, t2)
                    if p2v[-1] != leave:
                        continue
                    if set(p1e) & set(p2e):
                        continue
                    verts = p1v + m_verts[1:] + tuple(reversed(p2v))[1:]
                    edges = p1e + m_edges + tuple(reversed(p2e))
                    candidates.append((verts, edges))
    else:
        sub_of = {rec.new_vertex: ce for ce, rec in ctx.hn.subdivided.items()}
        if x0 not in sub_of or x1 not in sub_of or x0 == x1:
            raise LiftFailedError("e_n does not join the two subdivision vertices")
        first_tag = ctx.hn.edge_origin[rest_edges[0]]
        last_tag = ctx.hn.edge_origin[rest_edges[-1]]
        if first_tag[0] != "half" or last_tag[0] != "half":
            raise LiftFailedError("trail does not leave the subdivision vertices by halves")
        c_first, c_last = first_tag[2], last_tag[2]
        inner = rest_edges[1:-1]
        core_walk_e = []
        for e in inner:
            tag = ctx.hn.edge_origin[e]
            if tag[0] != "core":
                raise LiftFailedError("trail revisits a subdivided edge")
            core_walk_e.append(tag[1])
        core_walk_v = rest_verts[1:-1]
        mv, me = lift_walk(cm, tuple(core_walk_v), tuple(core_walk_e))
        att_first, att_last = (att1, att2) if sub_of[x1] == ctx.e0_1 else (att2, att1)
        hc_first = cm.core_vertex_origin[c_first]
        hc_last = cm.core_vertex_origin[c_last]
        for tf in (True, False):
            pfv, pfe = _piece(cm, att_first, tf)
            if pfv[-1] != hc_first:
                continue
            for tl in (True, False):
                plv, ple = _piece(cm, att_last, tl)
                if plv[-1] != hc_last:
                    continue
                if set(pfe) & set(ple):
                    continue
                verts = pfv + mv[1:] + tuple(reversed(plv))[1:]
                edges = pfe + me + tuple(reversed(ple))
                if att_first is att2:
                    verts, edges = verts[::-1], edges[::-1]
                candidates.append((verts, edges))

    for verts, edges in candidates:
        candidate = Trail(ctx.h, verts, edges)
        witness = IdtWitness(candidate, ctx.e1, ctx.e2)
        try:
            witness.validate()
        except GraphError:
            continue
        return witness
    raise LiftFailedError("no orientation of the lifted trail yields a valid terminal trail")


# -- IDT to hamiltonian path -----------------------------------------------------------


def idt_to_ham_path(lgm: LineGraphMap, witness: IdtWitness) -> Trail:
    """Order the trail's edges and insert each dominated non-trail edge next
    to an interior vertex it touches; the result is a hamiltonian path of
    the line graph between the terminal edges' vertices."""
    h, g = lgm.source, lgm.target
    if h.edge_count < 3:
        raise GraphError("the edge-ordering construction needs at least 3 edges")
    witness.validate()
    trail = witness.trail
    if trail.host != h:
        raise LiftFailedError("witness does not live in the line graph's source")
    on_trail = set(trail.edges)
    inserts: dict[int, list[int]] = {}
    for f in range(h.edge_count):
        if f in on_trail:
            continue
        spot = None
        for j in range(1, len(trail.vertices) - 1):
            if trail.vertices[j] in h.endpoints[f]:
                spot = j
                break
        if spot is None:
            raise LiftFailedError(f"edge {f} is not dominated by an interior vertex")
        inserts.setdefault(spot, []).append(f)
    seq = [trail.edges[0]]
    for j in range(1, len(trail.vertices) - 1):
        seq.extend(inserts.get(j, ()))
        seq.append(trail.edges[j])
    if len(seq) != g.n or len(set(seq)) != g.n:
        raise LiftFailedError("edge ordering does not enumerate every line-graph vertex once")
    pair_to_edge = {}
    for e, (u, v) in enumerate(g.endpoints):
        pair_to_edge[(u, v)] = e
        pair_to_edge[(v, u)] = e
    step_edges = []
    for i in range(len(seq) - 1):
        key = (seq[i], seq[i + 1])
        if key not in pair_to_edge:
            raise LiftFailedError("consecutive ordered edges are not adjacent in the line graph")
        step_edges.append(pair_to_edge[key])
    path = Trail(g, tuple(seq), tuple(step_edges))
    path.validate()
    return path


# -- the full pipeline --------------------------------------------------------------------


@dataclass(frozen=True)
class PipelineRun:
    """A successful pipeline execution with its intermediate artifacts."""

    graph: SimpleGraph
    source: Multigraph
    idt: IdtWitness
    path: Trail
    context: Optional[PipelineContext]


def _direct_idt(h: Multigraph, e1: int, e2: int) -> Optional[IdtWitness]:
    """Two-edge trail through a shared endpoint; sufficient whenever that
    endpoint alone dominates the graph (star-like degenerate cores)."""
    shared = set(h.endpoints[e1]) & set(h.endpoints[e2])
    for s in sorted(shared):
        t = Trail(h, (h.other_end(e1, s), s, h.other_end(e2, s)), (e1, e2))
        witness = IdtWitness(t, e1, e2)
        try:
            witness.validate()
        except GraphError:
            continue
        return witness
    return None


def run_pipeline(
    g: SimpleGraph, u: int, v: int, dominating: DominatingSet
) -> PipelineRun:
    """The reduction pipeline with all intermediate artifacts exposed."""
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise GraphError("hamiltonian path endpoints must differ")
    if dominating.host != g or not dominating.validate():
        raise GraphError("the given set does not dominate the input graph")
    if len(dominating.vertices) > 3:
        raise GraphError("the pipeline requires a dominating set of size at most 3")
    h = preimage(g)
    lgm = line_graph(h)
    if lgm.target != g:
        raise LiftFailedError("preimage did not reproduce the input under the line graph")
    e1, e2 = u, v
    f = tuple(sorted(dominating.vertices))
    if not edges_dominate(h, f):
        raise LiftFailedError("dominating vertices do not dominate the preimage's edges")
    try:
        cm = core(h)
    except DegenerateCoreError:
        witness = _direct_idt(h, e1, e2)
        if witness is None:
            raise
        path = idt_to_ham_path(lgm, witness)
        _check_ham_path(g, path, u, v)
        return PipelineRun(g, h, witness, path, None)
    e0_1 = project_edge(cm, e1)
    e0_2 = project_edge(cm, e2)
    hn = build_hn(cm, e0_1, e0_2)
    z = pick_z(cm, f)
    trail = find_closed_trail_through(hn.graph, sorted(z), hn.e_n)
    if trail is None:
        raise TrailNotFoundError(
            "no closed trail through e_n visiting z; h_n should be 3-edge-connected with |z| <= 6"
        )
    ctx = PipelineContext(g, h, cm, e1, e2, e0_1, e0_2, hn, z)
    witness = idt_from_trail(ctx, trail)
    path = idt_to_ham_path(lgm, witness)
    _check_ham_path(g, path, u, v)
    return PipelineRun(g, h, witness, path, ctx)


def pipeline_ham_path(
    g: SimpleGraph, u: int, v: int, dominating: DominatingSet
) -> Trail:
    """A validated hamiltonian u-v path of ``g`` built by the reduction.

    Raises stage-tagged errors: ``NotALineGraphOfMultigraphError``,
    ``DegenerateCoreError``, ``NotEssentially3EdgeConnectedError``,
    ``TrailNotFoundError``, and ``LiftFailedError`` for internal validation
    failures.
    """
    return run_pipeline(g, u, v, dominating).path


def _check_ham_path(g: SimpleGraph, path: Trail, u: int, v: int) -> None:
    """Revalidate a hamiltonian path independently of how it was built."""
    if path.vertices[0] != u or path.vertices[-1] != v:
        if path.vertices[0] == v and path.vertices[-1] == u:
            pass
        else:
            raise LiftFailedError("path endpoints are wrong")
    if len(path.vertices) != g.n or len(set(path.vertices)) != g.n:
        raise LiftFailedError("path does not visit every vertex exactly once")
    for i in range(len(path.vertices) - 1):
        if not g.has_edge(path.vertices[i], path.vertices[i + 1]):
            raise LiftFailedError("path uses a non-edge")
