"""Graph corpora: exhaustive enumeration and seeded random generators.

The labeled enumeration is capped at 7 vertices (2^21 graphs); anything
larger must come from an ingested file.  The multigraph corpus used by the
trail-equivalence checks enumerates connected loopless multigraphs by
support (one simple graph per isomorphism class) times bounded parallel-edge
multiplicities, so every isomorphism class in range appears at least once.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Union

from .encoding import EncodingError, decode_edgelist, decode_graph6, decode_sparse6
from .errors import GraphError
from .invariants import edge_connectivity, is_essentially_k_edge_connected
from .multigraph import Multigraph, SimpleGraph, find_isomorphism

MAX_ENUMERATION_VERTICES = 7


@dataclass(frozen=True)
class CorpusRecord:
    """One ingested graph together with where it came from."""

    graph: Multigraph
    origin: Union[tuple[str, int], int]  # (file, line) or enumeration index
    encoding: str  # "g6" | "s6" | "el"


def read_corpus_file(path: str, fmt: str) -> list[CorpusRecord]:
    """Decode a corpus file line by line, reporting errors with file/line."""
    records: list[CorpusRecord] = []
    with open(path) as fh:
        text = fh.read()
    if fmt == "el":
        try:
            graph = decode_edgelist(text)
        except EncodingError as exc:
            raise EncodingError(f"{path}: {exc}") from exc
        return [CorpusRecord(graph, (path, 1), "el")]
    decoder = {"g6": decode_graph6, "s6": decode_sparse6}.get(fmt)
    if decoder is None:
        raise EncodingError(f"unknown format {fmt!r}")
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            graph = decoder(line)
        except EncodingError as exc:
            raise EncodingError(f"{path}:{lineno}: {exc}") from exc
        records.append(CorpusRecord(graph, (path, lineno), fmt))
    return records

_PAIRS = {n: list(itertools.combinations(range(n), 2)) for n in range(MAX_ENUMERATION_VERTICES + 1)}


def graph_from_edge_mask(n: int, mask: int) -> SimpleGraph:
    pairs = _PAIRS[n]
    return SimpleGraph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def enumerate_labeled(n: int) -> Iterator[SimpleGraph]:
    """Every labeled simple graph on ``n`` vertices exactly once."""
    if n > MAX_ENUMERATION_VERTICES:
        raise GraphError(
            f"labeled enumeration is capped at {MAX_ENUMERATION_VERTICES} vertices; "
            "ingest an external corpus instead"
        )
    if n < 0:
        raise GraphError("vertex count cannot be negative")
    for mask in range(1 << (n * (n - 1) // 2)):
        yield graph_from_edge_mask(n, mask)


def enumerate_labeled_upto(n: int) -> Iterator[SimpleGraph]:
    for k in range(1, n + 1):
        yield from enumerate_labeled(k)


def connected_graphs_up_to_isomorphism(max_vertices: int) -> list[SimpleGraph]:
    """One representative per isomorphism class of connected simple graphs."""
    reps: list[SimpleGraph] = []
    buckets: dict[tuple, list[SimpleGraph]] = {}
    for n in range(1, max_vertices + 1):
        for g in enumerate_labeled(n):
            if not g.is_connected():
                continue
            key = (n, g.edge_count, tuple(sorted(g.degrees())))
            bucket = buckets.setdefault(key, [])
            if any(find_isomorphism(g, r) is not None for r in bucket):
                continue
            bucket.append(g)
            reps.append(g)
    return reps


def enumerate_multigraph_corpus(
    max_vertices: int = 6,
    min_edges: int = 3,
    max_edges: int = 9,
    max_multiplicity: int = 3,
) -> Iterator[Multigraph]:
    """Connected loopless multigraphs, exhaustive up to isomorphism.

    Supports are connected simple graphs up to isomorphism; each support
    edge receives every multiplicity in ``1..max_multiplicity`` whose total
    lands in ``min_edges..max_edges``.  Representatives may repeat across
    isomorphism classes only through distinct multiplicity patterns.
    """
    supports = [
        g
        for g in connected_graphs_up_to_isomorphism(max_vertices)
        if g.edge_count and g.edge_count <= max_edges
    ]
    for support in supports:
        base = support.endpoints
        for mults in itertools.product(range(1, max_multiplicity + 1), repeat=len(base)):
            total = sum(mults)
            if not (min_edges <= total <= max_edges):
                continue
            edges = []
            for pair, mult in zip(base, mults):
                edges.extend([pair] * mult)
            yield Multigraph(support.n, edges)


# -- random generators -----------------------------------------------------------------


def random_multigraph(
    rng: random.Random,
    max_vertices: int = 8,
    max_edges: int = 12,
    *,
    allow_loops: bool = False,
    connected: bool = True,
) -> Multigraph:
    """A random multigraph; retries until connectivity holds when asked."""
    while True:
        n = rng.randint(1, max_vertices)
        m = rng.randint(1, max_edges)
        edges = []
        for _ in range(m):
            u = rng.randrange(n)
            v = rng.randrange(n)
            if not allow_loops:
                while v == u:
                    if n == 1:
                        break
                    v = rng.randrange(n)
                if n == 1:
                    continue
            edges.append((u, v))
        if not edges:
            continue
        h = Multigraph(n, edges)
        if not connected or h.is_connected():
            return h


def random_essentially_3ec_multigraph(
    rng: random.Random, max_vertices: int = 7, max_edges: int = 12
) -> Multigraph:
    """Rejection-sampled connected, essentially 3-edge-connected multigraph."""
    while True:
        n = rng.randint(2, max_vertices)
        lo = max(n, 3)
        if lo > max_edges:
            continue
        m = rng.randint(lo, max_edges)
        edges = [(rng.randrange(n), rng.randrange(n)) for _ in range(m)]
        edges = [(u, v) for u, v in edges if u != v]
        if len(edges) < 3:
            continue
        h = Multigraph(n, edges)
        if not h.is_connected():
            continue
        if is_essentially_k_edge_connected(h, 3):
            return h


def random_3_edge_connected_multigraph(
    rng: random.Random, max_vertices: int = 8, max_edges: int = 12
) -> Multigraph:
    """Rejection-sampled multigraph with edge connectivity at least 3."""
    while True:
        n = rng.randint(2, max_vertices)
        lo = (3 * n + 1) // 2
        if lo > max_edges:
            continue
        m = rng.randint(lo, max_edges)
        edges = [(rng.randrange(n), rng.randrange(n)) for _ in range(m)]
        edges = [(u, v) for u, v in edges if u != v]
        if len(edges) < lo:
            continue
        h = Multigraph(n, edges)
        if min(h.degrees()) < 3 or not h.is_connected():
            continue
        if edge_connectivity(h) >= 3:
            return h


def random_connected_multigraph_with_loops(
    rng: random.Random, max_vertices: int = 6, max_edges: int = 12
) -> Multigraph:
    """Connected multigraph that may carry loops (for line-graph tests)."""
    while True:
        n = rng.randint(1, max_vertices)
        m = rng.randint(1, max_edges)
        edges = [(rng.randrange(n), rng.randrange(n)) for _ in range(m)]
        h = Multigraph(n, edges)
        if h.is_connected():
            return h
