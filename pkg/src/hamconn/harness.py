"""Theorem-verification harness, property tables, and counterexample report.

The harness filters graphs through the hypothesis stages (cheapest first)
and checks the conclusion on the survivors, reporting per-stage counts and
any violating graphs as re-checkable witnesses.  Work can fan out across a
process pool; per-graph work is pure and reports merge deterministically in
input order, so worker count never changes the result.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterable, Optional

from .constructions import wagner_counterexample
from .corpus import MAX_ENUMERATION_VERTICES, graph_from_edge_mask
from .encoding import encode_graph6
from .errors import GraphError
from .invariants import (
    dominating_set,
    domination_number,
    find_claw,
    is_essentially_k_edge_connected,
    is_k_connected,
    vertex_connectivity,
)
from .linegraph import is_line_graph_of_multigraph, preimage
from .multigraph import Multigraph, SimpleGraph
from .trails import (
    find_dct,
    hamiltonian_path,
    is_hamiltonian,
    missing_hamiltonian_pair,
)

HYPOTHESES = ("thm1", "ageev")

_STAGES = {
    "thm1": ("total", "connected", "claw-free", "3-connected", "domination<=3"),
    "ageev": ("total", "connected", "claw-free", "2-connected", "domination<=2"),
}
_CONCLUSIONS = {"thm1": "hamiltonian-connected", "ageev": "hamiltonian"}


@dataclass(frozen=True)
class Violation:
    graph6: str
    pair: Optional[tuple[int, int]]


@dataclass(frozen=True)
class VerificationReport:
    hypothesis: str
    stage_counts: tuple[tuple[str, int], ...]
    violations: tuple[Violation, ...]
    elapsed: float

    @property
    def passed(self) -> bool:
        return not self.violations

    def check_monotone(self) -> bool:
        """Stage counts never increase, and every hypothesis survivor either
        satisfies the conclusion or appears among the violations."""
        counts = [c for _, c in self.stage_counts]
        if not all(a >= b for a, b in zip(counts, counts[1:])):
            return False
        return counts[-2] == counts[-1] + len(self.violations)

    def format(self) -> str:
        lines = [f"hypothesis: {self.hypothesis}"]
        for name, count in self.stage_counts:
            lines.append(f"  {name:24s} {count}")
        lines.append(f"  violations               {len(self.violations)}")
        for v in self.violations:
            pair = f" pair={v.pair}" if v.pair else ""
            lines.append(f"    {v.graph6}{pair}")
        lines.append(f"  elapsed                  {self.elapsed:.1f}s")
        return "\n".join(lines)


def _stage_filter(g: SimpleGraph, hypothesis: str) -> int:
    """Index of the last hypothesis stage the graph passes (0 = total only)."""
    if not g.is_connected():
        return 1
    if find_claw(g) is not None:
        return 2
    k = 3 if hypothesis == "thm1" else 2
    if not is_k_connected(g, k):
        return 3
    budget = 3 if hypothesis == "thm1" else 2
    if dominating_set(g, budget) is None:
        return 4
    return 5


def _check_graph(g: SimpleGraph, hypothesis: str) -> tuple[int, Optional[Violation]]:
    """(number of stages passed, violation if the conclusion fails)."""
    reached = _stage_filter(g, hypothesis)
    if reached < 5:
        return reached, None
    if hypothesis == "thm1":
        pair = missing_hamiltonian_pair(g)
        if pair is None:
            return 6, None
        return 5, Violation(encode_graph6(g), pair)
    if is_hamiltonian(g):
        return 6, None
    return 5, Violation(encode_graph6(g), None)


def _worker_range(args: tuple[int, int, int, str]) -> tuple[list[int], list[Violation]]:
    """Stage counts and violations over one contiguous mask range."""
    n, lo, hi, hypothesis = args
    counts = [0] * 6
    violations: list[Violation] = []
    for mask in range(lo, hi):
        g = graph_from_edge_mask(n, mask)
        reached, violation = _check_graph(g, hypothesis)
        passed_stages = min(reached, 5)
        for i in range(passed_stages):
            counts[i] += 1
        if reached == 6:
            counts[5] += 1
        if violation is not None:
            violations.append(violation)
    return counts, violations


def verify_theorem_enumerated(
    bound: int, hypothesis: str, workers: int = 1
) -> VerificationReport:
    """Filter every labeled simple graph on 1..bound vertices through the
    hypothesis stages and test the conclusion on the survivors."""
    if hypothesis not in HYPOTHESES:
        raise GraphError(f"unknown hypothesis {hypothesis!r}")
    if bound > MAX_ENUMERATION_VERTICES:
        raise GraphError(f"enumeration bound capped at {MAX_ENUMERATION_VERTICES}")
    start = time.time()
    jobs = []
    chunk = 1 << 15
    for n in range(1, bound + 1):
        total = 1 << (n * (n - 1) // 2)
        for lo in range(0, total, chunk):
            jobs.append((n, lo, min(lo + chunk, total), hypothesis))
    counts = [0] * 6
    violations: list[Violation] = []
    if workers <= 1:
        results = [_worker_range(job) for job in jobs]
    else:
        with Pool(processes=workers) as pool:
            results = pool.map(_worker_range, jobs, chunksize=1)
    for partial_counts, partial_violations in results:
        for i in range(6):
            counts[i] += partial_counts[i]
        violations.extend(partial_violations)
    stage_names = _STAGES[hypothesis] + (_CONCLUSIONS[hypothesis],)
    report = VerificationReport(
        hypothesis=hypothesis,
        stage_counts=tuple(zip(stage_names, counts)),
        violations=tuple(violations),
        elapsed=time.time() - start,
    )
    assert report.check_monotone()
    return report


def verify_theorem_graphs(
    graphs: Iterable[SimpleGraph], hypothesis: str, workers: int = 1
) -> VerificationReport:
    """The same filter chain over an explicit graph collection."""
    if hypothesis not in HYPOTHESES:
        raise GraphError(f"unknown hypothesis {hypothesis!r}")
    start = time.time()
    counts = [0] * 6
    violations: list[Violation] = []
    items = list(graphs)
    if workers <= 1:
        results = [_check_graph(g, hypothesis) for g in items]
    else:
        with Pool(processes=workers) as pool:
            results = pool.starmap(
                _check_graph, ((g, hypothesis) for g in items), chunksize=64
            )
    for reached, violation in results:
        for i in range(min(reached, 5)):
            counts[i] += 1
        if reached == 6:
            counts[5] += 1
        if violation is not None:
            violations.append(violation)
    stage_names = _STAGES[hypothesis] + (_CONCLUSIONS[hypothesis],)
    report = VerificationReport(
        hypothesis=hypothesis,
        stage_counts=tuple(zip(stage_names, counts)),
        violations=tuple(violations),
        elapsed=time.time() - start,
    )
    assert report.check_monotone()
    return report


def write_witnesses(report: VerificationReport, path: str) -> None:
    with open(path, "w") as fh:
        for v in report.violations:
            if v.pair is not None:
                fh.write(f"{v.graph6} {v.pair[0]} {v.pair[1]}\n")
            else:
                fh.write(f"{v.graph6}\n")


# -- property table ---------------------------------------------------------------------


def property_table(g: Multigraph) -> list[tuple[str, object]]:
    """Deterministic (name, value) rows describing one graph."""
    rows: list[tuple[str, object]] = [
        ("vertices", g.n),
        ("edges", g.edge_count),
        ("connected", g.is_connected()),
    ]
    simple = isinstance(g, SimpleGraph)
    if not simple:
        try:
            g = SimpleGraph(g.n, g.endpoints)
            simple = True
        except GraphError:
            rows.append(("simple", False))
            if g.is_connected():
                rows.append(
                    ("essentially 3-edge-connected", is_essentially_k_edge_connected(g, 3))
                )
                rows.append(("dominating closed trail", find_dct(g) is not None))
    if simple:
        claw = find_claw(g)
        rows.append(("claw-free", claw is None))
        if claw is not None:
            rows.append(("claw witness", claw))
        rows.append(("vertex connectivity", vertex_connectivity(g)))
        if g.n >= 1:
            rows.append(("domination number", domination_number(g)))
        if g.n >= 3:
            rows.append(("hamiltonian", is_hamiltonian(g)))
        if g.n >= 2:
            pair = missing_hamiltonian_pair(g)
            rows.append(("hamiltonian-connected", pair is None))
            if pair is not None:
                rows.append(("non-hamiltonian pair", pair))
        if g.is_connected():
            line_preimage = is_line_graph_of_multigraph(g)
            rows.append(("line graph of a multigraph", line_preimage))
            if line_preimage:
                h = preimage(g)
                pendants = sum(
                    1
                    for u, v in h.endpoints
                    if h.degree(u) == 1 or h.degree(v) == 1
                )
                rows.append(("preimage vertices", h.n))
                rows.append(("preimage edges", h.edge_count))
                rows.append(("preimage pendant edges", pendants))
    return rows


# -- sharpness counterexample -------------------------------------------------------------


@dataclass(frozen=True)
class CounterexampleReport:
    graph: SimpleGraph
    source: Multigraph
    claw_free: bool
    connectivity: int
    domination: int
    hamiltonian_connected: bool
    failing_pair: Optional[tuple[int, int]]

    @property
    def demonstrates_sharpness(self) -> bool:
        return (
            self.claw_free
            and self.connectivity >= 3
            and self.domination == 4
            and not self.hamiltonian_connected
            and self.failing_pair is not None
        )

    def format(self) -> str:
        lines = [
            f"|V(g)| = {self.graph.n}, |E(g)| = {self.graph.edge_count}",
            f"|V(h)| = {self.source.n}, |E(h)| = {self.source.edge_count}",
            f"claw-free:              {self.claw_free}",
            f"vertex connectivity:    {self.connectivity}",
            f"domination number:      {self.domination}",
            f"hamiltonian-connected:  {self.hamiltonian_connected}",
        ]
        if self.failing_pair is not None:
            u, v = self.failing_pair
            lines.append(f"no hamiltonian path:    {u} .. {v}")
        lines.append(f"sharpness demonstrated: {self.demonstrates_sharpness}")
        return "\n".join(lines)


def counterexample_report(pendants_per_vertex: int = 1) -> CounterexampleReport:
    """Build the sharpness counterexample and verify all four claims."""
    g, h = wagner_counterexample(pendants_per_vertex)
    pair = missing_hamiltonian_pair(g)
    return CounterexampleReport(
        graph=g,
        source=h,
        claw_free=find_claw(g) is None,
        connectivity=vertex_connectivity(g),
        domination=domination_number(g),
        hamiltonian_connected=pair is None,
        failing_pair=pair,
    )


def verify_hamiltonian_pair_absent(g: SimpleGraph, pair: tuple[int, int]) -> bool:
    """Re-check a reported failing pair."""
    return hamiltonian_path(g, pair[0], pair[1]) is None
