import random

import pytest

from hamconn.core import core, lift_closed_trail, project_vertex
from hamconn.corpus import random_essentially_3ec_multigraph
from hamconn.errors import (
    DegenerateCoreError,
    DisconnectedGraphError,
    LiftFailedError,
    NoCoreLocationError,
    NotEssentially3EdgeConnectedError,
)
from hamconn.invariants import edge_connectivity, vertices_dominate_edges
from hamconn.multigraph import (
    Multigraph,
    complete_graph,
    cycle_graph,
    isomorphic,
    path_graph,
    star_graph,
)
from hamconn.trails import Trail, find_spanning_closed_trail


@pytest.fixture
def subdivided_k4():
    return complete_graph(4).subdivide(0).graph


class TestCore:
    def test_k4_with_pendants(self, k4_with_pendants):
        cm = core(k4_with_pendants)
        assert isomorphic(cm.core, complete_graph(4))
        assert cm.removed_pendants == frozenset({6, 7, 8, 9})
        cm.validate()

    def test_subdivided_k4(self, subdivided_k4):
        cm = core(subdivided_k4)
        assert isomorphic(cm.core, complete_graph(4))
        assert sorted(len(p) for p in cm.edge_expansion.values()) == [1, 1, 1, 1, 1, 2]

    def test_degenerate_inputs(self, claw):
        for bad in (claw, path_graph(4), cycle_graph(5), star_graph(6)):
            with pytest.raises(DegenerateCoreError):
                core(bad)

    def test_not_essentially_3ec(self):
        two_k4 = Multigraph(
            8,
            [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
            + [(4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)]
            + [(0, 4), (1, 5)],
        )
        with pytest.raises(NotEssentially3EdgeConnectedError) as err:
            core(two_k4)
        assert err.value.cut is not None

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            core(Multigraph(2, []))

    def test_loops_retained_with_expansions(self):
        h = Multigraph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (0, 4)])
        cm = core(h)
        loops = [e for e in range(cm.core.edge_count) if cm.core.is_loop(e)]
        assert len(loops) == 1
        assert sorted(cm.edge_expansion[loops[0]]) == [6, 7]

    def test_order_independence(self, k4_with_pendants, subdivided_k4):
        for h in (k4_with_pendants, subdivided_k4):
            base = core(h)
            for seed in range(10):
                shuffled = core(h, rng=random.Random(seed))
                assert shuffled.core == base.core
                assert shuffled.removed_pendants == base.removed_pendants
                assert shuffled.edge_expansion == base.edge_expansion

    def test_core_is_3_edge_connected_on_random_inputs(self):
        rng = random.Random(27)
        produced = 0
        while produced < 40:
            h = random_essentially_3ec_multigraph(rng)
            try:
                cm = core(h)
            except DegenerateCoreError:
                continue
            produced += 1
            assert edge_connectivity(cm.core) >= 3

    def test_edge_accounting(self, k4_with_pendants, subdivided_k4):
        for h in (k4_with_pendants, subdivided_k4):
            cm = core(h)
            covered = len(cm.removed_pendants) + sum(
                len(p) for p in cm.edge_expansion.values()
            )
            assert covered == h.edge_count


class TestProjectVertex:
    def test_surviving_vertex(self, k4_with_pendants):
        cm = core(k4_with_pendants)
        loc = project_vertex(cm, 0)
        assert loc.kind == "vertex"

    def test_subdivision_vertex(self, subdivided_k4):
        cm = core(subdivided_k4)
        loc = project_vertex(cm, 4)
        assert loc.kind == "edge"
        assert len(cm.edge_expansion[loc.index]) == 2

    def test_stripped_leaf_has_no_location(self, k4_with_pendants):
        cm = core(k4_with_pendants)
        with pytest.raises(NoCoreLocationError):
            project_vertex(cm, 4)

    def test_support_with_nonpendant_degree_2(self, subdivided_k4):
        # pendant at the subdivision vertex: fails the essential-3EC
        # precondition, so the decomposition runs with checks off
        g = subdivided_k4
        h = Multigraph(g.n + 1, list(g.endpoints) + [(4, g.n)])
        cm = core(h, check=False)
        loc = project_vertex(cm, 4)
        assert loc.kind == "edge"


class TestLifting:
    def test_spanning_trail_lifts_to_dominating(self, k4_with_pendants):
        cm = core(k4_with_pendants)
        t = find_spanning_closed_trail(cm.core)
        lifted = lift_closed_trail(cm, t)
        assert lifted.is_closed
        assert vertices_dominate_edges(k4_with_pendants, lifted.vertex_set())

    def test_expansion_substitution(self, subdivided_k4):
        from hamconn.trails import find_closed_trail_through

        cm = core(subdivided_k4)
        expanded = next(ce for ce, p in cm.edge_expansion.items() if len(p) == 2)
        t = find_closed_trail_through(cm.core, range(cm.core.n), expanded)
        lifted = lift_closed_trail(cm, t)
        # the expanded edge contributes both subdivision edges
        assert len(lifted.edges) == len(t.edges) + 1
        assert set(cm.edge_expansion[expanded]) <= set(lifted.edges)
        assert lifted.dominates_host_edges()

    def test_trivial_trail_lift(self, k4_with_pendants):
        cm = core(k4_with_pendants)
        t = Trail(cm.core, (0,), ())
        lifted = lift_closed_trail(cm, t)
        assert lifted.edges == ()

    def test_open_trail_rejected(self, k4_with_pendants):
        cm = core(k4_with_pendants)
        t = Trail(cm.core, (0, 1), (0,))
        with pytest.raises(LiftFailedError):
            lift_closed_trail(cm, t)

    def test_random_lifting_soundness(self):
        rng = random.Random(28)
        produced = 0
        while produced < 40:
            h = random_essentially_3ec_multigraph(rng)
            try:
                cm = core(h)
            except DegenerateCoreError:
                continue
            t = find_spanning_closed_trail(cm.core)
            if t is None:
                continue
            produced += 1
            lifted = lift_closed_trail(cm, t)
            assert lifted.is_closed
            assert vertices_dominate_edges(h, lifted.vertex_set())
