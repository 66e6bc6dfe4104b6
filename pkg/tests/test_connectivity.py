import math
import random

import pytest
from hypothesis import given, strategies as st

from maxgenus import (
    GraphError,
    MultiGraph,
    dfs_backend,
    dynamic_backend,
    gen_random_connected_multigraph,
    pair_removal_keeps_connected,
)


def path(n):
    g = MultiGraph(n)
    for v in range(n - 1):
        g.add_edge(v, v + 1)
    return g


@pytest.fixture(params=["dfs", "dynamic"])
def backend_factory(request):
    return {"dfs": dfs_backend, "dynamic": dynamic_backend}[request.param]


class TestBackendBasics:
    def test_bridge_deletion(self, backend_factory):
        be = backend_factory(path(4))
        assert be.connected_all()
        be.delete_edge(1)
        assert not be.connected_all()
        assert be.connected(0, 1)
        assert not be.connected(1, 2)
        be.insert_edge(1)
        assert be.connected_all()

    def test_loops_are_connectivity_neutral(self, backend_factory):
        g = path(3)
        loop = g.add_edge(1, 1)
        be = backend_factory(g)
        be.delete_edge(loop)
        assert be.connected_all()
        be.insert_edge(loop)
        assert be.connected_all()

    def test_validation(self, backend_factory):
        be = backend_factory(path(3))
        with pytest.raises(GraphError):
            be.delete_edge(99)
        be.delete_edge(0)
        with pytest.raises(GraphError):
            be.delete_edge(0)
        be.insert_edge(0)
        with pytest.raises(GraphError):
            be.insert_edge(0)

    def test_query_counter(self, backend_factory):
        be = backend_factory(path(3))
        before = be.stats.queries
        be.connected(0, 2)
        be.connected_all()
        assert be.stats.queries == before + 2


class TestPairRemoval:
    def test_success_leaves_pair_deleted(self):
        g = MultiGraph(2)
        a = g.add_edge(0, 1)
        b = g.add_edge(0, 1)
        c = g.add_edge(0, 1)
        be = dfs_backend(g)
        assert pair_removal_keeps_connected(be, a, b)
        # third parallel edge still holds the graph together
        assert not be.has_edge(a) and not be.has_edge(b)
        assert be.connected_all()

    def test_failure_rolls_back(self):
        g = path(3)
        be = dfs_backend(g)
        assert not pair_removal_keeps_connected(be, 0, 1)
        assert be.has_edge(0) and be.has_edge(1)
        assert be.connected_all()

    def test_rejects_non_adjacent(self):
        g = path(4)
        be = dfs_backend(g)
        with pytest.raises(GraphError):
            pair_removal_keeps_connected(be, 0, 2)  # no shared endpoint

    def test_rejects_same_edge(self):
        g = path(3)
        be = dfs_backend(g)
        with pytest.raises(GraphError):
            pair_removal_keeps_connected(be, 0, 0)


class TestDifferential:
    def test_randomized_ops_agree(self):
        rng = random.Random(99)
        n = 32
        g = gen_random_connected_multigraph(n, 70, seed=4)
        A = dfs_backend(g)
        B = dynamic_backend(g)
        present = sorted(g.edge_ids())
        absent = []
        for _ in range(2000):
            roll = rng.random()
            if roll < 0.35 and present:
                e = present.pop(rng.randrange(len(present)))
                A.delete_edge(e)
                B.delete_edge(e)
                absent.append(e)
            elif roll < 0.6 and absent:
                e = absent.pop(rng.randrange(len(absent)))
                A.insert_edge(e)
                B.insert_edge(e)
                present.append(e)
            else:
                u, v = rng.randrange(n), rng.randrange(n)
                assert A.connected(u, v) == B.connected(u, v)
                assert A.connected_all() == B.connected_all()

    def test_promotion_budget(self):
        n = 64
        g = gen_random_connected_multigraph(n, 160, seed=8)
        be = dynamic_backend(g)
        rng = random.Random(5)
        ids = sorted(g.edge_ids())
        for _ in range(1500):
            e = rng.choice(ids)
            if be.has_edge(e):
                be.delete_edge(e)
            else:
                be.insert_edge(e)
        budget = be.stats.inserts * max(1, math.ceil(math.log2(n)))
        assert be.stats.promotions <= budget

    @given(st.integers(0, 2**30), st.integers(4, 12))
    def test_property_small_graphs_agree(self, seed, n):
        rng = random.Random(seed)
        g = gen_random_connected_multigraph(n, n + 4, seed=seed % 1000)
        A = dfs_backend(g)
        B = dynamic_backend(g)
        present = sorted(g.edge_ids())
        absent = []
        for _ in range(60):
            roll = rng.random()
            if roll < 0.4 and present:
                e = present.pop(rng.randrange(len(present)))
                A.delete_edge(e)
                B.delete_edge(e)
                absent.append(e)
            elif roll < 0.6 and absent:
                e = absent.pop(rng.randrange(len(absent)))
                A.insert_edge(e)
                B.insert_edge(e)
                present.append(e)
            else:
                u, v = rng.randrange(n), rng.randrange(n)
                assert A.connected(u, v) == B.connected(u, v)
        assert A.connected_all() == B.connected_all()
