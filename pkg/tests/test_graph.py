import pytest
from hypothesis import given, strategies as st

from maxgenus import (
    DisconnectedError,
    GraphError,
    MultiGraph,
    ParseError,
    cycle_rank,
    format_edge_list,
    is_cactus,
    is_connected,
    parse_edge_list,
)
from maxgenus.graph import dart, dart_edge, dart_end, format_dart, parse_dart, twin


def triangle():
    g = MultiGraph(3)
    g.add_edge(0, 1)
    g.add_edge(1, 2)
    g.add_edge(2, 0)
    return g


class TestDarts:
    def test_encoding(self):
        assert dart(5, 0) == 10
        assert dart(5, 1) == 11
        assert twin(10) == 11 and twin(11) == 10
        assert dart_edge(11) == 5 and dart_end(11) == 1

    def test_bad_end(self):
        with pytest.raises(ValueError):
            dart(3, 2)

    @given(st.integers(min_value=0, max_value=10**6), st.integers(0, 1))
    def test_text_round_trip(self, eid, end):
        d = dart(eid, end)
        assert parse_dart(format_dart(d)) == d

    def test_parse_rejects_garbage(self):
        for bad in ("3", "3.", ".1", "3.2", "a.0", "3.0x"):
            with pytest.raises(ValueError):
                parse_dart(bad)


class TestMultiGraph:
    def test_loops_and_parallels_allowed(self):
        g = MultiGraph(2)
        e0 = g.add_edge(0, 1)
        e1 = g.add_edge(0, 1)
        e2 = g.add_edge(1, 1)
        assert e0 != e1
        assert g.degree(0) == 2
        assert g.degree(1) == 4  # loop counts twice
        assert g.is_loop(e2) and not g.is_loop(e0)
        assert g.incident_edges(1) == [e0, e1, e2]

    def test_handshake(self):
        g = MultiGraph(4)
        for uv in ((0, 1), (1, 2), (2, 2), (3, 0), (1, 3)):
            g.add_edge(*uv)
        assert sum(g.degree(v) for v in g.vertices()) == 2 * g.n_edges

    def test_edge_ids_stable_across_delete(self):
        g = triangle()
        g.delete_edge(1)
        e3 = g.add_edge(0, 1)
        assert e3 == 3  # ids never reused
        assert sorted(g.edge_ids()) == [0, 2, 3]

    def test_delete_restore_round_trip(self):
        g = triangle()
        snapshot = g.copy()
        g.delete_edges((0, 2))
        assert g.n_edges == 1
        g.restore_edges((0, 2))
        assert g == snapshot

    def test_restore_must_be_lifo(self):
        g = triangle()
        g.delete_edge(0)
        g.delete_edge(1)
        with pytest.raises(GraphError):
            g.restore_edges((0,))  # 1 was deleted last

    def test_unknown_edge_errors(self):
        g = triangle()
        with pytest.raises(GraphError):
            g.endpoints(99)
        with pytest.raises(GraphError):
            g.delete_edge(99)

    def test_copy_is_independent(self):
        g = triangle()
        h = g.copy()
        h.delete_edge(0)
        assert g.has_edge(0)
        assert not h.has_edge(0)


class TestParsing:
    def test_round_trip(self):
        text = "a b\nb c\nc a\nc c\na b\n"
        g = parse_edge_list(text)
        assert g.n_vertices == 3
        assert g.n_edges == 5
        assert format_edge_list(g) == text

    def test_comments_and_blanks(self):
        g = parse_edge_list("# header\n\nx y  # trailing\n")
        assert g.n_edges == 1

    def test_line_numbers_in_errors(self):
        with pytest.raises(ParseError) as exc:
            parse_edge_list("a b\n\na b c\n")
        assert exc.value.line_no == 3

    def test_empty_input_rejected(self):
        with pytest.raises(ParseError):
            parse_edge_list("# nothing\n")

    def test_first_appearance_indexing(self):
        g = parse_edge_list("v u\nu w\n")
        # v=0, u=1, w=2
        assert g.endpoints(0) == (0, 1)
        assert g.endpoints(1) == (1, 2)
        assert g.labels == {0: "v", 1: "u", 2: "w"}


class TestConnectivity:
    def test_connected(self):
        assert is_connected(triangle())
        g = MultiGraph(3)
        g.add_edge(0, 1)
        assert not is_connected(g)  # vertex 2 isolated

    def test_cycle_rank(self):
        assert cycle_rank(triangle()) == 1
        g = MultiGraph(2)
        g.add_edge(0, 1)
        assert cycle_rank(g) == 0
        g.add_edge(0, 1)
        g.add_edge(1, 1)
        assert cycle_rank(g) == 2

    def test_single_vertex_connected(self):
        assert is_connected(MultiGraph(1))


class TestCactus:
    def test_positives(self):
        assert is_cactus(MultiGraph(1))
        path = MultiGraph(3)
        path.add_edge(0, 1)
        path.add_edge(1, 2)
        assert is_cactus(path)
        assert is_cactus(triangle())
        one_loop = MultiGraph(1)
        one_loop.add_edge(0, 0)
        assert is_cactus(one_loop)
        # two triangles joined by a path: cycles are vertex-disjoint
        g = parse_edge_list(
            "a b\nb c\nc a\nc d\nd e\ne f\nf g\ng e\n"
        )
        assert is_cactus(g)

    def test_negatives(self):
        bowtie = parse_edge_list("a b\nb c\nc a\na d\nd e\ne a\n")
        assert not is_cactus(bowtie)
        two_loops = MultiGraph(1)
        two_loops.add_edge(0, 0)
        two_loops.add_edge(0, 0)
        assert not is_cactus(two_loops)
        theta = MultiGraph(2)
        for _ in range(3):
            theta.add_edge(0, 1)
        assert not is_cactus(theta)
        loop_on_cycle = triangle()
        loop_on_cycle.add_edge(0, 0)
        assert not is_cactus(loop_on_cycle)

    def test_disconnected_raises(self):
        g = MultiGraph(2)
        with pytest.raises(DisconnectedError):
            is_cactus(g)


@given(st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)),
                min_size=1, max_size=12))
def test_property_handshake_and_rank(edges):
    n = max(max(u, v) for u, v in edges) + 1
    g = MultiGraph(n)
    for u, v in edges:
        g.add_edge(u, v)
    assert sum(g.degree(v) for v in g.vertices()) == 2 * g.n_edges
    # beta = m - n + c is non-negative and zero exactly for forests
    assert cycle_rank(g) >= 0


@given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)),
                min_size=2, max_size=10),
       st.data())
def test_property_delete_restore_identity(edges, data):
    n = 5
    g = MultiGraph(n)
    for u, v in edges:
        g.add_edge(u, v)
    snapshot = g.copy()
    ids = data.draw(st.permutations(list(g.edge_ids())))
    half = ids[: len(ids) // 2]
    if not half:
        return
    g.delete_edges(half)
    g.restore_edges(half)
    assert g == snapshot
