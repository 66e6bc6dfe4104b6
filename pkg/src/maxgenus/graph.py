"""Undirected multigraphs with stable edge identity.

Vertices are dense integers ``0..n-1``.  Edges carry immutable integer ids
assigned at insertion and never reused, so external references (pair
certificates, rotation systems) stay meaningful across delete/restore
cycles.  Loops and parallel edges are allowed everywhere.

Each edge ``e`` owns two darts (edge ends) encoded as the integers ``2*e``
and ``2*e + 1``; the twin of a dart ``d`` is ``d ^ 1``.  A loop contributes
both of its darts to its single vertex, which is why a loop adds 2 to the
degree and the handshake identity sum(deg) = 2m holds unconditionally.

Text format: one edge per line as two whitespace-separated vertex labels,
``#`` starts a comment, blank lines are ignored, repeated lines denote
parallel edges and identical endpoints denote a loop.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator


class GraphError(Exception):
    """Base class for errors raised by this package."""


class ParseError(GraphError):
    """Malformed edge-list input.  Carries the 1-based line number."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class DisconnectedError(GraphError):
    """An operation that requires a connected graph got a disconnected one."""


# ---------------------------------------------------------------------------
# Darts
# ---------------------------------------------------------------------------

def dart(edge_id: int, end: int) -> int:
    """Dart of ``edge_id`` at endpoint ``end`` (0 or 1)."""
    if end not in (0, 1):
        raise ValueError(f"dart end must be 0 or 1, got {end}")
    return (edge_id << 1) | end


def twin(d: int) -> int:
    """The other dart of the same edge."""
    return d ^ 1


def dart_edge(d: int) -> int:
    return d >> 1


def dart_end(d: int) -> int:
    return d & 1


def format_dart(d: int) -> str:
    """Text form ``edgeId.end`` used in rotation-system output."""
    return f"{d >> 1}.{d & 1}"


def parse_dart(text: str) -> int:
    eid, sep, end = text.partition(".")
    if not sep or end not in ("0", "1") or not eid.isdigit():
        raise ValueError(f"bad dart {text!r}, expected edgeId.end")
    return (int(eid) << 1) | int(end)


# ---------------------------------------------------------------------------
# MultiGraph
# ---------------------------------------------------------------------------

class MultiGraph:
    """Mutable multigraph over vertices ``0..n-1``.

    Incidence is stored per vertex as an ordered set of darts, so edge
    deletion and restoration are O(1) dictionary edits.  ``delete_edges`` /
    ``restore_edges`` form a LIFO pair: restores must unwind deletions in
    exactly the reverse order, which is what the tentative-removal loop of
    the greedy needs.  Single-writer: no concurrent mutation.
    """

    __slots__ = ("_n", "_edges", "_inc", "_next_id", "_undo", "labels")

    def __init__(self, n_vertices: int):
        if n_vertices < 1:
            raise GraphError("graph must have at least one vertex")
        self._n = n_vertices
        self._edges: dict[int, tuple[int, int]] = {}
        # dart -> None, used as an ordered set; O(1) add/remove.
        self._inc: list[dict[int, None]] = [dict() for _ in range(n_vertices)]
        self._next_id = 0
        self._undo: list[tuple[int, int, int]] = []
        self.labels: dict[int, str] | None = None

    # -- construction -------------------------------------------------------

    def add_edge(self, u: int, v: int) -> int:
        """Insert an edge (loop if ``u == v``) and return its fresh id."""
        self._check_vertex(u)
        self._check_vertex(v)
        eid = self._next_id
        self._next_id += 1
        self._edges[eid] = (u, v)
        self._inc[u][2 * eid] = None
        self._inc[v][2 * eid + 1] = None
        return eid

    def copy(self) -> "MultiGraph":
        g = MultiGraph(self._n)
        g._edges = dict(self._edges)
        g._inc = [dict(d) for d in self._inc]
        g._next_id = self._next_id
        g.labels = self.labels
        return g

    # -- basic queries ------------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return self._n

    @property
    def n_edges(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(self._n)

    def edge_ids(self) -> list[int]:
        return sorted(self._edges)

    def has_edge(self, eid: int) -> bool:
        return eid in self._edges

    def endpoints(self, eid: int) -> tuple[int, int]:
        try:
            return self._edges[eid]
        except KeyError:
            raise GraphError(f"unknown edge id {eid}") from None

    def is_loop(self, eid: int) -> bool:
        u, v = self.endpoints(eid)
        return u == v

    def degree(self, v: int) -> int:
        """Incident dart count; a loop counts twice."""
        self._check_vertex(v)
        return len(self._inc[v])

    def darts_at(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(self._inc[v])

    def incident_edges(self, v: int) -> list[int]:
        """Distinct incident edge ids, ascending; a loop appears once."""
        self._check_vertex(v)
        return sorted({d >> 1 for d in self._inc[v]})

    def dart_vertex(self, d: int) -> int:
        return self.endpoints(d >> 1)[d & 1]

    def darts(self) -> Iterator[int]:
        for eid in self._edges:
            yield 2 * eid
            yield 2 * eid + 1

    def loops_at(self, v: int) -> list[int]:
        return [e for e in self.incident_edges(v) if self.is_loop(e)]

    # -- deletion / restoration --------------------------------------------

    def delete_edge(self, eid: int) -> None:
        u, v = self.endpoints(eid)
        del self._edges[eid]
        del self._inc[u][2 * eid]
        del self._inc[v][2 * eid + 1]
        self._undo.append((eid, u, v))

    def delete_edges(self, eids: Iterable[int]) -> None:
        """Delete ``eids`` in order, pushing each onto the undo stack."""
        eids = list(eids)
        if len(set(eids)) != len(eids):
            raise GraphError("duplicate edge id in deletion batch")
        for eid in eids:
            if eid not in self._edges:
                raise GraphError(f"unknown edge id {eid}")
        for eid in eids:
            self.delete_edge(eid)

    def restore_edges(self, eids: Iterable[int]) -> None:
        """Undo ``delete_edges(eids)``.  Must match the stack top (LIFO)."""
        for eid in reversed(list(eids)):
            if not self._undo or self._undo[-1][0] != eid:
                raise GraphError(
                    f"restore of edge {eid} out of LIFO order"
                )
            _, u, v = self._undo.pop()
            self._edges[eid] = (u, v)
            self._inc[u][2 * eid] = None
            self._inc[v][2 * eid + 1] = None

    # -- equality -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return (
            self._n == other._n
            and self._edges == other._edges
            and all(
                set(a) == set(b) for a, b in zip(self._inc, other._inc)
            )
        )

    def __hash__(self):  # mutable; identity hashing only
        return id(self)

    def __repr__(self) -> str:
        return f"MultiGraph(n={self._n}, m={self.n_edges})"

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphError(f"vertex {v} out of range 0..{self._n - 1}")


# ---------------------------------------------------------------------------
# Parsing / formatting
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> MultiGraph:
    """Parse the edge-list text format.

    Labels are arbitrary whitespace-free strings mapped to dense ints in
    first-appearance order; the mapping is kept on ``graph.labels``.
    Raises :class:`ParseError` (with line number) on malformed lines and on
    empty input, since an empty graph has no embedding.
    """
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(
                f"expected two vertex labels, got {len(parts)}", line_no
            )
        uv = []
        for label in parts:
            if label not in index:
                index[label] = len(index)
            uv.append(index[label])
        edges.append((uv[0], uv[1]))
    if not index:
        raise ParseError("empty graph: no edges or vertices")
    g = MultiGraph(len(index))
    for u, v in edges:
        g.add_edge(u, v)
    g.labels = {i: label for label, i in index.items()}
    return g


def format_edge_list(g: MultiGraph) -> str:
    """Inverse of :func:`parse_edge_list`, one edge per line by ascending id."""
    names = g.labels or {}
    lines = []
    for eid in g.edge_ids():
        u, v = g.endpoints(eid)
        lines.append(f"{names.get(u, u)} {names.get(v, v)}")
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# Connectivity, cycle rank, cactus test
# ---------------------------------------------------------------------------

def _component_count(g: MultiGraph) -> int:
    seen = bytearray(g.n_vertices)
    count = 0
    for s in range(g.n_vertices):
        if seen[s]:
            continue
        count += 1
        seen[s] = 1
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for d in g._inc[v]:
                w = g.endpoints(d >> 1)[1 - (d & 1)]
                if not seen[w]:
                    seen[w] = 1
                    queue.append(w)
    return count


def is_connected(g: MultiGraph) -> bool:
    """True iff every vertex (including isolated ones) is reachable."""
    return _component_count(g) == 1


def cycle_rank(g: MultiGraph) -> int:
    """First Betti number m - n + c; the pair count can never exceed half."""
    return g.n_edges - g.n_vertices + _component_count(g)


def is_cactus(g: MultiGraph) -> bool:
    """True iff no vertex lies on two distinct cycles.

    Equivalent formulation used here: every block has cycle rank at most 1,
    and the blocks that do contain a cycle (including every loop, which is a
    one-edge cycle, and every parallel pair, a two-edge cycle) are pairwise
    vertex-disjoint.  A second loop at a vertex or a loop on a cycle vertex
    therefore fails the test, as does a third parallel edge.

    Raises :class:`DisconnectedError` on disconnected input.
    """
    if not is_connected(g):
        raise DisconnectedError("is_cactus requires a connected graph")
    cycle_hits = [0] * g.n_vertices

    def bump(v: int) -> bool:
        cycle_hits[v] += 1
        return cycle_hits[v] <= 1

    for v in g.vertices():
        for _ in g.loops_at(v):
            if not bump(v):
                return False
    for block in _blocks(g):
        verts = set()
        for eid in block:
            u, w = g.endpoints(eid)
            verts.add(u)
            verts.add(w)
        beta = len(block) - len(verts) + 1
        if beta >= 2:
            return False
        if beta == 1:
            for u in verts:
                if not bump(u):
                    return False
    return True


def _blocks(g: MultiGraph) -> list[list[int]]:
    """Biconnected blocks (edge-id lists) of the loopless part, iterative.

    Parallel edges are distinct edges: only the tree edge's own id is
    skipped on the way back, so the second copy of a parallel pair is a
    back edge and the pair forms a 2-edge block.
    """
    n = g.n_vertices
    disc = [-1] * n
    low = [0] * n
    blocks: list[list[int]] = []
    estack: list[int] = []
    timer = 0
    # Each stack frame: [vertex, tree edge that entered it, dart iterator,
    # whether that tree edge was already skipped].
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack: list[list] = [[root, -1, iter(g.darts_at(root)), False]]
        while stack:
            frame = stack[-1]
            v, enter_eid, it = frame[0], frame[1], frame[2]
            advanced = False
            for d in it:
                eid = d >> 1
                w = g.endpoints(eid)[1 - (d & 1)]
                if w == v:
                    continue  # loop
                if eid == enter_eid and not frame[3]:
                    frame[3] = True  # the tree edge itself, once
                    continue
                if disc[w] == -1:
                    estack.append(eid)
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append([w, eid, iter(g.darts_at(w)), False])
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    estack.append(eid)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            stack.pop()
            if stack:
                pv = stack[-1][0]
                if low[v] < low[pv]:
                    low[pv] = low[v]
                if low[v] >= disc[pv]:
                    block = []
                    while True:
                        e = estack.pop()
                        block.append(e)
                        if e == enter_eid:
                            break
                    blocks.append(block)
    return blocks
