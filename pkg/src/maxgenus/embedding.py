"""Rotation-system embeddings and incremental genus-raising insertion.

A rotation system assigns every vertex a cyclic order of its darts and
determines an embedding in an orientable surface.  Faces are the orbits
of ``d -> sigma_next[twin(d)]``; with n vertices, m edges and f faces the
genus is ``(2 - (n - m + f)) / 2``.

:class:`EmbeddingState` maintains an embedding under one-edge insertions.
Inserting an edge whose two corners lie on a common face splits that face
(genus unchanged); corners on distinct faces merge them (genus rises by
one); the remaining cases attach a pendant dart or seed a loop on a bare
vertex.  :func:`build_embedding` turns a verified family of k disjoint
adjacent pairs into an explicit embedding of genus at least k: embed a
spanning tree avoiding the pair edges (one face), then add each pair with
a split followed by a forced merge, then place the leftover edges.

A corner is named by the dart it precedes: inserting at corner ``r``
splices the new dart immediately before ``r`` in the vertex rotation.
The gap before ``r`` lies on ``face_id[r]``.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from .graph import (
    DisconnectedError,
    GraphError,
    MultiGraph,
    dart,
    format_dart,
    is_connected,
    parse_dart,
    twin,
)
from .greedy import AdjacentPair, PairSet, verify_pair_set


# ---------------------------------------------------------------------------
# Rotation systems and faces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RotationSystem:
    """Cyclic dart order per vertex.  Text form: ``v: e.end e.end ...``"""

    order: dict[int, tuple[int, ...]]

    def validate(self, g: MultiGraph) -> None:
        if set(self.order) != set(g.vertices()):
            raise GraphError("rotation vertex set does not match graph")
        for v, cyc in self.order.items():
            if sorted(cyc) != sorted(g.darts_at(v)):
                raise GraphError(f"rotation at vertex {v} is not a "
                                 "permutation of its darts")

    def to_text(self) -> str:
        lines = []
        for v in sorted(self.order):
            darts = " ".join(format_dart(d) for d in self.order[v])
            lines.append(f"{v}: {darts}".rstrip())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "RotationSystem":
        order: dict[int, tuple[int, ...]] = {}
        for no, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            head, sep, tail = line.partition(":")
            if not sep or not head.strip().isdigit():
                raise GraphError(f"line {no}: expected 'vertex: darts'")
            v = int(head)
            if v in order:
                raise GraphError(f"line {no}: vertex {v} repeated")
            try:
                order[v] = tuple(parse_dart(t) for t in tail.split())
            except ValueError as exc:
                raise GraphError(f"line {no}: {exc}") from None
        if not order:
            raise GraphError("empty rotation text")
        return cls(order)


def _canonical_cycle(cyc: list[int]) -> tuple[int, ...]:
    i = cyc.index(min(cyc))
    return tuple(cyc[i:] + cyc[:i])


@dataclass(frozen=True)
class FaceSet:
    """Face boundaries as canonicalized dart cycles, sorted."""

    faces: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.faces)

    def __iter__(self):
        return iter(self.faces)

    def sizes(self) -> list[int]:
        return sorted(len(f) for f in self.faces)


def _face_count(order: Mapping[int, Sequence[int]]) -> int:
    """Orbit count of ``d -> sigma_next[twin(d)]``.  No validation."""
    sigma_next: dict[int, int] = {}
    for cyc in order.values():
        k = len(cyc)
        for i in range(k):
            sigma_next[cyc[i]] = cyc[(i + 1) % k]
    seen: set[int] = set()
    count = 0
    for d in sigma_next:
        if d in seen:
            continue
        count += 1
        x = d
        while x not in seen:
            seen.add(x)
            x = sigma_next[x ^ 1]
    return count


def trace_faces(g: MultiGraph, rot: "RotationSystem | Mapping") -> FaceSet:
    """Face orbits of the embedding given by ``rot``."""
    if not isinstance(rot, RotationSystem):
        rot = RotationSystem({v: tuple(c) for v, c in rot.items()})
    rot.validate(g)
    sigma_next: dict[int, int] = {}
    for cyc in rot.order.values():
        k = len(cyc)
        for i in range(k):
            sigma_next[cyc[i]] = cyc[(i + 1) % k]
    faces = []
    seen: set[int] = set()
    for d in sorted(sigma_next):
        if d in seen:
            continue
        cyc = []
        x = d
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = sigma_next[x ^ 1]
        faces.append(_canonical_cycle(cyc))
    return FaceSet(tuple(sorted(faces)))


def genus_of(
    g: MultiGraph, rot: "RotationSystem | Mapping", *, validate: bool = True
) -> int:
    """Genus of the surface in which ``rot`` embeds the connected graph g.

    ``validate=False`` skips the permutation and connectivity checks; use
    only on rotations built directly from g's own darts.
    """
    order = rot.order if isinstance(rot, RotationSystem) else rot
    if validate:
        if not is_connected(g):
            raise DisconnectedError("genus needs a connected graph")
        RotationSystem({v: tuple(c) for v, c in order.items()}).validate(g)
    f = _face_count(order) if g.n_edges else 1
    chi = g.n_vertices - g.n_edges + f
    assert chi <= 2 and chi % 2 == 0
    return (2 - chi) // 2


# ---------------------------------------------------------------------------
# Incremental embedding
# ---------------------------------------------------------------------------

class EmbeddingState:
    """Embedding of a growing subgraph on a fixed vertex set.

    ``sigma_next``/``sigma_prev`` give the vertex rotations, and
    ``face_next[d] == sigma_next[twin(d)]`` is kept as a derived map so a
    splice only has to refresh the four entries it can invalidate.  Faces
    carry dense ids with a size and a start dart each; a dartless state
    counts one virtual face so Euler bookkeeping works from the start.
    """

    __slots__ = (
        "n_vertices", "m_emb", "sigma_next", "sigma_prev", "face_next",
        "face_id", "face_size", "face_start", "first_dart", "vertex_of",
        "_next_face",
    )

    def __init__(self, n_vertices: int):
        if n_vertices <= 0:
            raise GraphError("embedding needs at least one vertex")
        self.n_vertices = n_vertices
        self.m_emb = 0
        self.sigma_next: dict[int, int] = {}
        self.sigma_prev: dict[int, int] = {}
        self.face_next: dict[int, int] = {}
        self.face_id: dict[int, int] = {}
        self.face_size: dict[int, int] = {}
        self.face_start: dict[int, int] = {}
        self.first_dart: dict[int, int] = {}
        self.vertex_of: dict[int, int] = {}
        self._next_face = 0

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_sigma(
        cls, n_vertices: int, order: Mapping[int, Sequence[int]],
        vertex_of: Mapping[int, int],
    ) -> "EmbeddingState":
        st = cls(n_vertices)
        for v, cyc in order.items():
            k = len(cyc)
            for i, d in enumerate(cyc):
                st.sigma_next[d] = cyc[(i + 1) % k]
                st.sigma_prev[cyc[(i + 1) % k]] = d
                st.vertex_of[d] = v
            if k:
                st.first_dart[v] = cyc[0]
        st.m_emb = len(st.sigma_next) // 2
        for d in st.sigma_next:
            if vertex_of[d] != st.vertex_of[d]:
                raise GraphError(f"dart {d} listed at the wrong vertex")
            st.face_next[d] = st.sigma_next[twin(d)]
        for d in sorted(st.sigma_next):
            if d in st.face_id:
                continue
            fid = st._next_face
            st._next_face += 1
            size = 0
            x = d
            while x not in st.face_id:
                st.face_id[x] = fid
                size += 1
                x = st.face_next[x]
            st.face_size[fid] = size
            st.face_start[fid] = d
        return st

    @classmethod
    def tree_embedding(
        cls, g: MultiGraph, tree_edges: "set[int] | frozenset[int]"
    ) -> "EmbeddingState":
        """Single-face embedding of a spanning tree, sorted darts per
        vertex."""
        n = g.n_vertices
        if len(tree_edges) != n - 1:
            raise GraphError("spanning tree needs n-1 edges")
        adj: dict[int, list[int]] = {v: [] for v in g.vertices()}
        for eid in tree_edges:
            u, v = g.endpoints(eid)
            if u == v:
                raise GraphError("loop in spanning tree")
            adj[u].append(dart(eid, 0))
            adj[v].append(dart(eid, 1))
        order = {v: sorted(ds) for v, ds in adj.items()}
        vertex_of = {d: v for v, ds in order.items() for d in ds}
        st = cls.from_sigma(n, order, vertex_of)
        if n > 1 and st.n_faces != 1:
            raise GraphError("tree edges do not span the graph")
        return st

    @classmethod
    def from_rotation(
        cls, g: MultiGraph, rot: RotationSystem
    ) -> "EmbeddingState":
        rot.validate(g)
        vertex_of = {d: v for v, cyc in rot.order.items() for d in cyc}
        return cls.from_sigma(g.n_vertices, rot.order, vertex_of)

    # -- queries -----------------------------------------------------------

    @property
    def n_faces(self) -> int:
        return len(self.face_size) or 1

    @property
    def genus(self) -> int:
        chi = self.n_vertices - self.m_emb + self.n_faces
        if chi > 2 or chi % 2:
            raise GraphError("genus undefined: embedded subgraph does not "
                             "span connectedly")
        return (2 - chi) // 2

    def rotation(self) -> RotationSystem:
        order: dict[int, tuple[int, ...]] = {}
        for v in range(self.n_vertices):
            d = self.first_dart.get(v)
            if d is None:
                order[v] = ()
                continue
            cyc = [d]
            x = self.sigma_next[d]
            while x != d:
                cyc.append(x)
                x = self.sigma_next[x]
            order[v] = _canonical_cycle(cyc)
        return RotationSystem(order)

    def _walk_face(self, fid: int) -> list[int]:
        start = self.face_start[fid]
        out = [start]
        x = self.face_next[start]
        while x != start:
            out.append(x)
            x = self.face_next[x]
        return out

    def faces(self) -> FaceSet:
        return FaceSet(tuple(sorted(
            _canonical_cycle(self._walk_face(fid)) for fid in self.face_size
        )))

    # -- insertion ---------------------------------------------------------

    def _splice(self, d: int, v: int, ref: int | None) -> None:
        self.vertex_of[d] = v
        if ref is None:
            self.sigma_next[d] = d
            self.sigma_prev[d] = d
            self.first_dart[v] = d
            return
        p = self.sigma_prev[ref]
        self.sigma_next[p] = d
        self.sigma_prev[d] = p
        self.sigma_next[d] = ref
        self.sigma_prev[ref] = d

    def _check_corner(self, v: int, corner: int | None) -> None:
        if not 0 <= v < self.n_vertices:
            raise GraphError(f"vertex {v} out of range")
        if corner is None:
            if v in self.first_dart:
                raise GraphError(f"vertex {v} has darts, corner required")
            return
        if self.vertex_of.get(corner) != v:
            raise GraphError(f"corner dart {corner} is not at vertex {v}")

    def insert_edge(
        self, eid: int, u: int, v: int,
        corner_u: int | None, corner_v: int | None, *, check: bool = False,
    ) -> str:
        """Insert edge ``eid`` with dart 2*eid at u and 2*eid+1 at v.

        Returns the case applied: ``split`` (corners on one face),
        ``merge`` (corners on two faces), ``absorb`` (exactly one bare
        endpoint) or ``first-loop`` (loop on a bare vertex).  The caller
        must pass u, v in the edge's stored endpoint order so dart
        encoding stays aligned with the graph.
        """
        d0, d1 = dart(eid, 0), dart(eid, 1)
        if d0 in self.vertex_of:
            raise GraphError(f"edge {eid} already embedded")
        self._check_corner(u, corner_u)
        self._check_corner(v, corner_v)

        if corner_u is None and corner_v is None:
            if u != v:
                raise GraphError("cannot join two bare vertices: embedded "
                                 "subgraph must stay connected")
            kind = "first-loop"
        elif corner_u is None or corner_v is None:
            kind = "absorb"
        elif self.face_id[corner_u] == self.face_id[corner_v]:
            kind = "split"
        else:
            kind = "merge"

        small_darts: list[int] = []
        if kind == "merge":
            fa = self.face_id[corner_u]
            fb = self.face_id[corner_v]
            keep, lose = (fa, fb) if (
                (self.face_size[fa], fa) >= (self.face_size[fb], fb)
            ) else (fb, fa)
            small_darts = self._walk_face(lose)

        self._splice(d0, u, corner_u)
        if corner_v is None and corner_u is None:
            self._splice(d1, v, d0)
        elif corner_v is None:
            self._splice(d1, v, None)
        else:
            self._splice(d1, v, corner_v)

        p0 = self.sigma_prev[d0]
        p1 = self.sigma_prev[d1]
        for x in {twin(p0), d1, twin(p1), d0}:
            self.face_next[x] = self.sigma_next[twin(x)]

        if kind == "first-loop":
            for d in (d0, d1):
                fid = self._next_face
                self._next_face += 1
                self.face_id[d] = fid
                self.face_size[fid] = 1
                self.face_start[fid] = d
        elif kind == "absorb":
            anchor = corner_u if corner_u is not None else corner_v
            fid = self.face_id[anchor]
            self.face_id[d0] = fid
            self.face_id[d1] = fid
            self.face_size[fid] += 2
        elif kind == "split":
            fid = self.face_id[corner_u]
            # alternate one step per side; the first orbit to close is the
            # smaller, so the relabel cost tracks the smaller face
            a, b = d0, d1
            orbit_a, orbit_b = [d0], [d1]
            while True:
                a = self.face_next[a]
                if a == d0:
                    small, big_seed = orbit_a, d1
                    break
                orbit_a.append(a)
                b = self.face_next[b]
                if b == d1:
                    small, big_seed = orbit_b, d0
                    break
                orbit_b.append(b)
            new_id = self._next_face
            self._next_face += 1
            for d in small:
                self.face_id[d] = new_id
            self.face_id[big_seed] = fid
            total = self.face_size[fid] + 2
            self.face_size[new_id] = len(small)
            self.face_start[new_id] = small[0]
            self.face_size[fid] = total - len(small)
            self.face_start[fid] = big_seed
        else:  # merge
            for d in small_darts:
                self.face_id[d] = keep
            self.face_id[d0] = keep
            self.face_id[d1] = keep
            self.face_size[keep] += self.face_size[lose] + 2
            del self.face_size[lose]
            del self.face_start[lose]
            self.face_start[keep] = d0

        self.m_emb += 1
        if check:
            self._audit()
        return kind

    def _first_face_dart_at(self, fid: int, v: int) -> int | None:
        for d in self._walk_face(fid):
            if self.vertex_of[d] == v:
                return d
        return None

    def insert_adjacent_pair(
        self, g: MultiGraph, pair: AdjacentPair, *, check: bool = False
    ) -> None:
        """Insert both edges of an adjacent pair, raising the genus by one.

        Requires a single current face.  The first edge splits it; the
        witness dart of that edge then has its two flanking corners on
        the two distinct faces, so the second edge can always be routed
        corner-to-corner across them, forcing a merge back to one face.
        """
        if self.n_faces != 1:
            raise GraphError("pair insertion needs a single face")
        w = pair.witness
        eu, ev = g.endpoints(pair.e)
        if w not in (eu, ev):
            raise GraphError("witness is not an endpoint of the first edge")
        if eu == ev:
            ref = self.first_dart.get(eu)
            kind = self.insert_edge(pair.e, eu, ev, ref, ref, check=check)
            assert kind in ("split", "first-loop")
            d_w = dart(pair.e, 0)
        else:
            fid = next(iter(self.face_size))
            ref_u = self._first_face_dart_at(fid, eu)
            ref_v = self._first_face_dart_at(fid, ev)
            if ref_u is None or ref_v is None:
                raise GraphError("pair endpoints not embedded yet")
            kind = self.insert_edge(pair.e, eu, ev, ref_u, ref_v, check=check)
            assert kind == "split"
            d_w = dart(pair.e, 0) if eu == w else dart(pair.e, 1)

        side_a = self.face_id[d_w]
        after = self.sigma_next[d_w]
        side_b = self.face_id[after]
        assert side_a != side_b

        fu, fv = g.endpoints(pair.f)
        if fu == fv:
            if fu != w:
                raise GraphError("loop of the pair is not at the witness")
            kind = self.insert_edge(pair.f, fu, fv, d_w, after, check=check)
        else:
            if w not in (fu, fv):
                raise GraphError("witness is not an endpoint of the second "
                                 "edge")
            x = fv if fu == w else fu
            ref_x = self._first_face_dart_at(side_a, x)
            ref_w = after if ref_x is not None else d_w
            if ref_x is None:
                ref_x = self._first_face_dart_at(side_b, x)
                assert ref_x is not None
            if fu == w:
                kind = self.insert_edge(pair.f, fu, fv, ref_w, ref_x,
                                        check=check)
            else:
                kind = self.insert_edge(pair.f, fu, fv, ref_x, ref_w,
                                        check=check)
        assert kind == "merge"
        assert self.n_faces == 1

    # -- auditing ----------------------------------------------------------

    def _audit(self) -> None:
        for d, nxt in self.sigma_next.items():
            assert self.sigma_prev[nxt] == d
            assert self.vertex_of[nxt] == self.vertex_of[d]
            assert self.face_next[d] == self.sigma_next[twin(d)]
        seen: set[int] = set()
        for fid, start in self.face_start.items():
            walk = self._walk_face(fid)
            assert len(walk) == self.face_size[fid]
            for d in walk:
                assert self.face_id[d] == fid
                assert d not in seen
                seen.add(d)
            assert start in walk
        assert seen == set(self.sigma_next)
        # Euler parity only makes sense once every vertex carries a dart
        if len(self.first_dart) == self.n_vertices:
            chi = self.n_vertices - self.m_emb + self.n_faces
            assert chi % 2 == 0


# ---------------------------------------------------------------------------
# Building a certified embedding from a pair family
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EmbeddingResult:
    rotation: RotationSystem
    faces: FaceSet
    genus: int
    n_vertices: int
    n_edges: int
    n_faces: int
    pairs_used: int


def _bfs_tree(g: MultiGraph, excluded: set[int]) -> set[int]:
    """Spanning tree by BFS over non-excluded edges, lowest ids first."""
    from collections import deque

    root = 0
    seen = {root}
    tree: set[int] = set()
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for eid in g.incident_edges(v):
            if eid in excluded or g.is_loop(eid):
                continue
            a, b = g.endpoints(eid)
            other = b if a == v else a
            if other not in seen:
                seen.add(other)
                tree.add(eid)
                queue.append(other)
    if len(seen) != g.n_vertices:
        raise DisconnectedError("graph minus pair edges is not connected")
    return tree


def build_embedding(
    g: MultiGraph, pairs: PairSet | Sequence[AdjacentPair], *,
    check: bool = False,
) -> EmbeddingResult:
    """Embedding of g with genus at least ``len(pairs)``.

    Verifies the pair family first, embeds a spanning tree that avoids
    the pair edges, applies the pairs in order (each raises the genus by
    exactly one), then inserts the leftover edges, preferring same-face
    corners so they split instead of merging.  Leftover merges can only
    push the genus higher; the result's genus is the achieved value.
    """
    if not isinstance(pairs, PairSet):
        pairs = PairSet(list(pairs))
    res = verify_pair_set(g, pairs)
    if not res:
        raise GraphError(f"pair family fails verification: {res.reason}")
    pair_edges = set(pairs.edge_ids())
    tree = _bfs_tree(g, pair_edges)
    st = EmbeddingState.tree_embedding(g, tree)
    for pair in pairs:
        st.insert_adjacent_pair(g, pair, check=check)
    leftover = [e for e in g.edge_ids()
                if e not in tree and e not in pair_edges]
    for eid in leftover:
        u, v = g.endpoints(eid)
        corner_u = corner_v = None
        for fid in sorted(st.face_size):
            du = st._first_face_dart_at(fid, u)
            if du is None:
                continue
            dv = st._first_face_dart_at(fid, v)
            if dv is not None:
                corner_u, corner_v = du, dv  # same face: will split
                break
            if corner_u is None:
                corner_u = du
        if corner_v is None:
            for fid in sorted(st.face_size):
                dv = st._first_face_dart_at(fid, v)
                if dv is not None:
                    corner_v = dv
                    break
        st.insert_edge(eid, u, v, corner_u, corner_v, check=check)
    assert st.m_emb == g.n_edges
    genus = st.genus
    assert genus >= len(pairs.pairs)
    rot = st.rotation()
    if check:
        rebuilt = EmbeddingState.from_rotation(g, rot)
        assert rebuilt.faces() == st.faces()
        assert genus_of(g, rot) == genus
    return EmbeddingResult(
        rotation=rot,
        faces=st.faces(),
        genus=genus,
        n_vertices=g.n_vertices,
        n_edges=g.n_edges,
        n_faces=st.n_faces,
        pairs_used=len(pairs.pairs),
    )
