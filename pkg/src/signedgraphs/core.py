"""Signed graphs: representation, switching, balance, distances and negative girth.

Vertices are the integers ``0 .. n-1``.  Signs are the integers ``+1`` and
``-1``.  A vertex pair may carry one edge of each sign at the same time (a
*digon*, which is a negative 2-cycle); loops are not allowed.
"""

from __future__ import annotations

import math
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import networkx as nx
import numpy as np

POS = 1
NEG = -1

Edge = tuple[int, int, int]


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertex arguments."""


def parse_sign(s) -> int:
    if s in (1, "+", "+1"):
        return POS
    if s in (-1, "-", "-1"):
        return NEG
    raise GraphError(f"bad sign {s!r}")


def sign_char(s: int) -> str:
    return "+" if s > 0 else "-"


class SignedGraph:
    """An immutable signed graph on vertices ``0..n-1``.

    ``edges`` is a frozenset of normalized triples ``(u, v, sign)`` with
    ``u < v``.  ``labels`` is an optional tuple of opaque vertex labels.
    """

    __slots__ = ("_n", "_edges", "_labels", "_adj", "_signs")

    def __init__(self, n: int, edges: Iterable = (), labels: Sequence | None = None):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        norm = set()
        for e in edges:
            u, v, s = e
            u, v, s = int(u), int(v), parse_sign(s)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u > v:
                u, v = v, u
            if (u, v, s) in norm:
                raise GraphError(f"duplicate edge ({u},{v},{sign_char(s)})")
            norm.add((u, v, s))
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise GraphError("labels must have one entry per vertex")
        self._build(n, frozenset(norm), labels)

    @classmethod
    def _trusted(cls, n: int, edges, labels=None, ordered: bool = False) -> "SignedGraph":
        """Skip validation; ``edges`` must already be normalized and distinct,
        and sorted by ``(u, v, + before -)`` when ``ordered`` is set."""
        G = cls.__new__(cls)
        G._build(n, edges, None if labels is None else tuple(labels), ordered)
        return G

    def _build(self, n, edges, labels, ordered=False):
        self._n = n
        self._edges = frozenset(edges)
        self._labels = labels
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        signs: dict[tuple[int, int], int] = {}
        # visiting edges in (u, v, + before -) order leaves every list sorted
        if not ordered:
            edges = sorted(edges, key=lambda e: (e[0], e[1], -e[2]))
        for u, v, s in edges:
            adj[u].append((v, s))
            adj[v].append((u, s))
            # bit 1 = positive edge present, bit 2 = negative edge present
            signs[(u, v)] = signs.get((u, v), 0) | (1 if s > 0 else 2)
        self._adj = tuple(map(tuple, adj))
        self._signs = signs

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> frozenset:
        return self._edges

    @property
    def labels(self):
        return self._labels

    def __len__(self):
        return self._n

    def __eq__(self, other):
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"SignedGraph(n={self._n}, m={len(self._edges)})"

    def sorted_edges(self) -> list[Edge]:
        """Edges ordered by (u, v) with the positive edge of a digon first."""
        return sorted(self._edges, key=lambda e: (e[0], e[1], -e[2]))

    def neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        """``(w, sign)`` pairs incident to ``v``; a digon neighbour appears twice."""
        return self._adj[v]

    def pair_state(self, u: int, v: int) -> int:
        """0 = no edge, 1 = positive, 2 = negative, 3 = digon."""
        if u > v:
            u, v = v, u
        return self._signs.get((u, v), 0)

    def has_edge(self, u: int, v: int, s: int | None = None) -> bool:
        st = self.pair_state(u, v)
        if s is None:
            return st != 0
        return bool(st & (1 if s > 0 else 2))

    def underlying_neighbors(self, v: int) -> list[int]:
        out = []
        for w, _ in self._adj[v]:
            if not out or out[-1] != w:
                out.append(w)
        return out

    def degree(self, v: int) -> int:
        return len(self.underlying_neighbors(v))

    def with_labels(self, labels) -> "SignedGraph":
        return SignedGraph(self._n, self._edges, labels)


def new_graph(n: int, edges: Iterable, labels: Sequence | None = None) -> SignedGraph:
    return SignedGraph(n, edges, labels)


def _check_vertices(G: SignedGraph, S: Iterable[int]) -> frozenset:
    S = frozenset(int(x) for x in S)
    for x in S:
        if not 0 <= x < G.n:
            raise GraphError(f"vertex {x} out of range for n={G.n}")
    return S


def switch(G: SignedGraph, S: Iterable[int]) -> SignedGraph:
    """Flip the sign of every edge with exactly one endpoint in ``S``."""
    S = _check_vertices(G, S)
    edges = [(u, v, -s if ((u in S) != (v in S)) else s) for u, v, s in G.edges]
    return SignedGraph(G.n, edges, G.labels)


def relabel(G: SignedGraph, perm: Sequence[int]) -> SignedGraph:
    """Vertex ``v`` becomes ``perm[v]``."""
    if sorted(perm) != list(range(G.n)):
        raise GraphError("not a permutation")
    edges = [(perm[u], perm[v], s) for u, v, s in G.edges]
    labels = None
    if G.labels is not None:
        labels = [None] * G.n
        for v, lab in enumerate(G.labels):
            labels[perm[v]] = lab
    return SignedGraph(G.n, edges, labels)


# ---------------------------------------------------------------------------
# cycles and walks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NegativeCycle:
    """A cycle ``v0 v1 ... v_{l-1} v0``; ``signs[i]`` is the sign of the edge
    from ``vertices[i]`` to ``vertices[(i+1) % l]``."""

    vertices: tuple[int, ...]
    signs: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edge_walk(self) -> list[Edge]:
        L = self.length
        return [(self.vertices[i], self.vertices[(i + 1) % L], self.signs[i]) for i in range(L)]

    def validate(self, G: SignedGraph) -> bool:
        L = self.length
        if L < 2 or len(self.signs) != L or len(set(self.vertices)) != L:
            return False
        if L == 2 and self.signs[0] == self.signs[1]:
            return False
        try:
            return closed_walk_sign(G, self.edge_walk()) == NEG
        except GraphError:
            return False


@dataclass(frozen=True)
class BalanceResult:
    """Either a switching set making every edge positive, or a negative cycle."""

    balanced: bool
    switching: frozenset | None = None
    cycle: NegativeCycle | None = None

    def __bool__(self):
        return self.balanced

    def validate(self, G: SignedGraph) -> bool:
        if self.balanced:
            H = switch(G, self.switching)
            return all(s > 0 for _, _, s in H.edges)
        return self.cycle is not None and self.cycle.validate(G)


@dataclass(frozen=True)
class Girth:
    """Negative girth; ``length`` is ``math.inf`` (with no witness) for
    balanced graphs."""

    length: int | float
    witness: NegativeCycle | None = None

    @property
    def finite(self) -> bool:
        return self.witness is not None

    def __str__(self):
        return str(self.length) if self.finite else "inf"


def closed_walk_sign(G: SignedGraph, walk: Sequence) -> int:
    """Product of the signs along a closed walk given as ``(u, v, sign)`` steps."""
    if not walk:
        return POS
    prod = POS
    for i, (u, v, s) in enumerate(walk):
        s = parse_sign(s)
        if not G.has_edge(u, v, s):
            raise GraphError(f"walk uses missing edge ({u},{v},{sign_char(s)})")
        nxt = walk[(i + 1) % len(walk)]
        if v != nxt[0]:
            raise GraphError("walk is not closed / not contiguous")
        prod *= s
    return prod


def reduce_closed_walk(steps: Sequence[Edge]) -> list[Edge]:
    """Turn a negative closed walk into a simple negative cycle no longer than it.

    Repeatedly split at the first repeated vertex: the excised sub-walk and the
    remainder are both closed, and exactly one of them is negative; keep it.
    """
    steps = list(steps)
    while True:
        seen: dict[int, int] = {}
        split = None
        for i, (u, _, _) in enumerate(steps):
            if u in seen:
                split = (seen[u], i)
                break
            seen[u] = i
        if split is None:
            return steps
        a, b = split
        inner = steps[a:b]
        outer = steps[:a] + steps[b:]
        if math.prod(s for _, _, s in inner) < 0:
            steps = inner
        else:
            steps = outer


def _steps_to_cycle(steps: Sequence[Edge]) -> NegativeCycle:
    return NegativeCycle(tuple(u for u, _, _ in steps), tuple(s for _, _, s in steps))


# ---------------------------------------------------------------------------
# balance
# ---------------------------------------------------------------------------


def is_balanced(G: SignedGraph) -> BalanceResult:
    """Spanning-forest potential labelling.

    Returns a switching certificate, or a negative cycle made of a non-tree
    edge plus tree paths.  Digons are reported as length-2 cycles.
    """
    for (u, v), st in sorted(G._signs.items()):
        if st == 3:
            return BalanceResult(False, cycle=NegativeCycle((u, v), (POS, NEG)))
    pot = [0] * G.n
    parent: list[tuple[int, int] | None] = [None] * G.n
    depth = [-1] * G.n
    for root in range(G.n):
        if depth[root] >= 0:
            continue
        depth[root] = 0
        pot[root] = POS
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w, s in G.neighbors(u):
                if depth[w] < 0:
                    depth[w] = depth[u] + 1
                    pot[w] = pot[u] * s
                    parent[w] = (u, s)
                    queue.append(w)
                elif pot[w] != pot[u] * s:
                    return BalanceResult(False, cycle=_fundamental_cycle(u, w, s, parent, depth))
    flipped = frozenset(v for v in range(G.n) if pot[v] < 0)
    return BalanceResult(True, switching=flipped)


def _fundamental_cycle(u, w, s, parent, depth) -> NegativeCycle:
    # tree path u -> lca, then lca -> w, then the closing edge w -> u
    up_u, up_w = [], []
    a, b = u, w
    while depth[a] > depth[b]:
        p, ps = parent[a]
        up_u.append((a, p, ps))
        a = p
    while depth[b] > depth[a]:
        p, ps = parent[b]
        up_w.append((b, p, ps))
        b = p
    while a != b:
        p, ps = parent[a]
        up_u.append((a, p, ps))
        a = p
        p, ps = parent[b]
        up_w.append((b, p, ps))
        b = p
    down_w = [(y, x, t) for x, y, t in reversed(up_w)]
    steps = up_u + down_w + [(w, u, s)]
    return _steps_to_cycle(steps)


def is_balanced_by_switching(G: SignedGraph) -> bool:
    """Exhaustive oracle: try all ``2^n`` switchings."""
    edges = list(G.edges)
    for mask in range(1 << G.n):
        if all(s * (-1 if (mask >> u & 1) ^ (mask >> v & 1) else 1) > 0 for u, v, s in edges):
            return True
    return False


# ---------------------------------------------------------------------------
# double cover and negative girth
# ---------------------------------------------------------------------------


def double_cover(G: SignedGraph) -> tuple[nx.Graph, dict]:
    """The 2-lift with fibres ``(v, +1)`` and ``(v, -1)``.

    Returns the cover as a networkx graph and the fibre map (cover vertex ->
    base vertex).
    """
    C = nx.Graph()
    fiber = {}
    for v in range(G.n):
        for t in (POS, NEG):
            C.add_node((v, t))
            fiber[(v, t)] = v
    for u, v, s in G.edges:
        for t in (POS, NEG):
            C.add_edge((u, t), (v, t * s))
    return C, fiber


def _cover_dist(G: SignedGraph, src: tuple[int, int], limit: float) -> dict:
    dist = {src: 0}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        d = dist[x]
        if d >= limit:
            continue
        u, t = x
        for w, s in G.neighbors(u):
            y = (w, t * s)
            if y not in dist:
                dist[y] = d + 1
                queue.append(y)
    return dist


def _shortest_through(G: SignedGraph, v: int, limit: float):
    """Length and lexicographically smallest shortest negative closed walk
    through ``v``, if one exists of length < ``limit``."""
    dist = _cover_dist(G, (v, NEG), limit - 1)
    start = (v, POS)
    if start not in dist or dist[start] >= limit:
        return None
    L = dist[start]
    steps = []
    x = start
    for rem in range(L, 0, -1):
        u, t = x
        for w, s in G.neighbors(u):
            y = (w, t * s)
            if dist.get(y) == rem - 1:
                steps.append((u, w, s))
                x = y
                break
    return L, steps


def _girth_chunk(args):
    G, sources = args
    best = math.inf
    found = None
    for v in sources:
        r = _shortest_through(G, v, best)
        if r is not None and r[0] < best:
            best, found = r[0], (v, r[1])
    return best, found


DENSE_LIMIT = 3000


def _min_source_dense(G: SignedGraph):
    """Shortest ``(v,+) -> (v,-)`` distance for all ``v`` at once.

    Breadth-first layers from every cover vertex simultaneously, as boolean
    matrix products; returns ``(length, smallest v attaining it)``.
    """
    n = G.n
    A = np.zeros((2 * n, 2 * n), dtype=np.float32)
    # cover vertex (v, +) is v, (v, -) is v + n
    for u, v, s in G.edges:
        if s > 0:
            A[u, v] = A[v, u] = A[u + n, v + n] = A[v + n, u + n] = 1
        else:
            A[u, v + n] = A[v + n, u] = A[u + n, v] = A[v, u + n] = 1
    R = np.eye(2 * n, dtype=np.float32)
    reached = int(R.sum())
    d = 0
    while True:
        d += 1
        R = np.minimum(R + R @ A, 1)
        hit = np.flatnonzero(np.diagonal(R[:n, n:]))
        if hit.size:
            return d, int(hit[0])
        now = int(R.sum())
        if now == reached:
            return math.inf, None
        reached = now


def negative_girth(G: SignedGraph, workers: int = 1) -> Girth:
    """Shortest negative cycle.

    For each source ``v`` the shortest ``(v,+) -> (v,-)`` path in the double
    cover is a shortest negative closed walk through ``v``; the global minimum
    is attained by a simple cycle.  Ties go to the smallest source and then the
    lexicographically smallest walk, so the witness does not depend on
    ``workers`` or on which search strategy ran.
    """
    if G.n == 0 or not G.edges:
        return Girth(math.inf)
    if 2 * G.n <= DENSE_LIMIT:
        best, v = _min_source_dense(G)
    elif workers > 1:
        chunks = [list(range(i, G.n, workers)) for i in range(workers)]
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(_girth_chunk, [(G, c) for c in chunks]))
        best = min(r[0] for r in results)
        v = min((r[1][0] for r in results if r[0] == best), default=None)
    else:
        best, found = _girth_chunk((G, range(G.n)))
        v = found[0] if found else None
    if v is None:
        return Girth(math.inf)
    _, steps = _shortest_through(G, v, best + 1)
    steps = reduce_closed_walk(steps)
    cyc = _steps_to_cycle(steps)
    return Girth(cyc.length, cyc)


def negative_girth_by_cycles(G: SignedGraph) -> int | float:
    """Oracle: depth-first enumeration of simple cycles (rooted at their
    smallest vertex), keeping the shortest negative one."""
    best = math.inf
    for (u, v), st in G._signs.items():
        if st == 3:
            return 2
    nbrs = [G.underlying_neighbors(v) for v in range(G.n)]

    def dfs(root, x, sign, length, on_path):
        nonlocal best
        if length + 1 >= best:
            return
        for y in nbrs[x]:
            s = POS if G.pair_state(x, y) == 1 else NEG
            if y == root and length >= 2:
                if sign * s < 0:
                    best = length + 1
                continue
            if y > root and y not in on_path:
                on_path.add(y)
                dfs(root, y, sign * s, length + 1, on_path)
                on_path.discard(y)

    for r in range(G.n):
        dfs(r, r, POS, 0, {r})
    return best


# ---------------------------------------------------------------------------
# distances and derived graphs
# ---------------------------------------------------------------------------


def bfs_distances(G: SignedGraph, sources: Iterable[int]) -> dict[int, int]:
    """Sign-blind hop distances from a set of sources; unreachable vertices
    are absent."""
    dist = {}
    queue = deque()
    for s in sources:
        if s not in dist:
            dist[s] = 0
            queue.append(s)
    while queue:
        x = queue.popleft()
        for y in G.underlying_neighbors(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance(G: SignedGraph, x: int, y: int) -> int | float:
    _check_vertices(G, (x, y))
    return bfs_distances(G, [x]).get(y, math.inf)


def ball(G: SignedGraph, v: int, r: int) -> frozenset:
    _check_vertices(G, (v,))
    return frozenset(w for w, d in bfs_distances(G, [v]).items() if d <= r)


def radius_in(G: SignedGraph, H: Iterable[int]) -> int | float:
    """``min_{x in H} max_{y in H} d_G(x, y)`` with ambient distances."""
    H = _check_vertices(G, H)
    if not H:
        raise GraphError("radius of an empty vertex set")
    best = math.inf
    for x in sorted(H):
        dist = bfs_distances(G, [x])
        ecc = max(dist.get(y, math.inf) for y in H)
        best = min(best, ecc)
    return best


def induced(G: SignedGraph, S: Iterable[int]) -> tuple[SignedGraph, list[int]]:
    """Induced subgraph on ``S``; vertex ``i`` of the result is ``verts[i]``."""
    S = _check_vertices(G, S)
    verts = sorted(S)
    idx = {v: i for i, v in enumerate(verts)}
    edges = [(idx[u], idx[v], s) for u, v, s in G.edges if u in idx and v in idx]
    labels = [G.labels[v] for v in verts] if G.labels is not None else None
    return SignedGraph(len(verts), edges, labels), verts


def negative_subgraph(G: SignedGraph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from((u, v) for u, v, s in G.edges if s < 0)
    return H


def to_all_negative(H: nx.Graph) -> SignedGraph:
    nodes = sorted(H.nodes)
    idx = {v: i for i, v in enumerate(nodes)}
    return SignedGraph(len(nodes), [(idx[u], idx[v], NEG) for u, v in H.edges])


def underlying_graph(G: SignedGraph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from((u, v) for u, v, _ in G.edges)
    return H


def disjoint_union(*graphs: SignedGraph) -> SignedGraph:
    edges, off = [], 0
    for H in graphs:
        edges += [(u + off, v + off, s) for u, v, s in H.edges]
        off += H.n
    return SignedGraph(off, edges)


def add_isolated(G: SignedGraph, count: int) -> SignedGraph:
    labels = None
    if G.labels is not None:
        labels = list(G.labels) + [None] * count
    return SignedGraph(G.n + count, G.edges, labels)
