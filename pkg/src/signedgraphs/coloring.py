"""Balanced sets, balanced colourings and exact search.

The branch-and-bound searches keep one union-find-with-parity structure per
colour class.  A class is balanced exactly when every edge constraint
``parity(u) xor parity(w) == (sign < 0)`` inside it is consistent, so adding a
vertex costs one ``relate`` per neighbour already in the class, and
backtracking pops the union log.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx

from .core import BalanceResult, GraphError, SignedGraph, induced, is_balanced

DEFAULT_BUDGET = 10**7


class BudgetExhausted(RuntimeError):
    """Search stopped at its node limit.  ``best`` holds the best answer found."""

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class _ParityForest:
    """Union-find with parity and an undo log (no path compression)."""

    __slots__ = ("parent", "par", "size", "log")

    def __init__(self, n):
        self.parent = list(range(n))
        self.par = [0] * n
        self.size = [1] * n
        self.log = []

    def find(self, x):
        p = 0
        parent = self.parent
        while parent[x] != x:
            p ^= self.par[x]
            x = parent[x]
        return x, p

    def relate(self, x, y, odd):
        rx, px = self.find(x)
        ry, py = self.find(y)
        if rx == ry:
            return (px ^ py) == odd
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.par[ry] = px ^ py ^ odd
        self.size[rx] += self.size[ry]
        self.log.append(ry)
        return True

    def mark(self):
        return len(self.log)

    def undo(self, m):
        log, parent = self.log, self.parent
        while len(log) > m:
            ry = log.pop()
            rx = parent[ry]
            self.size[rx] -= self.size[ry]
            parent[ry] = ry
            self.par[ry] = 0


class _Classes:
    """Colour classes under construction; colour 0 means unassigned."""

    def __init__(self, G: SignedGraph, k: int):
        self.G = G
        self.color = [0] * G.n
        self.forests = [None] + [_ParityForest(G.n) for _ in range(k)]
        self.stack = []

    def try_add(self, x, c) -> bool:
        F = self.forests[c]
        m = F.mark()
        color = self.color
        for y, s in self.G.neighbors(x):
            if color[y] == c and not F.relate(x, y, 1 if s < 0 else 0):
                F.undo(m)
                return False
        color[x] = c
        self.stack.append((x, c, m))
        return True

    def pop(self):
        x, c, m = self.stack.pop()
        self.forests[c].undo(m)
        self.color[x] = 0


def is_balanced_set(G: SignedGraph, S: Iterable[int]) -> BalanceResult:
    """Balance of ``G[S]`` with the witness translated back to ``G``'s vertices."""
    H, verts = induced(G, S)
    r = is_balanced(H)
    if r.balanced:
        return BalanceResult(True, switching=frozenset(verts[i] for i in r.switching))
    cyc = type(r.cycle)(tuple(verts[i] for i in r.cycle.vertices), r.cycle.signs)
    return BalanceResult(False, cycle=cyc)


@dataclass(frozen=True)
class BalancedColoring:
    """Colours are ``1..p``; ``colors[v]`` is the colour of vertex ``v``."""

    colors: tuple[int, ...]
    p: int
    switchings: tuple[frozenset, ...] = field(default=(), compare=False)

    @classmethod
    def build(cls, G: SignedGraph, colors: Sequence[int], p: int | None = None):
        colors = tuple(colors)
        if p is None:
            p = max(colors, default=0)
        sw = []
        for c in range(1, p + 1):
            r = is_balanced_set(G, [v for v in range(G.n) if colors[v] == c])
            sw.append(r.switching if r.balanced else None)
        return cls(colors, p, tuple(sw))

    @property
    def used(self) -> int:
        return len(set(self.colors))

    def classes(self) -> list[list[int]]:
        return [[v for v, c in enumerate(self.colors) if c == i] for i in range(1, self.p + 1)]

    def validate(self, G: SignedGraph) -> bool:
        return check_coloring(G, self.colors, self.p)


def check_coloring(G: SignedGraph, f, p: int) -> bool:
    """True iff ``f`` uses colours in ``1..p`` and every class is balanced."""
    if isinstance(f, dict):
        if set(f) != set(range(G.n)):
            raise GraphError("colouring is not total")
        f = [f[v] for v in range(G.n)]
    if len(f) != G.n:
        raise GraphError("colouring is not total")
    if any(not 1 <= c <= p for c in f):
        return False
    return all(is_balanced_set(G, [v for v in range(G.n) if f[v] == c]).balanced for c in set(f))


def degeneracy_order(G: SignedGraph) -> list[int]:
    """Smallest-last order reversed, so high-core vertices come first."""
    deg = {v: G.degree(v) for v in range(G.n)}
    alive = set(range(G.n))
    removed = []
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        removed.append(v)
        alive.discard(v)
        for w in G.underlying_neighbors(v):
            if w in alive:
                deg[w] -= 1
    return removed[::-1]


def _digon_clique_bound(G: SignedGraph) -> int:
    best = 0
    for v in range(G.n):
        clique = [v]
        for w in range(G.n):
            if w != v and all(G.pair_state(w, x) == 3 for x in clique):
                clique.append(w)
        best = max(best, len(clique))
    return best


def _greedy(G: SignedGraph, order) -> list[int]:
    cls = _Classes(G, G.n)
    for x in order:
        c = 1
        while not cls.try_add(x, c):
            c += 1
    return cls.color[:]


class _Counter:
    __slots__ = ("nodes", "limit")

    def __init__(self, limit):
        self.nodes = 0
        self.limit = limit

    def tick(self):
        self.nodes += 1
        if self.nodes > self.limit:
            raise BudgetExhausted("node budget exhausted")


def _k_coloring(G: SignedGraph, order, k: int, counter: _Counter):
    cls = _Classes(G, k)
    n = len(order)

    def go(i, used):
        if i == n:
            return True
        counter.tick()
        x = order[i]
        for c in range(1, min(used + 1, k) + 1):
            if cls.try_add(x, c):
                if go(i + 1, max(used, c)):
                    return True
                cls.pop()
        return False

    if go(0, 0):
        return cls.color[:]
    return None


@dataclass(frozen=True)
class ChiBResult:
    """Outcome of the exact search.

    ``value`` is set only when ``complete``; otherwise ``lower`` and ``upper``
    bracket the answer and ``coloring`` realises ``upper``.
    """

    value: int | None
    lower: int
    upper: int
    coloring: BalancedColoring
    complete: bool
    nodes: int

    def __int__(self):
        if self.value is None:
            raise ValueError("search incomplete")
        return self.value


def balanced_chromatic_number(G: SignedGraph, budget: int = DEFAULT_BUDGET) -> ChiBResult:
    """Exact balanced chromatic number by descending k-colourability search."""
    if G.n == 0:
        return ChiBResult(0, 0, 0, BalancedColoring((), 0, ()), True, 0)
    order = degeneracy_order(G)
    best = _greedy(G, order)
    upper = max(best)
    lower = 1 if is_balanced(G).balanced else 2
    lower = max(lower, _digon_clique_bound(G))
    counter = _Counter(budget)
    complete = True
    k = upper - 1
    try:
        while k >= lower:
            col = _k_coloring(G, order, k, counter)
            if col is None:
                lower = k + 1
                break
            best = col
            upper = max(col)
            k = upper - 1
    except BudgetExhausted:
        complete = False
    if complete:
        lower = upper
    coloring = BalancedColoring.build(G, best, upper)
    return ChiBResult(upper if complete else None, lower, upper, coloring, complete, counter.nodes)


def chi_b(G: SignedGraph, budget: int = DEFAULT_BUDGET) -> int:
    """Exact value or :class:`BudgetExhausted`."""
    r = balanced_chromatic_number(G, budget)
    if not r.complete:
        raise BudgetExhausted(f"chi_b in [{r.lower}, {r.upper}]", r)
    return r.value


# ---------------------------------------------------------------------------
# independent oracle
# ---------------------------------------------------------------------------


def _balanced_masks(G: SignedGraph) -> list[bool]:
    n = G.n
    edges = [(1 << u, 1 << v, s) for u, v, s in G.edges]
    out = [False] * (1 << n)
    for S in range(1 << n):
        inner = [(a, b, s) for a, b, s in edges if S & a and S & b]
        T = S
        while True:
            # T is the set of switched vertices
            if all((s > 0) == (bool(T & a) == bool(T & b)) for a, b, s in inner):
                out[S] = True
                break
            if T == 0:
                break
            T = (T - 1) & S
    return out


def _set_partitions(n):
    """Restricted growth strings of length n."""
    if n == 0:
        yield []
        return
    a = [0] * n

    def rec(i, m):
        if i == n:
            yield a
            return
        for c in range(m + 2):
            a[i] = c
            yield from rec(i + 1, max(m, c))

    a[0] = 0
    yield from rec(1, 0)


def chi_b_oracle(G: SignedGraph) -> int:
    """Balanced chromatic number by enumerating every set partition; classes are
    checked by trying all switchings."""
    if G.n > 9:
        raise GraphError("chi_b_oracle is limited to 9 vertices")
    if G.n == 0:
        return 0
    bal = _balanced_masks(G)
    best = G.n
    for rgs in _set_partitions(G.n):
        k = max(rgs) + 1
        if k >= best:
            continue
        masks = [0] * k
        for v, c in enumerate(rgs):
            masks[c] |= 1 << v
        if all(bal[m] for m in masks):
            best = k
    return best


# ---------------------------------------------------------------------------
# maximum balanced (p-colourable) subgraphs
# ---------------------------------------------------------------------------


def max_balanced_set(G: SignedGraph, budget: int = DEFAULT_BUDGET) -> frozenset:
    """A maximum balanced vertex set, the lexicographically smallest one.

    Include-before-exclude DFS visits equal-size sets in lexicographic order,
    and only strict improvements replace the incumbent.  Worst case is
    exponential in ``n``; ``budget`` caps search nodes.
    """
    S, _ = max_balanced_p_colorable_subgraph(G, 1, budget)
    return S


def max_balanced_p_colorable_subgraph(G: SignedGraph, p: int, budget: int = DEFAULT_BUDGET):
    """Largest ``S`` with ``chi_b(G[S]) <= p`` and a colouring of it.

    Returns ``(S, colors)`` where ``colors`` maps each vertex of ``S`` to a
    colour in ``1..p``.
    """
    if p < 1:
        raise ValueError("p must be positive")
    n = G.n
    cls = _Classes(G, p)
    counter = _Counter(budget)
    best = {"size": -1, "color": None}

    def go(i, used, size):
        if size + (n - i) <= best["size"]:
            return
        if i == n:
            best["size"] = size
            best["color"] = cls.color[:]
            return
        counter.tick()
        for c in range(1, min(used + 1, p) + 1):
            if cls.try_add(i, c):
                go(i + 1, max(used, c), size + 1)
                cls.pop()
                if best["size"] == n:
                    return
        go(i + 1, used, size)

    try:
        go(0, 0, 0)
    except BudgetExhausted as exc:
        exc.best = _pack(best["color"])
        raise
    return _pack(best["color"])


def _pack(color):
    if color is None:
        return frozenset(), {}
    S = frozenset(v for v, c in enumerate(color) if c)
    return S, {v: color[v] for v in sorted(S)}


# ---------------------------------------------------------------------------
# ordinary chromatic number
# ---------------------------------------------------------------------------


def chromatic_number(H: nx.Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Exact chromatic number of a plain graph (descending k-colourability)."""
    nodes = sorted(H.nodes)
    if not nodes:
        return 0
    idx = {v: i for i, v in enumerate(nodes)}
    nbrs = [sorted(idx[w] for w in H[v] if w != v) for v in nodes]
    n = len(nodes)
    order = sorted(range(n), key=lambda v: (-len(nbrs[v]), v))
    color = [0] * n
    for x in order:
        taken = {color[y] for y in nbrs[x]}
        color[x] = next(c for c in itertools.count(1) if c not in taken)
    upper = max(color)
    counter = _Counter(budget)

    def feasible(k):
        col = [0] * n

        def go(i, used):
            if i == n:
                return True
            counter.tick()
            x = order[i]
            taken = {col[y] for y in nbrs[x]}
            for c in range(1, min(used + 1, k) + 1):
                if c not in taken:
                    col[x] = c
                    if go(i + 1, max(used, c)):
                        return True
                    col[x] = 0
            return False

        return go(0, 0)

    lower = 1 if H.number_of_edges() == 0 else 2
    k = upper - 1
    while k >= lower and feasible(k):
        upper = k
        k -= 1
    return upper
