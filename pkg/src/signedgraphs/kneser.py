"""Kneser and Schrijver signed graphs.

Vertices are signed ``k``-subsets of ``[n]``: ``k`` non-zero integers from
``-n..n`` with pairwise distinct absolute values.  ``A`` and ``B`` are joined
by a positive edge when ``A`` and ``-B`` are disjoint and by a negative edge
when ``A`` and ``B`` are disjoint; both can hold at once, giving a digon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from .core import NEG, POS, GraphError, NegativeCycle, SignedGraph, add_isolated, induced
from .intmath import ceil_div, ceil_root_over_e

MAX_VERTICES = 10**6


@dataclass(frozen=True, order=True)
class SignedSubset:
    """A signed subset stored sorted by absolute value."""

    n: int
    elements: tuple[int, ...]

    def __post_init__(self):
        els = tuple(sorted(self.elements, key=abs))
        object.__setattr__(self, "elements", els)
        absv = [abs(x) for x in els]
        if any(x == 0 or x > self.n for x in absv) or len(set(absv)) != len(absv):
            raise GraphError(f"not a signed subset of [{self.n}]: {els}")

    @classmethod
    def of(cls, n: int, *elements: int) -> "SignedSubset":
        return cls(n, tuple(elements))

    @property
    def k(self) -> int:
        return len(self.elements)

    @property
    def masks(self) -> tuple[int, int]:
        """Bitmasks over ``[n]`` of the positive and of the negative elements."""
        pos = neg = 0
        for x in self.elements:
            if x > 0:
                pos |= 1 << (x - 1)
            else:
                neg |= 1 << (-x - 1)
        return pos, neg

    def __neg__(self):
        return SignedSubset(self.n, tuple(-x for x in self.elements))

    def __str__(self):
        return ",".join(str(x) for x in self.elements)


def parse_subset(n: int, text: str) -> SignedSubset:
    return SignedSubset(n, tuple(int(x) for x in text.split(",") if x))


def signed_subsets(n: int, k: int) -> list[SignedSubset]:
    """All ``C(n,k) * 2**k`` signed ``k``-subsets: supports in lexicographic
    order, then sign patterns with ``+`` before ``-`` from the smallest
    element outwards."""
    if not 0 <= k <= n:
        raise GraphError(f"need 0 <= k <= n, got n={n}, k={k}")
    out = []
    for support in combinations(range(1, n + 1), k):
        for signs in product((1, -1), repeat=k):
            out.append(SignedSubset(n, tuple(s * x for s, x in zip(signs, support))))
    return out


ALTERNATIONS = ("linear", "cyclic")


def is_alternating(S: SignedSubset, alternation: str = "linear") -> bool:
    """Signs alternate along increasing absolute value.

    ``"cyclic"`` also compares the last element with the first, which for odd
    ``k`` rules out every subset.
    """
    if alternation not in ALTERNATIONS:
        raise GraphError(f"alternation must be one of {ALTERNATIONS}")
    els = S.elements
    ok = all((a > 0) != (b > 0) for a, b in zip(els, els[1:]))
    if alternation == "cyclic" and len(els) > 1:
        ok = ok and (els[-1] > 0) != (els[0] > 0)
    return ok


def alternating_subsets(n: int, k: int, alternation: str = "linear") -> list[SignedSubset]:
    """The ``2 * C(n,k)`` alternating subsets, in :func:`signed_subsets` order."""
    if not 0 <= k <= n:
        raise GraphError(f"need 0 <= k <= n, got n={n}, k={k}")
    if alternation == "cyclic":
        return [S for S in alternating_subsets(n, k) if is_alternating(S, "cyclic")]
    out = []
    for support in combinations(range(1, n + 1), k):
        for first in (1, -1):
            out.append(SignedSubset(n, tuple(first * (-1) ** i * x for i, x in enumerate(support))))
        if k == 0:
            out.pop()
    return out


def kneser_edges(subsets) -> list[tuple[int, int, int]]:
    """Edges of the Kneser rule among the given subsets, sorted by
    ``(u, v, + before -)`` (vectorised)."""
    m = len(subsets)
    if m < 2:
        return []
    P = np.array([s.masks[0] for s in subsets], dtype=object)
    N = np.array([s.masks[1] for s in subsets], dtype=object)
    if max(s.n for s in subsets) <= 62:
        P = P.astype(np.int64)
        N = N.astype(np.int64)
    iu, ju = np.triu_indices(m, 1)
    same = (P[iu] & P[ju]) | (N[iu] & N[ju])
    cross = (P[iu] & N[ju]) | (N[iu] & P[ju])
    pos, neg = cross == 0, same == 0
    I = np.concatenate([iu[pos], iu[neg]])
    J = np.concatenate([ju[pos], ju[neg]])
    S = np.concatenate([np.full(int(pos.sum()), POS), np.full(int(neg.sum()), NEG)])
    order = np.lexsort((-S, J, I))
    return list(zip(I[order].tolist(), J[order].tolist(), S[order].tolist()))


def _guard(count: int, limit: int):
    if count > limit:
        raise GraphError(f"generator would build {count} vertices (limit {limit})")


def kneser_signed(n: int, k: int, max_vertices: int = MAX_VERTICES) -> SignedGraph:
    """``KS(n,k)``; vertex labels are :class:`SignedSubset` objects."""
    if not 1 <= k <= n:
        raise GraphError(f"need 1 <= k <= n, got n={n}, k={k}")
    _guard(math.comb(n, k) * 2**k, max_vertices)
    subs = signed_subsets(n, k)
    return SignedGraph._trusted(len(subs), kneser_edges(subs), subs, ordered=True)


def schrijver_signed(
    n: int, k: int, max_vertices: int = MAX_VERTICES, alternation: str = "linear"
) -> SignedGraph:
    """``SS(n,k)``: the subgraph of ``KS(n,k)`` induced by alternating subsets."""
    if not 1 <= k <= n:
        raise GraphError(f"need 1 <= k <= n, got n={n}, k={k}")
    _guard(2 * math.comb(n, k), max_vertices)
    subs = alternating_subsets(n, k, alternation)
    return SignedGraph._trusted(len(subs), kneser_edges(subs), subs, ordered=True)


def label_index(G: SignedGraph) -> dict:
    if G.labels is None:
        raise GraphError("graph carries no labels")
    return {lab: i for i, lab in enumerate(G.labels)}


# ---------------------------------------------------------------------------
# antitwins and reductions
# ---------------------------------------------------------------------------

_FLIP = {1: 2, 2: 1, 3: 3}


def _pair_states(G: SignedGraph, x: int) -> dict[int, int]:
    return {w: G.pair_state(x, w) for w in G.underlying_neighbors(x)}


def antitwin_pairs(G: SignedGraph) -> list[tuple[int, int]]:
    """Pairs ``x < y`` with the same neighbourhood outside the pair and
    opposite signs towards every common neighbour.

    An edge inside the pair is ignored; in ``KS(n,k)`` each ``A`` is joined
    to ``-A`` by a negative edge.
    """
    states = [_pair_states(G, x) for x in range(G.n)]
    groups: dict[frozenset, list[int]] = {}
    for x in range(G.n):
        groups.setdefault(frozenset(states[x]), []).append(x)
        groups.setdefault(frozenset(states[x]) | {x}, []).append(x)
    pairs = set()
    for members in groups.values():
        for x, y in combinations(members, 2):
            sx, sy = states[x], states[y]
            Z = set(sx) - {y}
            if Z != set(sy) - {x}:
                continue
            if all(sy[w] == _FLIP[sx[w]] for w in Z):
                pairs.add((min(x, y), max(x, y)))
    return sorted(pairs)


def _representative(G: SignedGraph, x: int, y: int) -> int:
    if G.labels is not None and isinstance(G.labels[x], SignedSubset) and G.labels[x].k:
        return x if G.labels[x].elements[0] > 0 else y
    sig_x = sorted(_pair_states(G, x).items())
    sig_y = sorted(_pair_states(G, y).items())
    return x if (sig_x, x) <= (sig_y, y) else y


def reduce_double_switching(G: SignedGraph) -> SignedGraph:
    """Delete one vertex from each antitwin pair.

    Kneser-labelled graphs keep the member whose smallest-absolute-value
    element is positive; other graphs keep the member with the
    lexicographically smaller neighbourhood signature.  Kept vertices retain
    their relative order and labels.
    """
    pairs = antitwin_pairs(G)
    count = [0] * G.n
    for x, y in pairs:
        count[x] += 1
        count[y] += 1
    if any(c != 1 for c in count):
        raise GraphError("not a double switching graph: every vertex needs exactly one antitwin")
    keep = sorted(_representative(G, x, y) for x, y in pairs)
    H, _ = induced(G, keep)
    return H


def reduced_kneser(n: int, k: int) -> SignedGraph:
    return reduce_double_switching(kneser_signed(n, k))


def reduced_schrijver(n: int, k: int, alternation: str = "linear") -> SignedGraph:
    return reduce_double_switching(schrijver_signed(n, k, alternation=alternation))


# ---------------------------------------------------------------------------
# negative girth of Kneser signed graphs
# ---------------------------------------------------------------------------


def kneser_girth_formula(n: int, k: int) -> int | float:
    """``1 + ceil(k / (n-k))`` for ``n > k``; infinite when ``n == k``."""
    if not 1 <= k <= n:
        raise GraphError(f"need 1 <= k <= n, got n={n}, k={k}")
    if n == k:
        return math.inf
    return 1 + ceil_div(k, n - k)


def shift_cycle_witness(n: int, k: int) -> NegativeCycle:
    """Inconsistent cycle of shortest length in ``KS(n,k)`` for ``n > k``.

    Lay out the ground set as ``1..n, -1..-n``; start from ``{1..k}`` and
    shift each set right by ``n-k`` positions (cyclically).  Consecutive sets
    are joined positively and the last set is disjoint from the first, closing
    the cycle with a negative edge.  For ``n >= 2k`` this is a digon.
    Vertices of the returned cycle are :class:`SignedSubset` labels.
    """
    if not 1 <= k < n:
        raise GraphError(f"need 1 <= k < n, got n={n}, k={k}")
    length = kneser_girth_formula(n, k)

    def element(pos):
        pos %= 2 * n
        return pos + 1 if pos < n else -(pos - n + 1)

    sets = []
    for i in range(length):
        start = i * (n - k)
        sets.append(SignedSubset(n, tuple(element(start + j) for j in range(k))))
    signs = (POS,) * (length - 1) + (NEG,)
    return NegativeCycle(tuple(sets), signs)


def locate_cycle(cycle: NegativeCycle, G: SignedGraph) -> NegativeCycle:
    """Translate a cycle over labels into vertex indices of ``G``."""
    idx = label_index(G)
    try:
        return NegativeCycle(tuple(idx[a] for a in cycle.vertices), cycle.signs)
    except KeyError as exc:
        raise GraphError(f"label {exc.args[0]} is not a vertex") from None


# ---------------------------------------------------------------------------
# lower-bound construction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LowerBoundWitness:
    graph: SignedGraph
    p: int
    k: int
    core_vertices: int
    predicted_chi_b: int
    girth_lower: int
    root_over_e: int

    @property
    def ground(self) -> int:
        return self.p + self.k - 1


def lower_bound_k(p: int, n: int) -> int:
    """Largest ``k`` with ``C(p+k-1, k) <= n``."""
    k = 0
    while math.comb(p + k, k + 1) <= n:
        k += 1
    return k


def lower_bound_witness(p: int, n_target: int, max_vertices: int = MAX_VERTICES) -> LowerBoundWitness:
    """Reduced ``SS(p+k-1, k)`` padded with isolated vertices to ``n_target``.

    Predicted ``chi_b = p`` and negative girth at least ``1 + ceil(k/(p-1))``,
    which in turn is at least ``ceil(n_target ** (1/(p-1)) / e)``.
    """
    if p < 2 or n_target < p:
        raise GraphError("need p >= 2 and n_target >= p")
    k = lower_bound_k(p, n_target)
    core_n = math.comb(p + k - 1, k)
    _guard(2 * core_n, max_vertices)
    core = reduced_schrijver(p + k - 1, k)
    assert core.n == core_n
    G = add_isolated(core, n_target - core_n)
    return LowerBoundWitness(
        graph=G,
        p=p,
        k=k,
        core_vertices=core_n,
        predicted_chi_b=p,
        girth_lower=1 + ceil_div(k, p - 1),
        root_over_e=ceil_root_over_e(n_target, p - 1),
    )
