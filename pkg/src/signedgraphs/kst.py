"""Obstructions and peel colouring.

An ``(alpha, beta)``-obstruction is a vertex set of size at least ``alpha``
whose radius, measured with distances of the whole graph, is at most
``beta``.  With ``r = ceil(n^(1/q))``, if every subgraph of radius at most
``q*r`` is balanced ``p``-colourable then peeling ``q`` maximum balanced
``p``-colourable subgraphs colours the whole graph with ``p*q`` colours.
When peeling fails, the layered recursion below produces a vertex set that
breaks that hypothesis.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import (
    DEFAULT_BUDGET,
    BalancedColoring,
    BudgetExhausted,
    balanced_chromatic_number,
    max_balanced_p_colorable_subgraph,
)
from .core import SignedGraph, ball, bfs_distances, induced, is_balanced, radius_in
from .intmath import q_root


@dataclass(frozen=True)
class RootScale:
    """``r = ceil(n^(1/q))`` with its powers, all exact integers."""

    n: int
    q: int
    r: int
    powers: tuple[int, ...]

    @classmethod
    def of(cls, n: int, q: int) -> "RootScale":
        r = q_root(max(n, 1), q)
        return cls(n, q, r, tuple(r**i for i in range(q + 1)))


@dataclass(frozen=True)
class Obstruction:
    vertices: tuple[int, ...]
    alpha: int
    beta: int
    size: int
    radius: int | float
    level: int

    @property
    def valid(self) -> bool:
        return self.size >= self.alpha and self.radius <= self.beta

    def validate(self, G: SignedGraph) -> bool:
        return (
            len(self.vertices) == self.size
            and radius_in(G, self.vertices) == self.radius
            and self.valid
        )


@dataclass(frozen=True)
class ColoringEvidence:
    """A colouring of ``W`` with at most ``level * p`` colours (``0`` = not in ``W``)."""

    colors: dict
    colors_used: int
    level: int


@dataclass(frozen=True)
class LayerDiagnostic:
    """A layer ``P_j`` (``1 <= j < r``) smaller than ``r^(level-1)``.

    ``violator`` is ``P_0 u ... u P_{j-1}``; the maximality of ``H`` forces it
    to need more than ``p`` colours, which ``confirmed`` records.
    """

    level: int
    j: int
    size: int
    required: int
    violator: tuple[int, ...]
    confirmed: bool


@dataclass(frozen=True)
class HypothesisViolation:
    """A vertex set needing more than ``p`` colours with radius at most ``beta``."""

    vertices: tuple[int, ...]
    radius: int | float
    beta: int
    diagnostic: LayerDiagnostic


@dataclass
class ObstructionSearch:
    result: Obstruction | ColoringEvidence | HypothesisViolation
    scale: RootScale
    diagnostics: list[LayerDiagnostic] = field(default_factory=list)


def _exceeds(G: SignedGraph, S, p: int, budget: int) -> bool:
    """``chi_b(G[S]) > p``, exactly."""
    H, _ = induced(G, S)
    if p == 1:
        return not is_balanced(H).balanced
    r = balanced_chromatic_number(H, budget)
    if r.lower > p:
        return True
    if r.upper <= p:
        return False
    raise BudgetExhausted(f"chi_b in [{r.lower}, {r.upper}] undecided against {p}", r)


def _max_colorable_in(G: SignedGraph, W, p: int, budget: int):
    H, verts = induced(G, W)
    S, col = max_balanced_p_colorable_subgraph(H, p, budget)
    return frozenset(verts[i] for i in S), {verts[i]: c for i, c in col.items()}


def find_obstruction(
    G: SignedGraph, W, ell: int, p: int, q: int, budget: int = DEFAULT_BUDGET
) -> ObstructionSearch:
    """Run the layered recursion on ``W`` at level ``ell``.

    Returns an ``(r^ell, ell*r)``-obstruction inside ``W``, or a colouring of
    ``W`` with at most ``ell * p`` colours, or (when a layer is too small) a
    set breaking the radius hypothesis.
    """
    if not 0 <= ell <= q:
        raise ValueError("need 0 <= ell <= q")
    if p < 1:
        raise ValueError("p must be positive")
    scale = RootScale.of(G.n, q)
    diags: list[LayerDiagnostic] = []
    res = _recurse(G, frozenset(W), ell, p, scale, budget, diags)
    return ObstructionSearch(res, scale, diags)


def _recurse(G, W, ell, p, scale, budget, diags):
    r = scale.r
    if ell == 0:
        if not W:
            return ColoringEvidence({}, 0, 0)
        v = min(W)
        return Obstruction((v,), 1, 0, 1, 0, 0)
    H, hcol = _max_colorable_in(G, W, p, budget)
    inner = _recurse(G, W - H, ell - 1, p, scale, budget, diags)
    if isinstance(inner, ColoringEvidence):
        colors = dict(hcol)
        colors.update({v: c + p for v, c in inner.colors.items()})
        return ColoringEvidence(colors, len(set(colors.values())), ell)
    if isinstance(inner, HypothesisViolation):
        return inner
    P0 = frozenset(inner.vertices)
    dist = bfs_distances(G, P0)
    layers = [set(P0)] + [set() for _ in range(r)]
    for x in H:
        d = dist.get(x)
        if d is not None and 1 <= d <= r:
            layers[d].add(x)
    need = scale.powers[ell - 1]
    for j in range(1, r):
        if len(layers[j]) < need:
            H0 = tuple(sorted(set().union(*layers[:j])))
            confirmed = _exceeds(G, H0, p, budget)
            diag = LayerDiagnostic(ell, j, len(layers[j]), need, H0, confirmed)
            diags.append(diag)
            if confirmed:
                return HypothesisViolation(H0, radius_in(G, H0), scale.q * r, diag)
    Q = tuple(sorted(set().union(*layers)))
    return Obstruction(Q, scale.powers[ell], ell * r, len(Q), radius_in(G, Q), ell)


# ---------------------------------------------------------------------------
# peel colouring
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BallCheck:
    ok: bool
    center: int | None = None
    radius: int | None = None
    vertices: tuple[int, ...] = ()

    def __bool__(self):
        return self.ok


def ball_hypothesis_check(G: SignedGraph, p: int, q: int, budget: int = DEFAULT_BUDGET) -> BallCheck:
    """Every ball of radius ``q * ceil(n^(1/q))`` is balanced ``p``-colourable.

    Any set of radius at most ``q*r`` around ``x`` lies in the ball of that
    radius around ``x``, so the balls decide the hypothesis.  Returns the
    first violating ball (by centre) otherwise.
    """
    R = q * RootScale.of(G.n, q).r
    seen = set()
    for v in range(G.n):
        B = ball(G, v, R)
        if B in seen:
            continue
        seen.add(B)
        if _exceeds(G, B, p, budget):
            return BallCheck(False, v, R, tuple(sorted(B)))
    return BallCheck(True)


@dataclass(frozen=True)
class FailureWitness:
    """Vertices inducing a subgraph with ``chi_b > p`` and ambient radius at most ``beta``."""

    vertices: tuple[int, ...]
    radius: int | float
    beta: int
    p: int
    source: str

    def validate(self, G: SignedGraph, budget: int = DEFAULT_BUDGET) -> bool:
        return (
            radius_in(G, self.vertices) == self.radius <= self.beta
            and _exceeds(G, self.vertices, self.p, budget)
        )


@dataclass
class PeelResult:
    coloring: BalancedColoring | None
    witness: FailureWitness | None
    search: ObstructionSearch

    @property
    def success(self) -> bool:
        return self.coloring is not None


def peel_color(G: SignedGraph, p: int, q: int, budget: int = DEFAULT_BUDGET) -> PeelResult:
    """Colour ``G`` with at most ``p*q`` colours by ``q`` rounds of peeling.

    Round ``i`` removes a maximum balanced ``p``-colourable subgraph of what
    is left and gives it colours ``(i-1)p+1 .. ip``.  If vertices remain, a
    :class:`FailureWitness` is returned instead: among the sets produced by
    the recursion and the balls around each vertex, the verified violator of
    smallest radius (then size, then vertex list).
    """
    if p < 1 or q < 1:
        raise ValueError("need p, q >= 1")
    search = find_obstruction(G, range(G.n), q, p, q, budget)
    res = search.result
    if isinstance(res, ColoringEvidence):
        colors = [res.colors[v] for v in range(G.n)]
        return PeelResult(BalancedColoring.build(G, colors, p * q), None, search)
    beta = q * search.scale.r
    candidates = []
    if isinstance(res, HypothesisViolation):
        candidates.append((res.vertices, "layer"))
    else:
        candidates.append((res.vertices, "obstruction"))
    candidates += [(d.violator, "layer") for d in search.diagnostics if d.confirmed]
    for t in range(beta + 1):
        found = False
        for v in range(G.n):
            B = tuple(sorted(ball(G, v, t)))
            if _exceeds(G, B, p, budget):
                candidates.append((B, "ball"))
                found = True
        if found:
            break
    best = None
    for verts, src in candidates:
        rad = radius_in(G, verts)
        if rad > beta or not _exceeds(G, verts, p, budget):
            continue
        key = (rad, len(verts), verts)
        if best is None or key < best[0]:
            best = (key, FailureWitness(verts, rad, beta, p, src))
    return PeelResult(None, best[1] if best else None, search)
