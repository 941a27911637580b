"""Generalised Mycielskians of signed graphs and the 13-vertex example."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .coloring import balanced_chromatic_number
from .core import NEG, POS, GraphError, SignedGraph, negative_girth

CONVENTIONS = tuple(
    (apex, cross) for apex in ("positive", "negative") for cross in ("inherit", "positive")
)


def generalized_mycielskian(
    G: SignedGraph, m: int, apex: str = "positive", cross: str = "inherit"
) -> SignedGraph:
    """``m``-level cone over ``G``.

    Vertex ``(v, i)`` is ``i * n + v`` and the apex is ``m * n``.  Level 0 is a
    copy of ``G``; ``(v,i)(w,i+1)`` and ``(w,i)(v,i+1)`` are joined for every
    edge ``vw`` (sign ``sigma(vw)`` with ``cross="inherit"``, ``+`` with
    ``cross="positive"``); the top level is joined to the apex with the sign
    chosen by ``apex``.
    """
    if m < 1:
        raise GraphError("need at least one level")
    if apex not in ("positive", "negative") or cross not in ("inherit", "positive"):
        raise GraphError(f"unknown convention {(apex, cross)}")
    n = G.n
    top = m * n
    apex_sign = POS if apex == "positive" else NEG
    edges = list(G.edges)
    for i in range(m - 1):
        for v, w, s in G.edges:
            t = s if cross == "inherit" else POS
            edges.append((i * n + v, (i + 1) * n + w, t))
            edges.append((i * n + w, (i + 1) * n + v, t))
    for v in range(n):
        edges.append(((m - 1) * n + v, top, apex_sign))
    return SignedGraph(top + 1, edges)


def negative_cycle_graph(length: int) -> SignedGraph:
    """A cycle ``0 1 .. length-1`` whose closing edge is the only negative one."""
    if length < 2:
        raise GraphError("a cycle needs at least two vertices")
    if length == 2:
        return SignedGraph(2, [(0, 1, POS), (0, 1, NEG)])
    edges = [(i, i + 1, POS) for i in range(length - 1)] + [(0, length - 1, NEG)]
    return SignedGraph(length, edges)


def all_negative_clique(size: int) -> SignedGraph:
    return SignedGraph(size, [(u, v, NEG) for u, v in itertools.combinations(range(size), 2)])


# Figure drawing: outer negative 4-cycle 9-10-11-12, an 8-cycle rim 0,6,3,5,2,7,4,8
# around the centre vertex 1, and the rim-to-outer edges.  Dotted edges are
# positive, solid edges negative.
FIG13_POSITIONS = (
    (0, -2), (0, 0), (0, 2), (2, 0), (-2, 0), (2, 2), (2, -2),
    (-2, 2), (-2, -2), (-4, 0), (-4, 4), (0, 4), (4, 4),
)
FIG13_EDGES = (
    (0, 1, POS), (0, 6, POS), (0, 8, POS), (0, 11, NEG),
    (1, 2, POS), (1, 3, POS), (1, 4, POS), (1, 5, POS), (1, 6, POS), (1, 7, POS), (1, 8, POS),
    (2, 5, POS), (2, 7, POS), (2, 11, POS),
    (3, 5, POS), (3, 6, POS), (3, 9, NEG),
    (4, 7, POS), (4, 8, POS), (4, 9, POS),
    (5, 9, NEG), (5, 11, POS), (5, 12, POS),
    (6, 9, NEG), (6, 10, NEG), (6, 11, NEG),
    (7, 9, POS), (7, 10, POS), (7, 11, POS),
    (8, 9, POS), (8, 11, NEG), (8, 12, NEG),
    (9, 10, POS), (9, 12, NEG),
    (10, 11, POS),
    (11, 12, POS),
)


def fig13() -> SignedGraph:
    """The 13-vertex signed graph with balanced chromatic number 3 and
    negative girth 4, transcribed edge by edge from its drawing."""
    return SignedGraph(13, FIG13_EDGES)


@dataclass(frozen=True)
class ConventionResult:
    apex: str
    cross: str
    vertices: int
    edges: int
    chi_b: int | None
    girth: int | float

    @property
    def passes(self) -> bool:
        return self.vertices == 13 and self.chi_b == 3 and self.girth == 4


def mycielskian_conventions(base: SignedGraph | None = None, m: int = 3) -> list[ConventionResult]:
    """Measure every sign convention of the ``m``-level Mycielskian of ``base``
    (default: the negative 4-cycle) against the 13-vertex targets."""
    if base is None:
        base = negative_cycle_graph(4)
    out = []
    for apex, cross in CONVENTIONS:
        M = generalized_mycielskian(base, m, apex, cross)
        out.append(
            ConventionResult(
                apex, cross, M.n, len(M.edges),
                balanced_chromatic_number(M).value, negative_girth(M).length,
            )
        )
    return out
