"""Checkable certificate that a graph needing three balanced colours has a
negative cycle of length below ``2 sqrt(n-1) + 1``.

Let ``B`` be a maximum balanced set and ``C`` a shortest negative cycle
avoiding ``B``.  Around a vertex ``v`` of ``C`` the distance layers ``V_i``
meet ``B`` in at least ``2i - 1`` vertices for ``1 <= i <= (g-2)//2``, where
``g`` is the negative girth; summing gives ``|B| >= ((g-2)//2)^2`` and hence
``n >= g + ((g-2)//2)^2``.  Every step is recorded as an inequality.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import DEFAULT_BUDGET, BudgetExhausted, balanced_chromatic_number, is_balanced_set, max_balanced_set
from .core import GraphError, NegativeCycle, SignedGraph, bfs_distances, induced, negative_girth

READINGS = ("at_least", "exact")


class PreconditionError(GraphError):
    pass


def three_chromatic(G: SignedGraph, reading: str = "at_least", budget: int = DEFAULT_BUDGET) -> bool:
    """``chi_b(G) >= 3`` (``"at_least"``) or ``chi_b(G) == 3`` (``"exact"``)."""
    if reading not in READINGS:
        raise ValueError(f"reading must be one of {READINGS}")
    r = balanced_chromatic_number(G, budget)
    if reading == "at_least":
        if r.lower >= 3:
            return True
        if r.upper < 3:
            return False
    elif r.complete:
        return r.value == 3
    elif r.lower > 3 or r.upper < 3:
        return False
    raise BudgetExhausted(f"chi_b in [{r.lower}, {r.upper}]", r)


@dataclass(frozen=True)
class Inequality:
    name: str
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs

    @property
    def margin(self) -> int:
        return self.lhs - self.rhs


@dataclass(frozen=True)
class LayerRecord:
    i: int
    U: tuple[int, ...]
    U_balanced: bool
    U_minus_B: int
    B_minus_U: int
    V_cap_B: int


@dataclass
class Certificate41:
    n: int
    girth: int
    B: tuple[int, ...]
    C: NegativeCycle
    C_induced: bool
    v: int
    layers: list[tuple[int, ...]]
    layer_balanced: list[bool]
    records: list[LayerRecord]
    inequalities: list[Inequality] = field(default_factory=list)

    @property
    def half(self) -> int:
        return (self.girth - 2) // 2

    @property
    def valid(self) -> bool:
        return (
            self.C_induced
            and all(self.layer_balanced)
            and all(r.U_balanced for r in self.records)
            and all(ineq.holds for ineq in self.inequalities)
        )

    def failures(self) -> list[str]:
        out = [q.name for q in self.inequalities if not q.holds]
        if not self.C_induced:
            out.append("C induced")
        out += [f"V_{i} balanced" for i, ok in enumerate(self.layer_balanced) if not ok]
        out += [f"U_{r.i} balanced" for r in self.records if not r.U_balanced]
        return out

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "girth": self.girth,
            "B": list(self.B),
            "C": list(self.C.vertices),
            "C_signs": list(self.C.signs),
            "v": self.v,
            "layers": [len(L) for L in self.layers],
            "records": [
                {"i": r.i, "U_minus_B": r.U_minus_B, "B_minus_U": r.B_minus_U, "V_cap_B": r.V_cap_B}
                for r in self.records
            ],
            "inequalities": [
                {"name": q.name, "lhs": q.lhs, "rhs": q.rhs, "margin": q.margin, "holds": q.holds}
                for q in self.inequalities
            ],
            "valid": self.valid,
        }


def layer_certificate(
    G: SignedGraph, reading: str = "at_least", budget: int = DEFAULT_BUDGET
) -> Certificate41:
    """Build and check the layer certificate; raises
    :class:`PreconditionError` unless ``G`` needs three balanced colours."""
    if not three_chromatic(G, reading, budget):
        raise PreconditionError("graph is not balanced 3-chromatic")
    n = G.n
    g = negative_girth(G).length
    B = max_balanced_set(G, budget)
    rest = [x for x in range(n) if x not in B]
    H, verts = induced(G, rest)
    gc = negative_girth(H)
    C = NegativeCycle(tuple(verts[x] for x in gc.witness.vertices), gc.witness.signs)
    CH, _ = induced(G, C.vertices)
    C_induced = len(CH.edges) == C.length
    v = min(C.vertices)
    dist = bfs_distances(G, [v])
    depth = max(dist.values())
    layers = [tuple(sorted(x for x, d in dist.items() if d == i)) for i in range(depth + 1)]
    half = (g - 2) // 2
    layer_balanced = [is_balanced_set(G, layers[i]).balanced for i in range(min(half, depth) + 1)]

    ineqs = [
        Inequality("|C| >= girth", C.length, g),
    ]
    records = []
    for i in range(1, half + 1):
        U = set()
        for j in range(min(i, depth + 1)):
            U.update(layers[j])
        for j in range(i + 1, depth + 1):
            U.update(x for x in layers[j] if x in B)
        U = tuple(sorted(U))
        Vi = layers[i] if i <= depth else ()
        rec = LayerRecord(
            i,
            U,
            is_balanced_set(G, U).balanced,
            sum(1 for x in U if x not in B),
            sum(1 for x in B if x not in U),
            sum(1 for x in Vi if x in B),
        )
        records.append(rec)
        ineqs += [
            Inequality(f"|U_{i} - B| >= 2*{i}-1", rec.U_minus_B, 2 * i - 1),
            Inequality(f"|B - U_{i}| >= |U_{i} - B|", rec.B_minus_U, rec.U_minus_B),
            Inequality(f"|V_{i} & B| >= 2*{i}-1", rec.V_cap_B, 2 * i - 1),
        ]
    ineqs += [
        Inequality("|B| >= sum |V_i & B|", len(B), sum(r.V_cap_B for r in records)),
        Inequality("|B| >= ((g-2)//2)^2", len(B), half * half),
        Inequality("n >= |C| + |B|", n, C.length + len(B)),
        Inequality("n >= g + ((g-2)//2)^2", n, g + half * half),
    ]
    return Certificate41(n, g, tuple(sorted(B)), C, C_induced, v, layers, layer_balanced, records, ineqs)


def thm41_check(G: SignedGraph, reading: str = "at_least", budget: int = DEFAULT_BUDGET) -> bool:
    """``g_-(G) < 2 sqrt(n-1) + 1``, tested as ``(g-1)^2 < 4(n-1)``."""
    if not three_chromatic(G, reading, budget):
        raise PreconditionError("graph is not balanced 3-chromatic")
    g = negative_girth(G).length
    return (g - 1) ** 2 < 4 * (G.n - 1)
