"""Exhaustive search for ``n_s(lam, p)`` and the girth-versus-bound harness.

``n_s(lam, p)`` is the fewest vertices of a signed graph with balanced
chromatic number at least ``p`` and negative girth at least ``lam``.  Having
negative girth at least ``lam`` is inherited by induced subgraphs, so every
such graph on ``n`` vertices arises by adding one vertex to such a graph on
``n - 1`` vertices.  The search grows one level of switching-isomorphism
classes at a time, deduplicating by canonical form.
"""

from __future__ import annotations

import csv
import io
import itertools
import math
from dataclasses import dataclass, field
from pathlib import Path

from .canon import canonical_form, graph_from_form
from .coloring import balanced_chromatic_number
from .core import NEG, POS, SignedGraph, _shortest_through, negative_girth
from .intmath import ceil_root_over_e, q_root
from .kneser import lower_bound_witness
from .mycielski import all_negative_clique, generalized_mycielskian, negative_cycle_graph

CSV_HEADER = ("n", "girth", "chi_b", "bound_low", "bound_high", "status")


@dataclass
class LevelResult:
    n: int
    classes: int
    witnesses: list[bytes]
    status: str  # "none", "witness" or "budget"


@dataclass
class SearchReport:
    lam: int
    p: int
    n_max: int
    levels: list[LevelResult] = field(default_factory=list)
    nodes: int = 0
    exhaustive: bool = True
    resumed_from: int | None = None

    @property
    def n_s(self) -> int | None:
        for lv in self.levels:
            if lv.witnesses:
                return lv.n
        return None

    @property
    def lower_bound(self) -> int:
        """Smallest size not ruled out by the levels checked so far.

        A resumed run starts from its checkpoint level; the run that wrote
        the checkpoint had already cleared every smaller size.
        """
        bound = self.resumed_from or 1
        for lv in self.levels:
            if lv.status != "none":
                break
            bound = lv.n + 1
        return bound

    def witness_graphs(self) -> list[SignedGraph]:
        return [graph_from_form(f) for lv in self.levels for f in lv.witnesses]

    def validate(self) -> bool:
        """Recompute girth and ``chi_b`` of every witness from scratch."""
        for G in self.witness_graphs():
            if negative_girth(G).length < self.lam:
                return False
            if balanced_chromatic_number(G).lower < self.p:
                return False
        return True

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for lv in self.levels:
            girth = chi = ""
            if lv.witnesses:
                G = graph_from_form(lv.witnesses[0])
                girth = negative_girth(G).length
                chi = balanced_chromatic_number(G).value
            low, high = theorem_bounds(lv.n, self.p)
            w.writerow((lv.n, girth, chi, low, high, f"{lv.status}:{lv.classes}"))
        return buf.getvalue()


def theorem_bounds(n: int, p: int) -> tuple[int | str, int | str]:
    """``(ceil(n^(1/(p-1))/e), 2(p-1) * ceil(n^(1/(p-1))))``; blank for ``p < 2``."""
    if p < 2 or n < 1:
        return "", ""
    return ceil_root_over_e(n, p - 1), 2 * (p - 1) * q_root(n, p - 1)


def _extensions(H: SignedGraph, lam: int):
    alphabet = (0, 1, 2, 3) if lam <= 2 else (0, 1, 2)
    v = H.n
    base = list(H.edges)
    for states in itertools.product(alphabet, repeat=H.n):
        edges = list(base)
        for u, st in enumerate(states):
            if st & 1:
                edges.append((u, v, POS))
            if st & 2:
                edges.append((u, v, NEG))
        G = SignedGraph(H.n + 1, edges)
        # only cycles through the new vertex can be new
        if _shortest_through(G, v, lam) is None:
            yield G


def write_checkpoint(path, lam: int, p: int, n: int, forms) -> None:
    lines = [f"# lam={lam} p={p} n={n}"] + [f.decode("ascii") for f in sorted(forms)]
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii")


def read_checkpoint(path):
    lines = Path(path).read_text(encoding="ascii").splitlines()
    head = dict(kv.split("=") for kv in lines[0].lstrip("# ").split())
    forms = [ln.encode("ascii") for ln in lines[1:] if ln.strip()]
    return int(head["lam"]), int(head["p"]), int(head["n"]), forms


def n_s_search(
    lam: int,
    p: int,
    n_max: int,
    budget: int = 10**7,
    checkpoint=None,
    chi_budget: int = 10**6,
) -> SearchReport:
    """Enumerate switching classes level by level up to ``n_max`` vertices.

    With ``checkpoint`` set, the frontier is written after each level and an
    existing checkpoint for the same ``(lam, p)`` is resumed.
    """
    if lam < 2 or p < 2:
        raise ValueError("need lam >= 2 and p >= 2")
    report = SearchReport(lam, p, n_max)
    level = [canonical_form(SignedGraph(1))]
    n0 = 1
    if checkpoint is not None and Path(checkpoint).exists():
        clam, cp, cn, forms = read_checkpoint(checkpoint)
        if (clam, cp) == (lam, p) and cn <= n_max:
            level, n0 = forms, cn
            report.resumed_from = cn
    for n in range(n0, n_max + 1):
        if n > n0:
            seen = set()
            try:
                for f in level:
                    for G in _extensions(graph_from_form(f), lam):
                        report.nodes += 1
                        if report.nodes > budget:
                            raise _Stop
                        seen.add(canonical_form(G))
            except _Stop:
                report.exhaustive = False
                report.levels.append(LevelResult(n, len(seen), [], "budget"))
                return report
            level = sorted(seen)
            if checkpoint is not None:
                write_checkpoint(checkpoint, lam, p, n, level)
        witnesses = []
        status = "none"
        for f in level:
            r = balanced_chromatic_number(graph_from_form(f), chi_budget)
            if r.lower >= p:
                witnesses.append(f)
            elif r.upper >= p:
                status = "budget"
                report.exhaustive = False
        if witnesses:
            status = "witness"
        report.levels.append(LevelResult(n, len(level), witnesses, status))
        if witnesses:
            break
    return report


class _Stop(Exception):
    pass


# ---------------------------------------------------------------------------
# girth versus the two bounds
# ---------------------------------------------------------------------------

FAMILIES = ("lower_bound", "negclique", "mycielski")


def lambda_s_harness(family: str, p: int, sizes=None, exact_limit: int = 15) -> list[dict]:
    """Measured negative girth against ``ceil(n^(1/(p-1))/e)`` and
    ``2(p-1) ceil(n^(1/(p-1)))`` for a family of graphs.

    ``chi_b`` is computed exactly for graphs (or lower-bound cores) of at most
    ``exact_limit`` vertices and otherwise taken from the construction; the
    status says which.
    """
    if p < 2:
        raise ValueError("need p >= 2")
    rows = []
    for n, G, chi, exact, low_rule in _family(family, p, sizes, exact_limit):
        g = negative_girth(G).length
        low, high = theorem_bounds(n, p)
        if chi < p:
            status = "chi_b<p"
        else:
            problems = []
            if low_rule and g < low:
                problems.append("below-low")
            if g > high + 1:
                problems.append("above-high")
            status = "+".join(problems) if problems else "ok"
        if not exact:
            status += "(chi_b predicted)"
        rows.append(dict(n=n, girth=g, chi_b=chi, bound_low=low, bound_high=high, status=status))
    return rows


def _family(family, p, sizes, exact_limit):
    if family == "lower_bound":
        for n in sizes or range(p, 41):
            w = lower_bound_witness(p, n)
            if w.core_vertices <= exact_limit:
                yield n, w.graph, balanced_chromatic_number(w.graph).value, True, True
            else:
                yield n, w.graph, w.predicted_chi_b, False, True
    elif family == "negclique":
        for size in sizes or range(2 * p - 1, 2 * p + 6):
            G = all_negative_clique(size)
            yield size, G, math.ceil(size / 2), False, False
    elif family == "mycielski":
        for m in sizes or range(1, 5):
            G = generalized_mycielskian(negative_cycle_graph(4), m)
            if G.n <= exact_limit:
                yield G.n, G, balanced_chromatic_number(G).value, True, False
    else:
        raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_HEADER, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: ("inf" if r[k] == math.inf else r[k]) for k in CSV_HEADER})
    return buf.getvalue()
