"""Verification suites shared by the command line and the test-suite.

Each suite returns a list of :class:`Check` records rather than raising, so a
report can show every assertion with its outcome.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from .canon import canonical_form
from .cert4 import layer_certificate, thm41_check
from .coloring import balanced_chromatic_number, chi_b_oracle, check_coloring
from .core import (
    NEG,
    POS,
    SignedGraph,
    add_isolated,
    disjoint_union,
    is_balanced,
    is_balanced_by_switching,
    negative_girth,
    negative_girth_by_cycles,
    relabel,
    switch,
)
from .intmath import ceil_root_over_e, q_root
from .kneser import (
    kneser_girth_formula,
    kneser_signed,
    locate_cycle,
    lower_bound_witness,
    reduced_schrijver,
    schrijver_signed,
    shift_cycle_witness,
)
from .kst import ball_hypothesis_check, peel_color
from .mycielski import all_negative_clique, fig13, mycielskian_conventions, negative_cycle_graph

DEFAULT_SEED = 20240229


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""
    info: bool = False  # reported but never counted as a failure

    @property
    def status(self) -> str:
        if self.info:
            return "INFO"
        return "PASS" if self.passed else "FAIL"

    def line(self) -> str:
        return f"{self.status} {self.name}" + (f" ({self.detail})" if self.detail else "")


def all_passed(checks) -> bool:
    return all(c.passed or c.info for c in checks)


# ---------------------------------------------------------------------------
# graph sources
# ---------------------------------------------------------------------------


def random_signed_graph(rng: random.Random, n: int, density: float = 0.5, digons: float = 0.1) -> SignedGraph:
    """Each pair is empty, ``+``, ``-`` or a digon; ``density`` of pairs are joined."""
    edges = []
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() >= density:
            continue
        if rng.random() < digons:
            edges += [(u, v, POS), (u, v, NEG)]
        else:
            edges.append((u, v, rng.choice((POS, NEG))))
    return SignedGraph(n, edges)


def all_signed_graphs(n: int):
    """Every signed graph on ``n`` labelled vertices (four states per pair)."""
    pairs = list(itertools.combinations(range(n), 2))
    for states in itertools.product(range(4), repeat=len(pairs)):
        edges = []
        for (u, v), st in zip(pairs, states):
            if st & 1:
                edges.append((u, v, POS))
            if st & 2:
                edges.append((u, v, NEG))
        yield SignedGraph(n, edges)


def three_chromatic_corpus() -> list[tuple[str, SignedGraph]]:
    """Graphs with balanced chromatic number at least 3."""
    F = fig13()
    return [
        ("negclique5", all_negative_clique(5)),
        ("negclique6", all_negative_clique(6)),
        ("negclique7", all_negative_clique(7)),
        ("negclique9", all_negative_clique(9)),
        ("fig13", F),
        ("fig13-switched", switch(F, {0, 3, 9, 12})),
        ("fig13-relabelled", relabel(F, [(5 * v + 3) % 13 for v in range(13)])),
        ("reduced-schrijver-6-4", reduced_schrijver(6, 4)),
        ("reduced-schrijver-5-2", reduced_schrijver(5, 2)),
        ("reduced-schrijver-5-3", reduced_schrijver(5, 3)),
        ("reduced-schrijver-6-2", reduced_schrijver(6, 2)),
        ("reduced-schrijver-7-5", reduced_schrijver(7, 5)),
        ("negclique5+isolated", add_isolated(all_negative_clique(5), 3)),
        ("negclique5+fig13", disjoint_union(all_negative_clique(5), F)),
    ]


def peel_corpus() -> list[tuple[str, SignedGraph, int, int]]:
    return [
        ("negcycle25", negative_cycle_graph(25), 1, 2),
        ("negclique9", all_negative_clique(9), 1, 2),
        ("negclique5", all_negative_clique(5), 2, 2),
        ("fig13", fig13(), 1, 2),
        ("fig13", fig13(), 2, 2),
        ("reduced-schrijver-6-4", reduced_schrijver(6, 4), 1, 3),
        ("negcycle9", negative_cycle_graph(9), 1, 1),
        ("balanced", switch(SignedGraph(6, [(i, (i + 1) % 6, POS) for i in range(6)]), {1, 4}), 1, 1),
    ]


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


def lemma21(nmax: int = 7, workers: int = 1) -> list[Check]:
    out = []
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            g = negative_girth(kneser_signed(n, k), workers).length
            f = kneser_girth_formula(n, k)
            out.append(Check(f"g(KS({n},{k})) = formula", g == f, f"{g} vs {f}"))
            gs = negative_girth(schrijver_signed(n, k), workers).length
            out.append(Check(f"g(SS({n},{k})) >= g(KS({n},{k}))", gs >= g, f"{gs} vs {g}"))
    return out


def shift_witnesses(nmax: int = 9) -> list[Check]:
    out = []
    for n in range(2, nmax + 1):
        for k in range(n // 2 + 1, n):
            if not k < n < 2 * k:
                continue
            W = shift_cycle_witness(n, k)
            G = kneser_signed(n, k)
            ok = locate_cycle(W, G).validate(G) and W.length == kneser_girth_formula(n, k)
            out.append(Check(f"shift witness ({n},{k})", ok, f"length {W.length}"))
    return out


def remark_values() -> list[Check]:
    gk = negative_girth(kneser_signed(6, 4)).length
    out = [Check("g(KS(6,4)) = 3", gk == 3, str(gk))]
    for alt in ("linear", "cyclic"):
        gs = negative_girth(schrijver_signed(6, 4, alternation=alt)).length
        out.append(Check(f"g(SS(6,4)) = 4 [{alt} alternation]", gs == 4, str(gs)))
    return out


def schrijver_chi(limit: int = 15) -> list[Check]:
    out = []
    for n in range(1, 16):
        for k in range(1, n + 1):
            if math.comb(n, k) > limit:
                continue
            r = balanced_chromatic_number(reduced_schrijver(n, k))
            out.append(Check(f"chi_b(reduced SS({n},{k})) = {n - k + 1}", r.value == n - k + 1, str(r.value)))
    return out


def lower_bounds(ps=(2, 3), nmax: int = 40, per_p: int = 20, exact_limit: int = 15) -> list[Check]:
    out = []
    for p in ps:
        sizes = list(range(p, nmax + 1))[-per_p:]
        for n in sizes:
            w = lower_bound_witness(p, n)
            g = negative_girth(w.graph).length
            low = ceil_root_over_e(n, p - 1)
            ok = g >= low and g >= w.girth_lower and w.graph.n == n
            detail = f"g={g} >= {low}"
            if w.core_vertices <= exact_limit:
                chi = balanced_chromatic_number(w.graph).value
                ok = ok and chi == p
                detail += f", chi_b={chi}"
            out.append(Check(f"lower-bound witness p={p} n={n}", ok, detail))
    return out


def upper_bound_sweep() -> list[Check]:
    """Negative girth at most ``2(p-1) ceil(n^(1/(p-1))) + 1`` whenever ``chi_b >= p``."""
    out = []
    for name, G in three_chromatic_corpus():
        chi = balanced_chromatic_number(G).value
        g = negative_girth(G).length
        for p in range(2, chi + 1):
            hi = 2 * (p - 1) * q_root(G.n, p - 1) + 1
            out.append(Check(f"upper bound {name} p={p}", g <= hi, f"{g} <= {hi}"))
    return out


def thm31(corpus=None) -> list[Check]:
    out = []
    for name, G, p, q in corpus or peel_corpus():
        hyp = ball_hypothesis_check(G, p, q)
        res = peel_color(G, p, q)
        if res.success:
            ok = res.coloring.validate(G) and res.coloring.used <= p * q
            out.append(Check(f"peel {name} p={p} q={q}", ok, f"{res.coloring.used} colours"))
        else:
            w = res.witness
            ok = w is not None and w.validate(G) and not hyp.ok
            detail = f"witness size {len(w.vertices)} radius {w.radius}" if w else "no witness"
            out.append(Check(f"peel {name} p={p} q={q} fails with witness", ok, detail))
        if hyp.ok:
            out.append(Check(f"hypothesis {name} p={p} q={q} implies colouring", res.success))
    return out


def thm41(corpus=None) -> list[Check]:
    out = []
    for name, G in corpus or three_chromatic_corpus():
        cert = layer_certificate(G)
        out.append(Check(f"certificate {name}", cert.valid, ", ".join(cert.failures()) or f"girth {cert.girth}"))
        out.append(Check(f"short negative cycle {name}", thm41_check(G)))
    return out


def fig13_gate() -> list[Check]:
    F = fig13()
    r = balanced_chromatic_number(F)
    g = negative_girth(F).length
    out = [
        Check("fig13 has 13 vertices", F.n == 13),
        Check("fig13 chi_b = 3 (complete search)", r.complete and r.value == 3, str(r.value)),
        Check("fig13 negative girth 4", g == 4, str(g)),
    ]
    for c in mycielskian_conventions():
        out.append(
            Check(
                f"layered cone apex={c.apex} cross={c.cross} matches fig13 targets",
                c.passes,
                f"chi_b={c.chi_b}, girth={c.girth}, edges={c.edges}",
                info=True,
            )
        )
    return out


def oracles(n_exhaustive: int = 4, cases: int = 500, nmax: int = 12, chi_nmax: int = 8, seed: int = DEFAULT_SEED) -> list[Check]:
    out = []
    bad = {"balance": 0, "girth": 0, "chi_b": 0}
    total = 0
    for n in range(n_exhaustive + 1):
        for G in all_signed_graphs(n):
            total += 1
            _compare(G, bad, chi=True)
    for name, b in bad.items():
        out.append(Check(f"exhaustive n<={n_exhaustive}: {name} agrees with oracle", b == 0, f"{b} of {total}"))
    rng = random.Random(seed)
    bad = {"balance": 0, "girth": 0, "chi_b": 0}
    for _ in range(cases):
        n = rng.randint(1, nmax)
        G = random_signed_graph(rng, n, density=rng.uniform(0.1, 0.5), digons=0.05)
        _compare(G, bad, chi=n <= chi_nmax)
    for name, b in bad.items():
        out.append(Check(f"{cases} random graphs: {name} agrees with oracle", b == 0, f"{b} disagreements"))
    return out


def _compare(G, bad, chi):
    br = is_balanced(G)
    if br.balanced != is_balanced_by_switching(G) or not br.validate(G):
        bad["balance"] += 1
    gr = negative_girth(G)
    if gr.length != negative_girth_by_cycles(G) or (gr.finite and not gr.witness.validate(G)):
        bad["girth"] += 1
    if chi:
        r = balanced_chromatic_number(G)
        if r.value != chi_b_oracle(G) or not check_coloring(G, r.coloring.colors, r.value):
            bad["chi_b"] += 1


def invariance(cases: int = 200, nmax: int = 9, seed: int = DEFAULT_SEED) -> list[Check]:
    rng = random.Random(seed + 1)
    bad = {"girth": 0, "chi_b": 0, "balance": 0, "canonical_form": 0}
    for _ in range(cases):
        n = rng.randint(1, nmax)
        G = random_signed_graph(rng, n, density=rng.uniform(0.2, 0.7), digons=0.1)
        S = {v for v in range(n) if rng.random() < 0.5}
        perm = list(range(n))
        rng.shuffle(perm)
        H = relabel(switch(G, S), perm)
        if negative_girth(G).length != negative_girth(H).length:
            bad["girth"] += 1
        if balanced_chromatic_number(G).value != balanced_chromatic_number(H).value:
            bad["chi_b"] += 1
        if is_balanced(G).balanced != is_balanced(H).balanced:
            bad["balance"] += 1
        if canonical_form(G) != canonical_form(H):
            bad["canonical_form"] += 1
    return [Check(f"{cases} cases: {k} invariant", v == 0, f"{v} violations") for k, v in bad.items()]


SUITES = {
    "lemma21": lemma21,
    "witnesses": shift_witnesses,
    "remark": remark_values,
    "schrijver": schrijver_chi,
    "bounds": lambda: lower_bounds() + upper_bound_sweep(),
    "thm31": thm31,
    "thm41": thm41,
    "fig13": fig13_gate,
    "oracles": oracles,
    "invariance": invariance,
}
