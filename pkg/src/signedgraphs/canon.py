"""Canonical forms of signed graphs up to relabelling and switching.

Two signed graphs are switching isomorphic exactly when their double covers
are isomorphic by a map that sends fibres to fibres.  We canonically label
the cover, with the fibre pairs marked as a second edge colour, by
individualisation-refinement with automorphism pruning.  Each leaf ordering
of the cover induces a vertex order (fibres by first appearance) and a
switching (flip ``v`` when ``(v,-)`` appears before ``(v,+)``); the form is
the smallest resulting signed graph, written as text.
"""

from __future__ import annotations

from .core import GraphError, SignedGraph

MAX_CANON_VERTICES = 16
_STATE_CHARS = "0+-d"


def _cover_types(G: SignedGraph) -> list[list[int]]:
    # cover vertex 2v is (v,+), 2v+1 is (v,-); 1 = cover edge, 2 = fibre pair
    N = 2 * G.n
    T = [[0] * N for _ in range(N)]
    for v in range(G.n):
        T[2 * v][2 * v + 1] = T[2 * v + 1][2 * v] = 2
    for u, v, s in G.edges:
        for a in (0, 1):
            b = a if s > 0 else 1 - a
            T[2 * u + a][2 * v + b] = T[2 * v + b][2 * u + a] = 1
    return T


def _refine(cells: list[list[int]], T) -> list[list[int]]:
    cells = [list(c) for c in cells]
    while True:
        for splitter in cells:
            sp = splitter
            new = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    new.append(cell)
                    continue
                sig = {}
                for x in cell:
                    row = T[x]
                    c1 = c2 = 0
                    for y in sp:
                        t = row[y]
                        if t == 1:
                            c1 += 1
                        elif t == 2:
                            c2 += 1
                    sig.setdefault((c1, c2), []).append(x)
                if len(sig) > 1:
                    split = True
                    new.extend(sig[k] for k in sorted(sig))
                else:
                    new.append(cell)
            if split:
                cells = new
                break
        else:
            return cells


def _leaf(G: SignedGraph, order: list[int]):
    pos_of = {}
    flip = {}
    for x in order:
        v = x // 2
        if v not in pos_of:
            pos_of[v] = len(pos_of)
            flip[v] = x % 2 == 1
    inv = [0] * G.n
    for v, i in pos_of.items():
        inv[i] = v
    chars = []
    for i in range(G.n):
        u = inv[i]
        for j in range(i + 1, G.n):
            w = inv[j]
            st = G.pair_state(u, w)
            if flip[u] != flip[w] and st in (1, 2):
                st = 3 - st
            chars.append(_STATE_CHARS[st])
    return f"{G.n}:" + "".join(chars), pos_of, flip


def _cover_map(G, leaf_a, leaf_b) -> list[int]:
    """Cover automorphism sending leaf ``a``'s labelling onto leaf ``b``'s."""
    pos_a, flip_a = leaf_a
    pos_b, flip_b = leaf_b
    inv_b = {i: v for v, i in pos_b.items()}
    g = [0] * (2 * G.n)
    for v in range(G.n):
        w = inv_b[pos_a[v]]
        f = flip_a[v] != flip_b[w]
        for e in (0, 1):
            g[2 * v + e] = 2 * w + (e ^ f)
    return g


def _orbits(gens, N):
    parent = list(range(N))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in range(N):
            a, b = find(x), find(g[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return find


def canonical_form(G: SignedGraph) -> bytes:
    """Canonical byte string, equal for graphs related by relabelling and
    switching, and different otherwise."""
    if G.n > MAX_CANON_VERTICES:
        raise GraphError(f"canonical_form is limited to {MAX_CANON_VERTICES} vertices")
    if G.n == 0:
        return b"0:"
    T = _cover_types(G)
    N = 2 * G.n
    state = {"best": None, "best_leaf": None, "first": None, "first_leaf": None}
    autos: list[list[int]] = []

    def visit(cells, seq):
        cells = _refine(cells, T)
        if len(cells) == N:
            form, pos_of, flip = _leaf(G, [c[0] for c in cells])
            leaf = (pos_of, flip)
            if state["first"] is None:
                state["first"], state["first_leaf"] = form, leaf
            elif form == state["first"]:
                autos.append(_cover_map(G, leaf, state["first_leaf"]))
            if state["best"] is None or form < state["best"]:
                state["best"], state["best_leaf"] = form, leaf
            elif form == state["best"] and state["best_leaf"] is not leaf:
                autos.append(_cover_map(G, leaf, state["best_leaf"]))
            return
        ti = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i))
        target = sorted(cells[ti])
        done = []
        for x in target:
            if done:
                fixing = [g for g in autos if all(g[y] == y for y in seq)]
                if fixing:
                    find = _orbits(fixing, N)
                    if any(find(x) == find(d) for d in done):
                        continue
            rest = [y for y in cells[ti] if y != x]
            visit(cells[:ti] + [[x], rest] + cells[ti + 1 :], seq + [x])
            done.append(x)

    visit([list(range(N))], [])
    return state["best"].encode("ascii")


def graph_from_form(form: bytes | str) -> SignedGraph:
    """Rebuild the canonical representative encoded by a form."""
    if isinstance(form, bytes):
        form = form.decode("ascii")
    head, body = form.split(":", 1)
    n = int(head)
    if len(body) != n * (n - 1) // 2:
        raise GraphError("malformed canonical form")
    edges = []
    it = iter(body)
    for i in range(n):
        for j in range(i + 1, n):
            st = _STATE_CHARS.index(next(it))
            if st & 1:
                edges.append((i, j, 1))
            if st & 2:
                edges.append((i, j, -1))
    return SignedGraph(n, edges)


def naive_canonical_form(G: SignedGraph) -> str:
    """Oracle: minimum encoding over every permutation and switching."""
    from itertools import permutations

    best = None
    for perm in permutations(range(G.n)):
        for mask in range(1 << G.n):
            chars = []
            inv = [0] * G.n
            for v, i in enumerate(perm):
                inv[i] = v
            for i in range(G.n):
                u = inv[i]
                for j in range(i + 1, G.n):
                    w = inv[j]
                    st = G.pair_state(u, w)
                    if ((mask >> u) ^ (mask >> w)) & 1 and st in (1, 2):
                        st = 3 - st
                    chars.append(_STATE_CHARS[st])
            s = "".join(chars)
            if best is None or s < best:
                best = s
    return f"{G.n}:{best}"
