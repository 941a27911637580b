"""Negative girth of Kneser signed graphs against 1 + ceil(k/(n-k))."""

from signedgraphs import kneser_girth_formula, kneser_signed, negative_girth, schrijver_signed

print(" n  k  |V|   girth  formula")
for n in range(2, 8):
    for k in range(1, n + 1):
        G = kneser_signed(n, k)
        g = negative_girth(G).length
        print(f"{n:2d} {k:2d} {G.n:5d} {g!s:>6} {kneser_girth_formula(n, k)!s:>7}")

# the alternating subgraph for n=6, k=4
for alt in ("linear", "cyclic"):
    S = schrijver_signed(6, 4, alternation=alt)
    g = negative_girth(S)
    print(alt, "SS(6,4):", S.n, "vertices, girth", g.length, "via", g.witness.vertices)
