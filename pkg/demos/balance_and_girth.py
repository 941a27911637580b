"""Balance, switching and negative girth on a few small signed graphs."""

from signedgraphs import (
    SignedGraph,
    balanced_chromatic_number,
    is_balanced,
    negative_girth,
    switch,
)

# a positive triangle with one negative chord to a fourth vertex
G = SignedGraph(4, [(0, 1, 1), (1, 2, 1), (0, 2, 1), (2, 3, -1), (0, 3, 1)])

r = is_balanced(G)
print("balanced:", r.balanced)
print("negative cycle:", r.cycle.vertices, r.cycle.signs)

# switching never changes balance or girth
H = switch(G, {0, 1})
print("switched edges:", sorted(H.edges))
print("girth before/after:", negative_girth(G).length, negative_girth(H).length)

# a digon is the shortest possible negative cycle
D = SignedGraph(2, [(0, 1, 1), (0, 1, -1)])
g = negative_girth(D)
print("digon girth:", g.length, "witness", g.witness.vertices)

res = balanced_chromatic_number(G)
print("chi_b:", res.value, "colouring", res.coloring.colors)
