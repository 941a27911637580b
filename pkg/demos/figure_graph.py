"""The 13-vertex graph with three balanced colours and negative girth four,
next to the layered Mycielskian conventions tried as alternatives."""

from signedgraphs import balanced_chromatic_number, fig13, negative_girth
from signedgraphs.mycielski import mycielskian_conventions

F = fig13()
r = balanced_chromatic_number(F)
print(f"fig13: n={F.n} edges={len(F.edges)} chi_b={r.value} girth={negative_girth(F).length}")
print("search nodes:", r.nodes)

for c in mycielskian_conventions():
    print(c)
