"""Smallest graphs with given negative girth and balanced chromatic number."""

import time

from signedgraphs import n_s_search

for lam, p, nmax in [(3, 2, 4), (3, 3, 5), (4, 3, 5)]:
    t = time.perf_counter()
    rep = n_s_search(lam, p, nmax)
    dt = time.perf_counter() - t
    if rep.n_s is not None:
        print(f"n_s({lam},{p}) = {rep.n_s}   [{dt:.1f}s]")
    else:
        print(f"n_s({lam},{p}) >= {rep.lower_bound}   [{dt:.1f}s]")
    print(rep.to_csv())
