"""
Counting disjoint edges
=======================

Two chords are disjoint when they share no endpoint and do not cross.  The
largest family of pairwise disjoint chords is found by an interval DP over the
polygon; a branch-and-bound oracle confirms it on small graphs.
"""

import random

from cgg import Cgg, Labelling, construct_gnk, max_disjoint_bruteforce, max_disjoint_set

g = construct_gnk(10, 2)
w = max_disjoint_set(g)
print("G_{10,2}: max disjoint", w.size, "witness", [e.as_list() for e in w.edges])

complete = Cgg.complete(9)
print("CK(9): max disjoint", max_disjoint_set(complete).size)

# compare DP and the oracle on a few random graphs
rng = random.Random(1)
for _ in range(5):
    n = rng.randint(5, 10)
    ck = sorted(Cgg.complete(n).edges)
    h = Cgg(Labelling(n), frozenset(e for e in ck if rng.random() < 0.4))
    print(f"n={n:2d} edges={len(h):2d} dp={max_disjoint_set(h).size} "
          f"oracle={max_disjoint_bruteforce(h, n).size}")
