"""
Building the extremal graphs
============================

G_{n,k} has kn edges, no k+1 pairwise disjoint edges, and leaves n-2k
consecutive boundary vertices untouched.  G_{n,k,l} widens that empty arc by l
vertices at the cost of l(l+1)/2 edges.
"""

from cgg import ConstructionSpec, construct_gnk, construct_gnkl, direction_counts, free_arcs

g = construct_gnk(12, 3)
print("G_{12,3}:", len(g), "edges, longest free arc", free_arcs(g).longest)
print("edges per direction:", sorted(direction_counts(g).values()))

# each direction is a block of k parallel chords
for e in sorted(g.edges)[:6]:
    print("  ", e)

# widen the free arc by two vertices
h = construct_gnkl(12, 3, 2)
spec = ConstructionSpec(12, 3, 2)
print("G_{12,3,2}:", len(h), "edges, avoids", spec.free_arc)
counts = direction_counts(h)
short = {d if d <= 6 else d - 12: c for d, c in counts.items() if c < 3}
print("directions that lost an edge:", short)

# the edge count table for n = 13
for k in range(1, 6):
    print(k, [len(construct_gnkl(13, k, ell)) for ell in range(k)])
