"""
The f(n, k, q) table
====================

f(n, k, q) is the most edges a convex geometric graph on n vertices can have
without k+1 disjoint edges while keeping q consecutive vertices isolated.
"""

from cgg import f_max, loss_profile, ConstructionSpec

n = 12
print("q  " + "".join(f"k={k:<4d}" for k in range(1, n // 2)))
for q in range(1, n):
    row = "".join(f"{f_max(n, k, q).value:<6d}" for k in range(1, n // 2))
    print(f"{q:<3d}{row}")

# where the edges go missing in the middle regime
spec = ConstructionSpec(16, 5, 3)
prof = loss_profile(spec)
print("losses by direction:", {j: v for j, v in sorted(prof.per_direction.items()) if v})
print("total", prof.total, "= l(l+1)/2 =", 3 * 4 // 2)
