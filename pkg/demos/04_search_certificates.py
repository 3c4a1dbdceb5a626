"""
Checking the formula by exhaustive search
=========================================

For small n the maximum can be found without using the formula at all: a
branch and bound over edge sets that avoid the arc and stay I_{k+1}-free.
"""

import time

from cgg import f_max, search_f, valid_params, verify_graph

t0 = time.perf_counter()
for n in range(5, 9):
    for k in range(1, n // 2):
        for q in range(1, n):
            if not valid_params(n, k, q):
                continue
            cert = search_f(n, k, q)
            flag = "ok" if cert.optimum == f_max(n, k, q).value else "MISMATCH"
            print(f"n={n} k={k} q={q}: {cert.optimum:3d} edges, {cert.nodes_explored:6d} nodes  {flag}")
print(f"{time.perf_counter() - t0:.2f}s")

# the witness is an ordinary graph and can be checked on its own
cert = search_f(8, 2, 5)
print(verify_graph(cert.witness, 2, 5).as_dict()["checks"])
