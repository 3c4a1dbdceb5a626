"""Maximum sets of pairwise disjoint edges.

Two chords are disjoint when they share no endpoint and do not cross.  For
points in convex position this is a purely combinatorial condition on the
cyclic order, so everything here works on vertex indices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Cgg, Edge, Labelling


@dataclass(frozen=True)
class DisjointWitness:
    size: int
    edges: tuple[Edge, ...]


def _crosses(i1: int, j1: int, i2: int, j2: int) -> bool:
    # spans normalised to i < j; chords cross iff exactly one end of the second is strictly inside
    return (i1 < i2 < j1) != (i1 < j2 < j1)


def edges_disjoint(lab: Labelling, e1: Edge, e2: Edge) -> bool:
    if {e1.a, e1.b} & {e2.a, e2.b}:
        return False
    i1, j1 = sorted((lab.index(e1.a), lab.index(e1.b)))
    i2, j2 = sorted((lab.index(e2.a), lab.index(e2.b)))
    return not _crosses(i1, j1, i2, j2)


def _witness(g: Cgg, pairs) -> DisjointWitness:
    lab = g.labelling
    edges = tuple(sorted(Edge(lab.label(i), lab.label(j)) for i, j in pairs))
    return DisjointWitness(len(edges), edges)


def max_disjoint_set(g: Cgg) -> DisjointWitness:
    """Exact maximum disjoint edge set by interval DP over the cyclic order.

    ``best[a][b]`` is the optimum using only vertices ``a..b``: either ``a`` is
    unused, or ``a`` is matched to a neighbour ``c`` and the two sides
    ``a+1..c-1`` and ``c+1..b`` are solved independently.  Cutting the cycle
    between index ``n-1`` and ``0`` loses nothing because crossing is decided
    by the linear order alone.  Among optimal sets the one whose sorted index
    pairs are lexicographically smallest is returned; preferring to match
    ``a`` and then the smallest ``c`` yields exactly that.
    """
    n = g.n
    nbrs = [[] for _ in range(n)]
    for i, j in g.index_pairs():
        nbrs[i].append(j)
    best = [[0] * (n + 1) for _ in range(n + 1)]
    choice = [[-1] * (n + 1) for _ in range(n + 1)]

    def val(a, b):
        return best[a][b] if a <= b else 0

    for a in range(n - 1, -1, -1):
        for b in range(a + 1, n):
            top, pick = val(a + 1, b), -1
            for c in nbrs[a]:
                if c > b:
                    break
                cand = 1 + val(a + 1, c - 1) + val(c + 1, b)
                # strict > keeps the smallest c; >= against "skip" prefers matching a
                if cand > top or (cand == top and pick == -1):
                    top, pick = cand, c
            best[a][b] = top
            choice[a][b] = pick
    pairs = []
    stack = [(0, n - 1)]
    while stack:
        a, b = stack.pop()
        if a >= b:
            continue
        c = choice[a][b]
        if c == -1:
            stack.append((a + 1, b))
        else:
            pairs.append((a, c))
            stack.append((a + 1, c - 1))
            stack.append((c + 1, b))
    return _witness(g, pairs)


def max_disjoint_size(n: int, pairs) -> int:
    """Size-only variant of the interval DP over ``(i, j)`` index pairs with ``i < j``."""
    nbrs = [[] for _ in range(n)]
    for i, j in sorted(pairs):
        nbrs[i].append(j)
    best = [[0] * (n + 1) for _ in range(n + 2)]
    for a in range(n - 2, -1, -1):
        row, nxt = best[a], best[a + 1]
        cs = nbrs[a]
        for b in range(a + 1, n):
            top = nxt[b]
            for c in cs:
                if c > b:
                    break
                cand = 1 + nxt[c - 1] + best[c + 1][b]
                if cand > top:
                    top = cand
            row[b] = top
    return best[0][n - 1]


def max_disjoint_bruteforce(g: Cgg, cap: int) -> DisjointWitness:
    """Exhaustive search for a largest disjoint subset, stopping once ``cap`` is reached.

    Exact whenever the true maximum is below ``cap``.  Branches on the lowest
    vertex still touched by a compatible edge (leave it unused, or use it with
    one of its compatible edges).  The bound counts, per region cut out by the
    chosen chords, half the vertices still usable there.
    """
    if cap <= 0 or not g.edges:
        return DisjointWitness(0, ())
    n = g.n
    pairs = g.index_pairs()
    best: list[tuple[int, int]] = []
    chosen: list[tuple[int, int]] = []
    # region[v]: id of the face (cut out by chosen chords) that vertex v lies in
    region = [0] * n
    next_id = 1

    def bound(cands):
        seen: dict[int, set] = {}
        for i, j in cands:
            s = seen.setdefault(region[i], set())
            s.add(i)
            s.add(j)
        return sum(len(s) // 2 for s in seen.values())

    def rec(cands):
        nonlocal best, next_id
        if len(chosen) > len(best):
            best = list(chosen)
        if len(best) >= cap or not cands:
            return
        if len(chosen) + bound(cands) <= len(best):
            return
        v = min(i for i, _ in cands)
        for i, j in [p for p in cands if v in p]:
            rest = [p for p in cands if p[0] not in (i, j) and p[1] not in (i, j)
                    and not _crosses(i, j, *p)]
            saved = region[i + 1:j]
            region[i + 1:j] = [next_id] * (j - i - 1)
            next_id += 1
            chosen.append((i, j))
            rec(rest)
            chosen.pop()
            region[i + 1:j] = saved
            if len(best) >= cap:
                return
        rec([p for p in cands if v not in p])

    rec(pairs)
    return _witness(g, best[:cap])


def is_ik1_free(g: Cgg, k: int) -> bool:
    """True when ``g`` has no ``k + 1`` pairwise disjoint edges."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return max_disjoint_set(g).size <= k
