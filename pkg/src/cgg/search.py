"""Exhaustive branch-and-bound certification of ``f(n, k, q)`` on small instances.

The search never consults the closed form: it maximises the edge count over
all graphs that avoid the canonical arc of order ``q`` and have no ``k + 1``
pairwise disjoint edges.  The only problem knowledge it uses is for pruning:
parallel edges are pairwise disjoint, so a direction holds at most ``k``
edges, and at most as many as it has allowed edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bounds import check_params, f_max
from .constructions import ConstructionSpec, canonical_arc
from .core import (
    Cgg,
    Edge,
    arc_split,
    direction_counts,
    edge_direction,
    edge_order,
    emanating_vertex,
    free_arcs,
    is_free_arc,
)
from .disjoint import DisjointWitness, max_disjoint_set, max_disjoint_size

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class SearchCertificate:
    n: int
    k: int
    q: int
    optimum: int
    witness: Cgg
    nodes_explored: int
    budget_exhausted: bool


def _candidates(n: int, q: int):
    lab, arc = canonical_arc(n, q)
    arc = set(arc)
    vs = lab.labels
    by_dir: dict[int, list[Edge]] = {}
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            if u in arc and v in arc:
                continue
            e = Edge(u, v)
            by_dir.setdefault(edge_direction(lab, e), []).append(e)
    # fullest directions first; inside a direction, longest edges first
    order = sorted(by_dir, key=lambda d: (-len(by_dir[d]), d))
    seq = []
    for d in order:
        seq.extend(sorted(by_dir[d], key=lambda e: (-edge_order(lab, e), e)))
    return lab, arc, seq


def search_f(n: int, k: int, q: int, node_budget: int = DEFAULT_BUDGET,
             use_bound: bool = True) -> SearchCertificate:
    """Largest I_{k+1}-free graph avoiding the canonical arc of order ``q``.

    Depth-first over the candidate edges, include before exclude.  With
    ``use_bound`` a node is cut when its edges plus the remaining per-direction
    capacity cannot beat the incumbent.  A node budget stops runaway searches;
    the certificate then says so and the optimum is only a lower bound.
    """
    check_params(n, k, q)
    if node_budget < 1:
        raise ValueError("node_budget must be >= 1")
    lab, _, seq = _candidates(n, q)
    pairs = [tuple(sorted((lab.index(e.a), lab.index(e.b)))) for e in seq]
    dirs = [edge_direction(lab, e) for e in seq]
    total = len(seq)
    # remaining[i][d]: candidates in direction d at positions >= i
    remaining = [[0] * n for _ in range(total + 1)]
    for i in range(total - 1, -1, -1):
        remaining[i] = remaining[i + 1][:]
        remaining[i][dirs[i]] += 1

    used = [0] * n
    chosen: list[int] = []
    best: list[int] = []
    nodes = 0
    exhausted = False

    def bound(i):
        rem = remaining[i]
        return len(chosen) + sum(min(k - used[d], rem[d]) for d in range(n))

    def rec(i):
        nonlocal nodes, exhausted, best
        if exhausted:
            return
        nodes += 1
        if nodes > node_budget:
            exhausted = True
            return
        if len(chosen) > len(best):
            best = chosen[:]
        if i == total:
            return
        if use_bound and bound(i) <= len(best):
            return
        d = dirs[i]
        if used[d] < k:
            trial = [pairs[c] for c in chosen] + [pairs[i]]
            if len(trial) <= k or max_disjoint_size(n, trial) <= k:
                chosen.append(i)
                used[d] += 1
                rec(i + 1)
                used[d] -= 1
                chosen.pop()
        rec(i + 1)

    rec(0)
    witness = Cgg(lab, frozenset(seq[i] for i in best))
    return SearchCertificate(n, k, q, len(best), witness, min(nodes, node_budget), exhausted)


@dataclass
class VerifyReport:
    n: int
    k: int
    q: int
    edge_count: int
    max_disjoint: DisjointWitness
    free_arc_runs: tuple[tuple[int, ...], ...]
    longest_free_arc: int
    direction_counts: dict[int, int]
    f_max: int | None
    checks: dict[str, bool] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "q": self.q,
            "edge_count": self.edge_count,
            "max_disjoint": {"size": self.max_disjoint.size,
                             "edges": [e.as_list() for e in self.max_disjoint.edges]},
            "free_arcs": [list(r) for r in self.free_arc_runs],
            "longest_free_arc": self.longest_free_arc,
            "direction_counts": {str(d): c for d, c in sorted(self.direction_counts.items())},
            "f_max": self.f_max,
            "checks": dict(self.checks),
            "notes": list(self.notes),
            "passed": self.passed,
        }


def lemma_violations(g: Cgg, k: int) -> list[Edge]:
    """Edges of a ``G_{n,k}`` whose behind-arc is shorter than the arc lemmas promise.

    Even ``n``: at least ``m - 1`` vertices, and ``m`` when the edge emanates
    from a positive label.  Odd ``n``: at least ``m``.
    """
    n = g.n
    m = (n - 2 * k) // 2
    bad = []
    for e in sorted(g.edges):
        need = m if n % 2 or emanating_vertex(e) > 0 else m - 1
        if len(arc_split(g.labelling, e).behind) < need:
            bad.append(e)
    return bad


def verify_graph(g: Cgg, k: int, q: int | None = None, construction: str | None = None) -> VerifyReport:
    """Check a graph against the extremal picture for ``(n, k, q)``.

    ``q`` defaults to the longest free arc of the graph.  Checks: no ``k + 1``
    disjoint edges, a free arc of order ``q``, at most ``f(n,k,q)`` edges, and
    when ``construction == "Gnk"`` the arc lemmas on every edge.
    """
    n = g.n
    mds = max_disjoint_set(g)
    arcs = free_arcs(g)
    q = arcs.longest if q is None else q
    report = VerifyReport(
        n=n, k=k, q=q, edge_count=len(g), max_disjoint=mds,
        free_arc_runs=arcs.runs, longest_free_arc=arcs.longest,
        direction_counts=direction_counts(g), f_max=None,
    )
    report.checks["ik1_free"] = mds.size <= k
    report.checks["free_arc"] = arcs.longest >= q
    try:
        fm = f_max(n, k, q)
    except ValueError as exc:
        report.notes.append(f"f_max undefined: {exc}")
    else:
        report.f_max = fm.value
        report.checks["within_f_max"] = len(g) <= fm.value
        report.notes.append(
            f"attains f_max ({fm.value}, clause {fm.clause.value})" if len(g) == fm.value
            else f"{fm.value - len(g)} edges below f_max"
        )
        if len(g) == k * n and report.checks["ik1_free"]:
            report.checks["k_per_direction"] = set(report.direction_counts.values()) == {k}
    if construction == "Gnk":
        bad = lemma_violations(g, k)
        report.checks["arc_lemma"] = not bad
        if bad:
            report.notes.append(f"arc lemma fails on {bad[:5]}")
    return report


def witness_is_sound(cert: SearchCertificate) -> bool:
    _, arc = canonical_arc(cert.n, cert.q)
    w = cert.witness
    return (len(w) == cert.optimum and max_disjoint_set(w).size <= cert.k
            and is_free_arc(w, arc))


__all__ = [
    "ConstructionSpec",
    "DEFAULT_BUDGET",
    "SearchCertificate",
    "VerifyReport",
    "lemma_violations",
    "search_f",
    "verify_graph",
    "witness_is_sound",
]
