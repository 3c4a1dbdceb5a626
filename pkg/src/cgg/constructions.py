"""Extremal I_{k+1}-free graphs with a long free boundary arc.

The free arc ``A`` always sits on the right, symmetric about the horizontal
axis: it is the set of labels with ``|p| < |A|``.  Its complement ``K`` runs
counterclockwise from the top end of ``A`` around through corner ``n`` to the
bottom end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .core import (
    Cgg,
    Edge,
    EdgeBlock,
    Labelling,
    block,
    block_position,
    edge_direction,
    edges_in_direction,
)
from .errors import CggError, ConstructionIntegrityError, InfeasibleBlockError


def _check_nk(n: int, k: int) -> None:
    if not isinstance(n, int) or n < 4:
        raise CggError(f"n must be an integer >= 4, got {n!r}")
    if not isinstance(k, int) or not 1 <= k <= n // 2 - 1:
        raise CggError(f"k must satisfy 1 <= k <= {n // 2 - 1} for n={n}, got {k!r}")


@dataclass(frozen=True)
class ConstructionSpec:
    """Parameters of ``G_{n,k,l}`` and the free arc it avoids (``ell = 0`` is ``G_{n,k}``)."""

    n: int
    k: int
    ell: int = 0

    def __post_init__(self):
        _check_nk(self.n, self.k)
        if not isinstance(self.ell, int) or not 0 <= self.ell < self.k:
            raise CggError(f"ell must satisfy 0 <= ell < k={self.k}, got {self.ell!r}")

    @property
    def m(self) -> int:
        return (self.n - 2 * self.k) // 2

    @property
    def arc_size(self) -> int:
        return self.n - 2 * self.k + self.ell

    @cached_property
    def labelling(self) -> Labelling:
        return Labelling.for_free_arc(self.n, self.arc_size)

    @cached_property
    def free_arc(self) -> tuple[int, ...]:
        return tuple(p for p in self.labelling.labels if abs(p) < self.arc_size)

    @cached_property
    def allowed_vertices(self) -> tuple[int, ...]:
        """``K`` in counterclockwise order, top end first."""
        x = self.arc_size + 1
        vs = self.labelling.labels
        return tuple(p for p in vs if p >= x) + tuple(p for p in vs if p <= -x)

    @property
    def x(self) -> int:
        """Smallest positive allowed label (top end of ``K``)."""
        return self.allowed_vertices[0]

    @property
    def k_plus(self) -> tuple[int, ...]:
        return self.allowed_vertices[: self.k - self.ell]

    @property
    def k_zero(self) -> tuple[int, ...]:
        return self.allowed_vertices[self.k - self.ell: self.k]

    @property
    def k_minus(self) -> tuple[int, ...]:
        return self.allowed_vertices[self.k:]

    def is_allowed(self, e: Edge) -> bool:
        a = set(self.free_arc)
        return e.a not in a or e.b not in a


def allowed_edges(spec: ConstructionSpec, d: int) -> list[Edge]:
    """Allowed edges in direction ``d``, outward from corner ``d``.

    They always form one consecutive run of the direction.
    """
    line = edges_in_direction(spec.labelling, d)
    flags = [spec.is_allowed(e) for e in line]
    picked = [i for i, f in enumerate(flags) if f]
    if picked and picked[-1] - picked[0] + 1 != len(picked):
        raise ConstructionIntegrityError(f"allowed edges in direction {d} are not consecutive")
    return [line[i] for i in picked]


class _DirectionTable:
    """Collects one edge set per direction class; a second definition must agree."""

    def __init__(self, lab: Labelling, what: str):
        self.lab = lab
        self.what = what
        self.sets: dict[int, frozenset[Edge]] = {}
        self.sources: dict[int, str] = {}

    def put(self, j: int, blk: EdgeBlock, clause: str) -> None:
        d = j % self.lab.n
        edges = frozenset(blk.edges)
        if d in self.sets and self.sets[d] != edges:
            raise ConstructionIntegrityError(
                f"{self.what}: direction {j} defined as {sorted(self.sets[d])} by "
                f"{self.sources[d]} and as {sorted(edges)} by {clause}"
            )
        self.sets[d] = edges
        self.sources.setdefault(d, clause)

    def graph(self) -> Cgg:
        if len(self.sets) != self.lab.n:
            missing = sorted(set(range(self.lab.n)) - set(self.sets))
            raise ConstructionIntegrityError(f"{self.what}: directions {missing} undefined")
        return Cgg(self.lab, frozenset().union(*self.sets.values()))


def construct_gnk(n: int, k: int) -> Cgg:
    """``G_{n,k}``: ``kn`` edges, I_{k+1}-free, avoiding ``n - 2k`` consecutive vertices."""
    _check_nk(n, k)
    spec = ConstructionSpec(n, k)
    lab, m = spec.labelling, spec.m
    table = _DirectionTable(lab, f"G_{{{n},{k}}}")
    if n % 2 == 0:
        for j in range(-m, m + 1):
            table.put(j, block(lab, k, j, abs(j)), "pushed range")
        for i in range(2 * k + 1):
            table.put(m + i, block(lab, k, m + i, m - i % 2), "central range")
    else:
        for j in range(-(m + 1), m + 2):
            table.put(j, block(lab, k, j, abs(j)), "pushed range")
        for i in range(2 * k + 2):
            table.put(m + i, block(lab, k, m + i, m + i % 2), "central range")
    return table.graph()


def _leftmost_vertical(lab: Labelling, size: int) -> EdgeBlock:
    try:
        return block(lab, size, 0, 0)
    except InfeasibleBlockError:
        return block(lab, size, 0, 1)


def gnkl_blocks(n: int, k: int, ell: int) -> dict[int, EdgeBlock]:
    """Per-direction blocks of ``G_{n,k,l}``, keyed by the representative used to define them.

    Overlapping sub-ranges are all evaluated and must agree.
    """
    spec = ConstructionSpec(n, k, ell)
    lab, m = spec.labelling, spec.m
    table = _DirectionTable(lab, f"G_{{{n},{k},{ell}}}")
    blocks: dict[int, EdgeBlock] = {}

    def put(j, blk, clause):
        table.put(j, blk, clause)
        blocks.setdefault(j % n, blk)

    put(0, _leftmost_vertical(lab, k - math.ceil(ell / 2)), "vertical")
    for j in range(0, ell + 1):
        size, far = k - math.ceil((ell - j) / 2), (ell - j) % 2
        put(j, block(lab, size, j, far), "short, bottom")
        put(-j, block(lab, size, -j, far), "short, top")
    for j in range(ell, ell + m + 1):
        put(j, block(lab, k, j, j - ell), "shifted, bottom")
        put(-j, block(lab, k, -j, j - ell), "shifted, top")
    if n % 2 == 0:
        for j in range(ell + m, 2 * k + m - ell + 1):
            far = m if (j - ell - m) % 2 == 0 else m - 1
            put(j, block(lab, k, j, far), "central")
    else:
        for j in range(ell + m, 2 * k + m - ell + 2):
            far = m if (j - ell - m) % 2 == 0 else m + 1
            put(j, block(lab, k, j, far), "almost central")
    table.graph()
    return blocks


def construct_gnkl(n: int, k: int, ell: int) -> Cgg:
    """``G_{n,k,l}``: ``kn - l(l+1)/2`` edges avoiding ``n - 2k + l`` consecutive vertices."""
    blocks = gnkl_blocks(n, k, ell)
    lab = ConstructionSpec(n, k, ell).labelling
    return Cgg(lab, frozenset(e for b in blocks.values() for e in b.edges))


def central_choice(spec: ConstructionSpec, d: int) -> list[Edge]:
    """Pick edges for direction ``d`` by the balance rule instead of the sub-range table.

    At most ``k`` allowed edges: take them all.  Otherwise take the run of ``k``
    allowed edges leaving the most even split of the remaining vertices; on a
    tie take the lower run, i.e. the one leaving more vertices on the side of
    the upper-half corner of the direction.
    """
    k, n = spec.k, spec.n
    allowed = allowed_edges(spec, d)
    if len(allowed) <= k:
        return allowed
    r = d % n or n
    best = None
    for s in range(len(allowed) - k + 1):
        run = allowed[s: s + k]
        near, far = block_position(spec.labelling, r, run)
        key = (abs(near - far), -near)
        if best is None or key < best[0]:
            best = (key, run)
    return best[1]


def construct_star(n: int, q: int) -> Cgg:
    """Every edge with an endpoint outside the canonical arc of ``q`` vertices."""
    if not isinstance(n, int) or n < 4:
        raise CggError(f"n must be an integer >= 4, got {n!r}")
    if not isinstance(q, int) or not 1 <= q <= n - 1:
        raise CggError(f"q must satisfy 1 <= q <= {n - 1}, got {q!r}")
    lab, arc = canonical_arc(n, q)
    arc = set(arc)
    vs = lab.labels
    edges = frozenset(
        Edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:] if u not in arc or v not in arc
    )
    return Cgg(lab, edges)


def canonical_arc(n: int, q: int) -> tuple[Labelling, tuple[int, ...]]:
    lab = Labelling.for_free_arc(n, q)
    return lab, tuple(p for p in lab.labels if abs(p) < q)


def construct_extremal(n: int, k: int, q: int) -> Cgg:
    """An I_{k+1}-free graph with a free arc of order ``q`` and ``f(n,k,q)`` edges."""
    _check_nk(n, k)
    if not isinstance(q, int) or not 1 <= q <= n - 1:
        raise CggError(f"q must satisfy 1 <= q <= {n - 1}, got {q!r}")
    if q <= n - 2 * k:
        return construct_gnk(n, k)
    if q < n - k:
        return construct_gnkl(n, k, q - (n - 2 * k))
    return construct_star(n, q)


def gnk_edge_classes(n: int, k: int) -> dict[Edge, str]:
    """Figure styling for ``G_{n,k}``: pushed directions ordinary, central ones bold,
    the directions where the two ranges meet dashed."""
    g = construct_gnk(n, k)
    m = ConstructionSpec(n, k).m
    if n % 2 == 0:
        seams = {m % n, (-m) % n}
    else:
        seams = {m % n, (m + 1) % n, (-m) % n, (-m - 1) % n}
    pushed = {j % n for j in range(-m, m + 1)} - seams
    classes = {}
    for e in g.edges:
        d = edge_direction(g.labelling, e)
        classes[e] = "dashed" if d in seams else "ordinary" if d in pushed else "bold"
    return classes


def gnk_in_frame(n: int, k: int, ell: int) -> Cgg:
    """``G_{n,k}`` placed in the labelling of ``G_{n,k,l}``.

    The base graph is turned ``l`` corners clockwise, so its free arc sits at
    the clockwise end of the larger one and the vertices added to the arc are
    consecutive.  The edges lost then emanate from those ``l`` vertices only.
    """
    base = construct_gnk(n, k)
    lab = ConstructionSpec(n, k, ell).labelling
    if ell == 0:
        return base
    return Cgg(lab, frozenset(Edge(lab.normalize(e.a - ell), lab.normalize(e.b - ell)) for e in base.edges))


def gnkl_edge_classes(n: int, k: int, ell: int) -> tuple[dict[Edge, str], list[Edge]]:
    """Styling for ``G_{n,k,l}`` against ``G_{n,k}``: new edges bold, shared ordinary.

    Also returns the ``G_{n,k}`` edges that were dropped, for drawing dashed.
    """
    g = construct_gnkl(n, k, ell)
    base = gnk_in_frame(n, k, ell)
    classes = {e: ("ordinary" if e in base.edges else "bold") for e in g.edges}
    return classes, sorted(base.edges - g.edges)
