"""Labelling scheme and edge calculus for convex geometric graphs.

A graph on ``n`` vertices is drawn on a regular ``2n``-gon whose corners carry
the labels ``-n+1, ..., n`` in counterclockwise order, label ``0`` on the far
right and label ``n`` on the far left.  The graph occupies every other corner:
either the odd labels or the even labels.

Two views of a vertex are used throughout:

* its *label*, an integer in ``(-n, n]`` of the labelling's parity, and
* its *index*, the position ``0..n-1`` in counterclockwise order starting
  right after corner ``n``.  Sorting labels ascending gives index order, and
  the boundary gap through corner ``n`` sits between index ``n-1`` and ``0``.

All arithmetic is exact integer arithmetic on corner positions mod ``2n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Literal

from .errors import CggError, InfeasibleBlockError

Parity = Literal["odd", "even"]


@dataclass(frozen=True)
class Labelling:
    n: int
    parity: Parity = "odd"

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 4:
            raise CggError(f"n must be an integer >= 4, got {self.n!r}")
        if self.parity not in ("odd", "even"):
            raise CggError(f"parity must be 'odd' or 'even', got {self.parity!r}")

    @classmethod
    def for_free_arc(cls, n: int, arc_size: int) -> Labelling:
        """Labelling that lets a free arc of ``arc_size`` sit symmetric about label 0."""
        return cls(n, "odd" if arc_size % 2 == 0 else "even")

    @property
    def residue(self) -> int:
        return 1 if self.parity == "odd" else 0

    @cached_property
    def labels(self) -> tuple[int, ...]:
        return tuple(p for p in range(-self.n + 1, self.n + 1) if p % 2 == self.residue)

    @cached_property
    def _index(self) -> dict[int, int]:
        return {p: i for i, p in enumerate(self.labels)}

    def normalize(self, p: int) -> int:
        """Reduce a corner position into the label range ``(-n, n]``."""
        r = p % (2 * self.n)
        return r - 2 * self.n if r > self.n else r

    def is_vertex(self, p: int) -> bool:
        return p % 2 == self.residue

    def check(self, p: int) -> int:
        if not isinstance(p, int) or isinstance(p, bool):
            raise CggError(f"label must be an integer, got {p!r}")
        if not -self.n < p <= self.n:
            raise CggError(f"label {p} outside ({-self.n}, {self.n}] for n={self.n}")
        if not self.is_vertex(p):
            raise CggError(f"label {p} is not {self.parity} (n={self.n})")
        return p

    def index(self, label: int) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise CggError(f"{label!r} is not a vertex label for {self}") from None

    def label(self, index: int) -> int:
        return self.labels[index % self.n]

    def vertex_at(self, p: int) -> int:
        """Label of the vertex sitting at corner position ``p`` (any integer)."""
        q = self.normalize(p)
        if not self.is_vertex(q):
            raise CggError(f"corner {p} holds no vertex under {self}")
        return q


@dataclass(frozen=True, order=True)
class Edge:
    """Unordered pair of vertex labels, stored with ``a < b``."""

    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise CggError(f"self-loop at {self.a}")
        if self.a > self.b:
            lo, hi = self.b, self.a
            object.__setattr__(self, "a", lo)
            object.__setattr__(self, "b", hi)

    def __iter__(self) -> Iterator[int]:
        yield self.a
        yield self.b

    def __repr__(self) -> str:
        return f"[{self.b},{self.a}]"

    def as_list(self) -> list[int]:
        return [self.a, self.b]


def edge(a: int, b: int) -> Edge:
    return Edge(a, b)


@dataclass(frozen=True)
class Cgg:
    labelling: Labelling
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        edges = frozenset(self.edges)
        for e in edges:
            self.labelling.check(e.a)
            self.labelling.check(e.b)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Iterable[int]], parity: Parity = "odd") -> Cgg:
        return cls(Labelling(n, parity), frozenset(Edge(*p) for p in pairs))

    @classmethod
    def complete(cls, n: int, parity: Parity = "odd") -> Cgg:
        lab = Labelling(n, parity)
        vs = lab.labels
        return cls(lab, frozenset(Edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:]))

    @classmethod
    def empty(cls, n: int, parity: Parity = "odd") -> Cgg:
        return cls(Labelling(n, parity))

    @property
    def n(self) -> int:
        return self.labelling.n

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.labelling.labels

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def index_pairs(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(i, j)`` cyclic-index pairs with ``i < j``."""
        ix = self.labelling.index
        return sorted((ix(e.a), ix(e.b)) for e in self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, e: Edge) -> bool:
        return e in self.edges


def _check_edge(lab: Labelling, e: Edge) -> Edge:
    lab.check(e.a)
    lab.check(e.b)
    return e


def edge_order(lab: Labelling, e: Edge) -> int:
    """Half the cyclic corner distance between the endpoints.

    The two open boundary arcs cut off by ``e`` hold ``order - 1`` and
    ``n - order - 1`` vertices.
    """
    _check_edge(lab, e)
    d = abs(e.a - e.b)
    return min(d, 2 * lab.n - d) // 2


def edge_direction(lab: Labelling, e: Edge) -> int:
    """Direction class ``d`` in ``0..n-1`` with ``a + b = 2d (mod 2n)``."""
    _check_edge(lab, e)
    return ((e.a + e.b) // 2) % lab.n


def emanating_vertex(e: Edge) -> int:
    if abs(e.a) != abs(e.b):
        return e.a if abs(e.a) > abs(e.b) else e.b
    return max(e.a, e.b)


def _edge_at(lab: Labelling, d: int, t: int) -> Edge:
    return Edge(lab.normalize(d + t), lab.normalize(d - t))


def edges_in_direction(lab: Labelling, d: int) -> list[Edge]:
    """All chords perpendicular to the radius through corner ``d``.

    Ordered outward from corner ``d``: the first edge cuts off the fewest
    vertices on the side of ``d``.  ``d`` and ``d + n`` give the same set in
    opposite order.
    """
    n = lab.n
    return [_edge_at(lab, d, t) for t in range(1, n) if lab.is_vertex(d + t)]


@dataclass(frozen=True)
class EdgeBlock:
    """Run of consecutive parallel edges, listed outward from corner ``direction``.

    ``near_arc`` holds the vertices cut off on the side of corner
    ``direction``, ``far_arc`` those on the opposite side; both in
    counterclockwise order.
    """

    direction: int
    edges: tuple[Edge, ...]
    near_arc: tuple[int, ...]
    far_arc: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)


def _arc(lab: Labelling, start: int, stop: int) -> tuple[int, ...]:
    """Vertices at corners ``start..stop`` inclusive, counterclockwise."""
    return tuple(lab.normalize(p) for p in range(start, stop + 1) if lab.is_vertex(p))


def block(lab: Labelling, k: int, d: int, j: int) -> EdgeBlock:
    """The ``k`` consecutive edges in direction ``d`` leaving ``j`` vertices on the far side.

    Raises InfeasibleBlockError when ``j`` has the wrong parity for ``d``:
    ``j`` and ``n`` agree mod 2 exactly when corner ``d`` is not a vertex.
    """
    n = lab.n
    if k < 1 or 2 * k > n:
        raise CggError(f"block size k={k} invalid for n={n}")
    if not 0 <= j <= n - 2 * k:
        raise CggError(f"far count j={j} outside [0, {n - 2 * k}]")
    t_max = n - 1 - j
    if not lab.is_vertex(d + t_max):
        raise InfeasibleBlockError(
            f"no block in direction {d} with {j} far vertices (n={n}, {lab.parity} labels)"
        )
    t_min = t_max - 2 * (k - 1)
    edges = tuple(_edge_at(lab, d, t) for t in range(t_min, t_max + 1, 2))
    near = _arc(lab, d - t_min + 1, d + t_min - 1)
    far = _arc(lab, d + t_max + 1, d + 2 * n - t_max - 1)
    return EdgeBlock(d, edges, near, far)


def block_position(lab: Labelling, d: int, edges: Iterable[Edge]) -> tuple[int, int]:
    """``(near, far)`` vertex counts left outside a run of parallel edges in direction ``d``."""
    n = lab.n
    ts = []
    for e in edges:
        t = ((e.a - d) % (2 * n))
        t = min(t, 2 * n - t)
        ts.append(t)
    if not ts:
        raise CggError("empty edge run")
    return min(ts) - 1, n - 1 - max(ts)


@dataclass(frozen=True)
class ArcSplit:
    """Vertices behind an edge (away from the gap at corner ``n``) and in front of it."""

    behind: tuple[int, ...]
    front: tuple[int, ...]


def _span(lab: Labelling, e: Edge) -> tuple[int, int]:
    i, j = lab.index(e.a), lab.index(e.b)
    return (i, j) if i < j else (j, i)


def arc_split(lab: Labelling, e: Edge) -> ArcSplit:
    _check_edge(lab, e)
    i, j = _span(lab, e)
    vs = lab.labels
    return ArcSplit(behind=vs[i + 1:j], front=vs[j + 1:] + vs[:i])


def lies_behind(lab: Labelling, e2: Edge, e1: Edge) -> bool:
    """True when the arc behind ``e2`` is contained in the arc behind ``e1``."""
    _check_edge(lab, e1)
    _check_edge(lab, e2)
    i1, j1 = _span(lab, e1)
    i2, j2 = _span(lab, e2)
    return i1 <= i2 and j2 <= j1


@dataclass(frozen=True)
class FreeArcs:
    runs: tuple[tuple[int, ...], ...]
    longest: int


def free_arcs(g: Cgg) -> FreeArcs:
    """All maximal runs of consecutive boundary vertices spanning no edge."""
    n = g.n
    if not g.edges:
        return FreeArcs((g.vertices,), n)
    adj = [set() for _ in range(n)]
    for i, j in g.index_pairs():
        adj[i].add(j)
        adj[j].add(i)
    # length[i]: longest independent run starting at index i, going counterclockwise
    length = []
    for i in range(n):
        run = [i]
        while len(run) < n:
            nxt = (run[-1] + 1) % n
            if adj[nxt].intersection(run):
                break
            run.append(nxt)
        length.append(len(run))
    runs = []
    for i in range(n):
        # maximal unless the run starting one step earlier swallows it
        if length[i - 1] < length[i] + 1:
            runs.append(tuple(g.labelling.label(i + s) for s in range(length[i])))
    return FreeArcs(tuple(runs), max(length))


def is_free_arc(g: Cgg, arc: Iterable[int]) -> bool:
    arc = set(arc)
    return not any(e.a in arc and e.b in arc for e in g.edges)


def direction_counts(g: Cgg) -> dict[int, int]:
    counts = {d: 0 for d in range(g.n)}
    for e in g.edges:
        counts[edge_direction(g.labelling, e)] += 1
    return counts
