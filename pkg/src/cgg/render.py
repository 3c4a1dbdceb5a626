"""SVG and DOT export on the regular ``2n``-gon layout.

Corner ``p`` sits at angle ``pi * p / n``: label 0 on the right, label ``n``
on the left, positive labels on top.  Coordinates are rounded to two decimals
so output is byte-stable.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping

from .constructions import ConstructionSpec, canonical_arc, gnk_edge_classes, gnkl_edge_classes
from .core import Cgg, Edge
from .errors import CggError

EDGE_STYLES = {
    "ordinary": 'stroke="#222" stroke-width="1"',
    "bold": 'stroke="#222" stroke-width="2.6"',
    "dashed": 'stroke="#222" stroke-width="1.2" stroke-dasharray="5,3"',
    "dotted": 'stroke="#222" stroke-width="1.2" stroke-dasharray="1.5,2.5"',
}


def _fmt(v: float) -> str:
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


def corner_xy(n: int, p: int, radius: float, cx: float, cy: float) -> tuple[float, float]:
    a = math.pi * p / n
    return cx + radius * math.cos(a), cy - radius * math.sin(a)


def render_svg(
    g: Cgg,
    *,
    edge_classes: Mapping[Edge, str] | None = None,
    extra_edges: Iterable[Edge] = (),
    avoided: Iterable[int] = (),
    size: int = 420,
    title: str | None = None,
) -> str:
    """Draw ``g`` with its polygon, vertex labels and edges.

    ``edge_classes`` maps edges to a key of EDGE_STYLES (missing edges are
    ordinary); ``extra_edges`` are drawn dashed without belonging to the
    graph; ``avoided`` labels are drawn red and underlined.
    """
    n = g.n
    classes = dict(edge_classes or {})
    avoided = set(avoided)
    c = size / 2
    r = size / 2 - 36
    pt = {p: corner_xy(n, p, r, c, c) for p in range(-n + 1, n + 1)}
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
    ]
    if title:
        out.append(f"<title>{title}</title>")
    poly = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (pt[p] for p in range(-n + 1, n + 1)))
    out.append(f'<polygon points="{poly}" fill="none" stroke="#bbb" stroke-width="0.8"/>')
    out.append('<g class="edges" stroke-linecap="round">')
    drawn = [(e, classes.get(e, "ordinary")) for e in g.sorted_edges()]
    drawn += [(e, "dashed") for e in sorted(set(extra_edges) - g.edges)]
    for e, cls in drawn:
        (x1, y1), (x2, y2) = pt[e.a], pt[e.b]
        out.append(
            f'<line class="{cls}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f"{EDGE_STYLES[cls]}/>"
        )
    out.append("</g>")
    out.append('<g class="vertices" font-family="sans-serif" font-size="11" text-anchor="middle">')
    for p in g.vertices:
        x, y = pt[p]
        lx, ly = corner_xy(n, p, r + 18, c, c)
        colour = "#c00" if p in avoided else "#000"
        deco = ' text-decoration="underline"' if p in avoided else ""
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="{colour}"/>')
        out.append(
            f'<text x="{_fmt(lx)}" y="{_fmt(ly + 4)}" fill="{colour}"{deco}>{p}</text>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_dot(
    g: Cgg,
    *,
    edge_classes: Mapping[Edge, str] | None = None,
    avoided: Iterable[int] = (),
    scale: float = 3.0,
) -> str:
    """Undirected DOT graph with pinned node positions (use ``neato -n``)."""
    classes = dict(edge_classes or {})
    avoided = set(avoided)
    styles = {"ordinary": "solid", "bold": "bold", "dashed": "dashed", "dotted": "dotted"}
    lines = [f'graph "cgg_{g.n}" {{', "  node [shape=circle, width=0.3, fontsize=10];"]
    for p in g.vertices:
        x, y = corner_xy(g.n, p, scale, 0.0, 0.0)
        colour = ", color=red, fontcolor=red" if p in avoided else ""
        lines.append(f'  "{p}" [label="{p}", pos="{_fmt(x)},{_fmt(-y)}!"{colour}];')
    for e in g.sorted_edges():
        style = styles[classes.get(e, "ordinary")]
        lines.append(f'  "{e.a}" -- "{e.b}" [style={style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def styling_from_meta(g: Cgg, meta: Mapping | None) -> dict:
    """Figure styling keyword arguments derived from construction metadata.

    Plain graphs (no recognised ``construction``) render uniformly.
    """
    meta = dict(meta or {})
    try:
        return _styling(g, meta)
    except (CggError, KeyError, TypeError):
        return {}


def _styling(g: Cgg, meta: dict) -> dict:
    kind = meta.get("construction")
    n, k = g.n, meta.get("k")
    if kind == "Gnk":
        return {"edge_classes": gnk_edge_classes(n, k), "avoided": ConstructionSpec(n, k).free_arc}
    if kind == "Gnkl":
        ell = meta["ell"]
        classes, dropped = gnkl_edge_classes(n, k, ell)
        return {"edge_classes": classes, "extra_edges": dropped,
                "avoided": ConstructionSpec(n, k, ell).free_arc}
    if kind == "star":
        return {"avoided": canonical_arc(n, meta["q"])[1]}
    return {}
