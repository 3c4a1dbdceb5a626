"""
Drawing the graphs
==================

Vertices sit on every other corner of a regular 2n-gon.  Isolated vertices are
drawn red; for the constructions the edge styles mark which chords are new.
"""

from pathlib import Path

from cgg import construct_gnk, construct_gnkl, serialize
from cgg.render import render_dot, render_svg, styling_from_meta

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

g = construct_gnk(12, 3)
meta = {"construction": "Gnk", "k": 3, "q": 6}
(out / "gnk_12_3.svg").write_text(render_svg(g, **styling_from_meta(g, meta), title="G_{12,3}"))
(out / "gnk_12_3.json").write_text(serialize(g, meta))

h = construct_gnkl(13, 3, 2)
meta = {"construction": "Gnkl", "k": 3, "ell": 2, "q": 9}
(out / "gnkl_13_3_2.svg").write_text(render_svg(h, **styling_from_meta(h, meta)))

# DOT keeps the polygon layout: neato -n2 -Tpng gnk_10_2.dot
(out / "gnk_10_2.dot").write_text(render_dot(construct_gnk(10, 2)))
print("wrote", sorted(p.name for p in out.iterdir()))
