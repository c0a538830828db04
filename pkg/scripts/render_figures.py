"""Write SVG fans and anticanonical polytopes for P2, P1xP1 and F1."""
import sys
from pathlib import Path

from toricample import catalog
from toricample.polytope import anticanonical
from toricample.svg import render_svg

out = Path(sys.argv[1] if len(sys.argv) > 1 else "figures")
out.mkdir(parents=True, exist_ok=True)
for name, fan in catalog.golden_fans().items():
    (out / f"fan_{name}.svg").write_text(render_svg(fan))
    (out / f"polytope_{name}.svg").write_text(render_svg(fan, anticanonical(fan)))
    print(f"wrote {out}/fan_{name}.svg, {out}/polytope_{name}.svg")
