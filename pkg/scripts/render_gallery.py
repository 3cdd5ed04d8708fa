#!/usr/bin/env python3
"""Write SVG pictures of one small member of every family to a directory."""
import argparse
from pathlib import Path

from halvedhex import (FAMILIES, QUARTERED_KINDS, ParameterError, Params, build_halved,
                       build_hexagon, build_proctor, build_quartered, build_symmetric, render_svg)

ap = argparse.ArgumentParser()
ap.add_argument("--out", default="gallery")
args = ap.parse_args()
out = Path(args.out)
out.mkdir(parents=True, exist_ok=True)

p = Params(2, 1, 2, (1, 1), (2,))
shapes = {"hexagon": build_hexagon(2, 3, 2), "P": build_proctor("P", 2, 3, 2),
          "Pp": build_proctor("Pp", 2, 3, 2)}
shapes.update({k: build_quartered(k, (2, 1, 2, 2)) for k in QUARTERED_KINDS})
shapes.update({k: build_symmetric(k, Params(2, 2, 1, (1, 1), (2,))) for k in ("S1", "S2")})
for tag in FAMILIES:
    try:
        shapes[tag] = build_halved(tag, p)
    except ParameterError as e:
        print(f"skip {tag}: {e}")
for name, region in shapes.items():
    (out / f"{name}.svg").write_text(render_svg(region))
print(f"wrote {len(shapes)} files to {out}")
