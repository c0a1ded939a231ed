#!/usr/bin/env python3
"""Regenerate src/lebedev_tables.cpp from scipy's Lebedev rules.

The library ships frozen tables so the C++ build has no Python dependency.
Run from the repo root:  python3 scripts/gen_lebedev_tables.py
"""
import math
import pathlib

import numpy as np
from scipy.integrate import lebedev_rule

# degree -> point count: 3->6, 7->26, 23->194, 89->2702
DEGREES = [3, 7, 23, 89]

OUT = pathlib.Path(__file__).resolve().parent.parent / "src" / "lebedev_tables.cpp"


def main() -> None:
    chunks = [
        "// Lebedev quadrature tables (unit sphere, weights scaled to sum to 4*pi).",
        "// Generated by scripts/gen_lebedev_tables.py; do not edit by hand.",
        "",
        '#include "ambiarray/grids.hpp"',
        "",
        "namespace ambiarray::detail {",
        "",
    ]
    sizes = []
    for deg in DEGREES:
        pts, w = lebedev_rule(deg)
        x, y, z = pts
        n = x.size
        sizes.append(n)
        w = w * (4.0 * math.pi / np.sum(w))
        theta = np.arccos(np.clip(z, -1.0, 1.0))
        phi = np.arctan2(y, x)
        chunks.append(f"const LebedevPoint kLebedev{n}[{n}] = {{")
        for t, p, ww in zip(theta, phi, w):
            chunks.append(f"    {{{float(t)!r}, {float(p)!r}, {float(ww)!r}}},")
        chunks.append("};")
        chunks.append("")
    chunks.append("}  // namespace ambiarray::detail")
    chunks.append("")
    OUT.write_text("\n".join(chunks))
    print(f"wrote {OUT} with rules: {sizes}")


if __name__ == "__main__":
    main()
