"""
Uppersets and downsets on the triangle
======================================

Every lattice cell is coloured by how it relates to a fixed base point:
red above, blue below, white incomparable.
"""

import sys
from pathlib import Path

from infoorder import Bayesian, LownerPlus, Restricted, RestrictedParams
from infoorder.scan import region_scan, to_svg

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(exist_ok=True)
base = [0.5, 1 / 3, 1 / 6]

specs = {
    "lowner_plus": LownerPlus(),
    "restricted_low": Restricted(RestrictedParams.build(3, -0.4, [0.25])),
    "bayesian": Bayesian(),
    "restricted_high": Restricted(RestrictedParams.build(3, 10.0, [10.0])),
}
for name, spec in specs.items():
    grid = region_scan(spec, base, 120)
    (out / f"scan_{name}.svg").write_text(to_svg(grid))
    print(f"{name:>16}: {grid.counts()}")

# larger parameters give larger regions
low, mid, high = (region_scan(specs[k], base, 120).cells("up") for k in ("restricted_low", "bayesian", "restricted_high"))
print("uppersets nested:", low <= mid <= high)
