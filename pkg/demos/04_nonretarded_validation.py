#!/usr/bin/env python3
"""Checking the closed near-field form against the full wave calculation.

The interaction formulas rest on the instantaneous (nonretarded) Green
function.  Here the full Sommerfeld-integrated transmission Green function
is evaluated on a geometry that shrinks toward the interface; component by
component its ratio to the closed form converges to 1 quadratically in the
retardation parameter.

Equivalent CLI run:  vdw validate --config fig2
"""

import numpy as np

from vdwsurf import (
    AtomPositions,
    HalfSpaceSystem,
    Material,
    nonretarded_green,
    nonretarded_limit_check,
    preset,
    sommerfeld_green,
)

system = HalfSpaceSystem(upper=Material.vacuum(), lower=preset("sapphire-ir"), omega_max=3.0)
omega = 0.5
pos = AtomPositions([0.0, 0.0, 1.0], [1.0, 0.0, -1.0])

# free-space sanity first: matched vacuum, moderate retardation
vac = HalfSpaceSystem(upper=Material.vacuum(), lower=Material.vacuum())
g_ret = sommerfeld_green(vac, omega, pos.scaled(0.1))
g_nr = nonretarded_green(vac, omega, pos.scaled(0.1))
mask = np.abs(g_nr) > 1e-9 * np.max(np.abs(g_nr))
print("matched vacuum at w*R/c ~ 0.1: largest |ratio - 1| =",
      f"{np.max(np.abs(g_ret[mask] / g_nr[mask] - 1.0)):.2e}")
print()

scales = [0.1, 0.01, 0.001]
report = nonretarded_limit_check(system, omega, pos, scales)
print(f"vacuum-sapphire at w = {omega} w_S, shrinking the geometry:")
print("  scale     comp   ratio (re, im)          |ratio-1|")
for row in report.rows:
    print(
        f"  {row.scale:7.3g}   {row.component}   {row.ratio.real:+.8f} {row.ratio.imag:+.2e}"
        f"   {row.deviation:.3e}"
    )
print()
for comp in ("xx", "yy", "zz", "xz", "zx"):
    print(f"  convergence order in scale, {comp}: {report.convergence_order(comp):.3f}")
print()
print(f"pass at 1% on the smallest scale: {report.passed(0.01)}")
