#!/usr/bin/env python3
"""The off-resonant (imaginary-frequency) part and its London limit.

For two ground-state-model atoms in free space the imaginary-frequency
integral has the classic closed form

    U = -(3 hbar / pi R^6) alpha_A(0) alpha_B(0) (pi/2) wA wB/(wA + wB),

which the package quadrature reproduces to near machine precision.  Near
the interface resonance the same integral is negligible against the
resonant part, which is why the spectra elsewhere keep only the latter.
"""

import numpy as np

from vdwsurf import Atom, HalfSpaceSystem, Material, offresonant_potential, preset, resonant_potential

vac = HalfSpaceSystem(upper=Material.vacuum(), lower=Material.vacuum())

print("free space vs the London closed form (units of U0):")
print("      wA     wB      quadrature          closed form        rel err")
rng = np.random.default_rng(1)
for _ in range(5):
    wa, wb = rng.uniform(0.3, 2.5, size=2)
    a = Atom(omega0=wa, alpha0=1.0, dipole_weight=1.0)
    b = Atom(omega0=wb, alpha0=1.0)
    u = offresonant_potential(vac, a, b)
    # -(3 hbar/pi)(pi/2) wA wB/(wA+wB) alpha_A0 alpha_B0, over U0 = 2 dA alpha_B0
    london = -0.75 * wa * wb / (wa + wb)
    print(f"  {wa:6.3f} {wb:6.3f}   {u:+.12f}   {london:+.12f}   {abs(u/london-1):.1e}")

print()
system = HalfSpaceSystem(upper=Material.vacuum(), lower=preset("sapphire-ir"), omega_max=3.0)
atom_a = Atom(omega0=1.0)
atom_b = Atom(omega0=0.9, gamma=1e-3)
res = resonant_potential(system, atom_a, atom_b)
u_or = offresonant_potential(system, atom_a, atom_b)
print("vacuum-sapphire with the excited atom at the surface mode:")
print(f"  resonant part     U^r /U0 = {res.u_resonant:+12.2f}")
print(f"  off-resonant part U^or/U0 = {u_or:+12.6f}   ({abs(u_or/res.u_resonant):.1e} of U^r)")
print()
print("an excited-state sign convention for atom A is available via")
print("Atom(offres_sign=-1), which flips the off-resonant contribution:")
flipped = offresonant_potential(system, Atom(omega0=1.0, offres_sign=-1.0), atom_b)
print(f"  ground-like {u_or:+.6f}   excited convention {flipped:+.6f}")
