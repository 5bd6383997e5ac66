#!/usr/bin/env python3
"""Trapped modes of the slab: dispersion roots and field structure.

Total internal reflection binds discrete modes to the slab.  For each
polarization and parity the script finds every bound wave number at a
fixed transverse momentum, shows how the mode count grows with k_par,
verifies that each root is a pole of the slab reflection coefficient
continued to imaginary normal wave number, and samples one mode's field
to display the evanescent tails.
"""

import numpy as np

from slabshift import Polarization, Slab
from slabshift.modes import (find_trapped_modes, pole_alignment_check,
                             trapped_mode)

slab = Slab(n=2.0, L=1.0)
print(f"slab: n = {slab.n}, L = {slab.L}")
print()

k_par = 6.0
print(f"bound modes at k_par = {k_par}:")
print(f"{'pol':>4} {'parity':>7} {'k_zd':>10} {'kappa':>10} "
      f"{'pole residual':>14}")
for pol in (Polarization.TE, Polarization.TM):
    for parity in ("S", "A"):
        for m in find_trapped_modes(pol, parity, k_par, slab):
            print(f"{pol.value:>4} {parity:>7} {m.k_zd:10.6f} "
                  f"{m.kappa:10.6f} {pole_alignment_check(m, slab):14.2e}")

print()
print("mode count against k_par (TE; S and A alternate as new branches open):")
for k in (0.5, 1.5, 2.5, 4.0, 6.0, 9.0):
    n_s = len(find_trapped_modes(Polarization.TE, "S", k, slab))
    n_a = len(find_trapped_modes(Polarization.TE, "A", k, slab))
    print(f"  k_par={k:5.2f}  S: {n_s}  A: {n_a}")

print()
mode = find_trapped_modes(Polarization.TM, "S", k_par, slab)[0]
field = trapped_mode(mode, slab)
print(f"fundamental TM S mode (k_zd={mode.k_zd:.4f}, kappa={mode.kappa:.4f}):")
print(f"{'z':>7} {'region':>13} {'|E|':>12}")
for z in np.linspace(-1.5, 1.5, 13):
    e = field.field(0.0, 0.0, z)
    print(f"{z:7.3f} {field.region_tag(z):>13} {np.linalg.norm(e):12.5e}")
print()
print(f"outside the slab |E| decays as exp(-kappa z), kappa = {mode.kappa:.4f}")
