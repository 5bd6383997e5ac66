"""Unit conventions and boundary conversions.

Everything inside the package is expressed in natural units

    hbar = c = 1,   epsilon_0 = 1,

so energies and inverse lengths share one unit and the Coulomb factor
1/(4 pi epsilon_0) reduces to 1/(4 pi).  Dipole-moment squares then carry
dimension [length]^2.

The optional ``eV-nm`` boundary mode (used by the command-line tool) keeps
lengths in nanometres and converts transition energies given in eV to
inverse nanometres through hbar*c.  In that mode dipole-moment squares are
supplied in nm^2 and computed energy shifts come out in 1/nm; multiply by
``HBARC_EV_NM`` to read them in eV.
"""

from __future__ import annotations

# hbar*c in eV*nm (CODATA)
HBARC_EV_NM = 197.3269804

# fine-structure constant (CODATA), exported for the momentum-matrix-element
# conversion helper
FINE_STRUCTURE = 7.2973525693e-3


def ev_to_inv_nm(energy_ev: float) -> float:
    """Convert an energy in eV to an inverse length in 1/nm."""
    return energy_ev / HBARC_EV_NM


def inv_nm_to_ev(energy_inv_nm: float) -> float:
    """Convert an inverse length in 1/nm back to an energy in eV."""
    return energy_inv_nm * HBARC_EV_NM
