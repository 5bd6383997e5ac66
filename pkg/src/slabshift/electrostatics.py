"""Electrostatic image-charge treatment of the non-retarded shift.

For source and field points on the same side of the slab (z, z' > L/2) the
harmonic part of the unit-charge potential is a geometric series of image
charges generated by repeated reflections between the two interfaces:

    Phi_H = -(beta / 4 pi) sum_{m>=0} beta^{2m}
            [ 1/sqrt(rho^2 + (z+z'-L+2mL)^2)
              - 1/sqrt(rho^2 + (z+z'+L+2mL)^2) ],

with beta = (n^2-1)/(n^2+1).  Contracting the mixed second derivatives of
Phi_H with the dipole fluctuations at the atom's position gives the
non-retarded shift in closed form,

    Delta E = -(beta / 64 pi) sum_j (2 |mu_perp|^2 + |mu_par|^2)
              sum_{m>=0} beta^{2m} [ 1/(Z+mL)^3 - 1/(Z+(m+1)L)^3 ],

which doubles as the exact oracle for the non-retarded quadrature route.
The derivatives are carried out analytically term by term (each term is an
inverse distance); the finite-difference evaluation is kept in the test
suite only.

Truncation uses the exact geometric-tail majorant
beta^{2(M+1)} * b_{M+1} / (1 - beta^2), valid because the bracketed terms
b_m decrease with m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import AtomSpec, EnergyShift, Slab
from .errors import ConvergenceError

__all__ = ["ImageSeriesSpec", "phi_H", "image_series_shift"]


@dataclass(frozen=True)
class ImageSeriesSpec:
    """Truncation control for the image series."""

    tail_tol: float = 1e-14
    max_terms: int = 10 ** 6

    def __post_init__(self):
        if not self.tail_tol > 0.0:
            raise ValueError("tail_tol must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be at least 1")


def _beta(n: float) -> float:
    return (n * n - 1.0) / (n * n + 1.0)


def phi_H(rho: float, z: float, z_prime: float, slab: Slab,
          spec: ImageSeriesSpec | None = None) -> float:
    """Harmonic part of the unit-charge potential for z, z' > L/2."""
    spec = spec or ImageSeriesSpec()
    if rho < 0.0:
        raise ValueError(f"transverse separation must be non-negative, got {rho}")
    if not (z > slab.L / 2.0 and z_prime > slab.L / 2.0):
        raise ValueError("phi_H requires both heights above the near surface "
                         "(z, z' > L/2)")
    if slab.n == 1.0:
        return 0.0
    beta = _beta(slab.n)
    beta2 = beta * beta
    a0 = z + z_prime - slab.L
    L = slab.L
    total = 0.0
    weight = 1.0  # beta^(2m)
    for m in range(spec.max_terms):
        d_near = a0 + 2.0 * m * L
        d_far = a0 + 2.0 * (m + 1) * L
        total += weight * (1.0 / math.hypot(rho, d_near)
                           - 1.0 / math.hypot(rho, d_far))
        weight *= beta2
        next_bracket = (1.0 / math.hypot(rho, a0 + 2.0 * (m + 1) * L)
                        - 1.0 / math.hypot(rho, a0 + 2.0 * (m + 2) * L))
        tail = weight * next_bracket / (1.0 - beta2)
        if tail <= spec.tail_tol * abs(total):
            return -beta / (4.0 * math.pi) * total
    raise ConvergenceError(
        f"image series for phi_H did not converge within {spec.max_terms} terms",
        estimate=-beta / (4.0 * math.pi) * total)


def image_series_shift(atom: AtomSpec, slab: Slab, Z: float,
                       spec: ImageSeriesSpec | None = None) -> EnergyShift:
    """Non-retarded shift from the closed-form image series."""
    spec = spec or ImageSeriesSpec()
    if not Z > 0.0:
        raise ValueError(f"atom-surface distance must be positive, got {Z}")
    if slab.n == 1.0:
        return EnergyShift.from_contributions([0.0] * len(atom.transitions))
    beta = _beta(slab.n)
    dipole_sum = math.fsum(2.0 * tr.mu_perp_sq + tr.mu_par_sq
                           for tr in atom.transitions)
    try:
        series = _distance_series(Z, slab.L, beta, spec)
    except ConvergenceError as exc:
        partial = -beta / (64.0 * math.pi) * (exc.estimate or 0.0) * dipole_sum
        raise ConvergenceError(str(exc), estimate=partial) from None
    pref = -beta / (64.0 * math.pi) * series
    contribs = [pref * (2.0 * tr.mu_perp_sq + tr.mu_par_sq)
                for tr in atom.transitions]
    return EnergyShift.from_contributions(contribs)


def _distance_series(Z: float, L: float, beta: float,
                     spec: ImageSeriesSpec) -> float:
    """sum_m beta^(2m) [1/(Z+mL)^3 - 1/(Z+(m+1)L)^3], tail-bounded."""
    if L == 0.0:
        return 0.0
    if math.isinf(L):
        return 1.0 / Z ** 3
    beta2 = beta * beta
    total = 0.0
    weight = 1.0
    for m in range(spec.max_terms):
        total += weight * (1.0 / (Z + m * L) ** 3 - 1.0 / (Z + (m + 1) * L) ** 3)
        weight *= beta2
        next_bracket = (1.0 / (Z + (m + 1) * L) ** 3
                        - 1.0 / (Z + (m + 2) * L) ** 3)
        tail = weight * next_bracket / (1.0 - beta2)
        if tail <= spec.tail_tol * abs(total):
            return total
    raise ConvergenceError(
        f"image series did not converge within {spec.max_terms} terms",
        estimate=total)
