"""Electromagnetic field modes of the dielectric slab.

Travelling modes are incident/reflected/transmitted plane-wave solutions
with real vacuum wave numbers; trapped modes are discrete solutions bound
by total internal reflection, oscillatory inside the slab and evanescent
(e^{-kappa |z|}) outside.  Every mode is the product of a polarization
vector and a piecewise scalar function; the momentum-space polarization
vectors are

    e_TE(k) = (k_y, -k_x, 0) / k_par,
    e_TM(k) = (k_x k_z, k_y k_z, -k_par^2) / (n_med * omega * k_par),

applied per plane-wave piece with that piece's wave vector and medium.
For trapped modes k_z = +-i*kappa outside the slab, so e_TM is complex and
deliberately not renormalized to unit length: the printed normalization
constants M_TE, M_TM assume the vectors exactly as written.

Trapped-mode wave numbers solve the transcendental dispersion relations

    kappa =  k_zd tan(k_zd L/2)          symmetric scalar part (S), TE
    kappa = -k_zd cot(k_zd L/2)          antisymmetric (A), TE
    kappa =  k_zd tan(k_zd L/2) / n^2    symmetric (S), TM
    kappa = -k_zd cot(k_zd L/2) / n^2    antisymmetric (A), TM

with kappa = sqrt((n^2-1) k_par^2 - k_zd^2) / n, pairing each parity with
the branch that the interface continuity conditions actually select (the
S/A label refers to the parity of the scalar part under z -> -z).  The
left side of each relation decreases and the right side increases along
every tan/cot branch, so each branch holds at most one root and plain
bisection between branch edges is complete and unconditionally robust.

Wave vectors are taken in the x-z plane (k_par along x); fields for any
other azimuth follow by rotation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import Slab
from .errors import PoleError
from .reflection import Polarization, WaveVectors, slab_denominator, snell_kzd

__all__ = [
    "TrappedMode",
    "PlaneWaveTerm",
    "RegionPiece",
    "ModeField",
    "dispersion_mismatch",
    "find_trapped_modes",
    "pole_alignment_check",
    "travelling_mode",
    "trapped_mode",
]

MODE_NORMALIZATION = (2.0 * math.pi) ** -1.5  # travelling-mode prefactor

_REGION_TAGS = ("left_vacuum", "slab", "right_vacuum")


@dataclass(frozen=True)
class TrappedMode:
    """One root of a slab dispersion relation."""

    pol: Polarization
    parity: str  # "S" | "A" (parity of the scalar part)
    k_par: float
    k_zd: float
    kappa: float
    residual: float


def _kappa_of_kzd(k_zd: float, k_par: float, n: float) -> float:
    arg = (n * n - 1.0) * k_par * k_par - k_zd * k_zd
    return math.sqrt(max(arg, 0.0)) / n


def _dispersion_rhs(pol: Polarization, parity: str, k_zd: float, L: float,
                    n: float) -> float:
    theta = 0.5 * k_zd * L
    if parity == "S":
        rhs = k_zd * math.tan(theta)
    else:
        rhs = -k_zd / math.tan(theta)
    if pol is Polarization.TM:
        rhs /= n * n
    return rhs


def dispersion_mismatch(pol: Polarization, parity: str, k_zd, k_par: float,
                        slab: Slab):
    """kappa(k_zd) - rhs(k_zd); zero exactly on a trapped mode.

    Vectorized over ``k_zd`` for scanning.
    """
    k_zd = np.asarray(k_zd, dtype=float)
    n = slab.n
    kappa = np.sqrt(np.maximum((n * n - 1.0) * k_par * k_par - k_zd ** 2,
                               0.0)) / n
    theta = 0.5 * k_zd * slab.L
    if parity == "S":
        rhs = k_zd * np.tan(theta)
    elif parity == "A":
        rhs = -k_zd / np.tan(theta)
    else:
        raise ValueError(f"parity must be 'S' or 'A', got {parity!r}")
    if pol is Polarization.TM:
        rhs = rhs / (n * n)
    return kappa - rhs


def _branch_starts(parity: str, theta_max: float) -> list[float]:
    """Branch-opening angles below theta_max (tan branches for S, cot for A)."""
    starts = []
    offset = 0.0 if parity == "S" else 0.5 * math.pi
    m = 0
    while True:
        theta = offset + m * math.pi
        if theta >= theta_max:
            return starts
        starts.append(theta)
        m += 1


def find_trapped_modes(pol: Polarization, parity: str, k_par: float,
                       slab: Slab) -> list[TrappedMode]:
    """All trapped modes of one polarization/parity at fixed k_par.

    Returns the complete, ascending-in-k_zd list of roots in
    (0, sqrt(n^2-1) k_par); the list is empty below cutoff.
    """
    if parity not in ("S", "A"):
        raise ValueError(f"parity must be 'S' or 'A', got {parity!r}")
    if not k_par > 0.0:
        raise ValueError(f"k_par must be positive, got {k_par}")
    n, L = slab.n, slab.L
    if n == 1.0 or L == 0.0 or math.isinf(L):
        return []
    k_zd_max = math.sqrt(n * n - 1.0) * k_par
    theta_max = 0.5 * k_zd_max * L
    kappa0 = k_zd_max / n

    modes = []
    for theta_start in _branch_starts(parity, theta_max):
        theta_end = min(theta_start + 0.5 * math.pi, theta_max)
        lo = (2.0 * theta_start / L) if theta_start > 0.0 else 0.0
        hi = 2.0 * theta_end / L
        # nudge off the branch edges where tan/cot are singular or zero
        eps = 1e-12 * (hi - lo) + 1e-300
        lo += eps
        hi -= eps if theta_end < theta_max else 0.0
        hi = min(hi, k_zd_max)
        if not hi > lo:
            continue

        def g(x: float) -> float:
            return _kappa_of_kzd(x, k_par, n) - _dispersion_rhs(pol, parity,
                                                                x, L, n)

        g_lo, g_hi = g(lo), g(hi)
        if not (g_lo > 0.0 and g_hi < 0.0):
            # no crossing on this branch (root lies beyond cutoff)
            continue
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if mid == lo or mid == hi:
                break
            if g(mid) > 0.0:
                lo = mid
            else:
                hi = mid
            if hi - lo <= 1e-15 * hi:
                break
        root = 0.5 * (lo + hi)
        kappa = _kappa_of_kzd(root, k_par, n)
        rhs = _dispersion_rhs(pol, parity, root, L, n)
        residual = abs(kappa - rhs) / max(kappa, abs(rhs), kappa0)
        modes.append(TrappedMode(pol=pol, parity=parity, k_par=k_par,
                                 k_zd=root, kappa=kappa, residual=residual))
    return modes


def pole_alignment_check(mode: TrappedMode, slab: Slab) -> float:
    """Scaled distance of the slab_R denominator from zero at k_z = i*kappa.

    Returns |D| / (|dD/dk_z| * kappa), a relative measure of how far the
    dispersion root sits from the reflection-coefficient pole; a true root
    scores at the root-refinement level (~1e-12).
    """
    k_z = 1j * mode.kappa
    d0 = slab_denominator(mode.pol, k_z, mode.k_par, slab.L, slab.n)
    h = 1e-6 * mode.kappa
    d_plus = slab_denominator(mode.pol, 1j * (mode.kappa + h), mode.k_par,
                              slab.L, slab.n)
    d_minus = slab_denominator(mode.pol, 1j * (mode.kappa - h), mode.k_par,
                               slab.L, slab.n)
    grad = abs(d_plus - d_minus) / (2.0 * h)
    return abs(d0) / (grad * mode.kappa)


@dataclass(frozen=True)
class PlaneWaveTerm:
    """One plane-wave piece: amplitude * polarization * exp(i k.r)."""

    amplitude: complex
    wavevector: tuple[complex, complex, complex]
    polarization: tuple[complex, complex, complex]


@dataclass(frozen=True)
class RegionPiece:
    tag: str
    terms: tuple[PlaneWaveTerm, ...]


@dataclass(frozen=True)
class ModeField:
    """Piecewise plane-wave electric mode function of the slab geometry."""

    slab: Slab
    regions: tuple[RegionPiece, ...]  # (left_vacuum, slab, right_vacuum)

    def region_tag(self, z: float) -> str:
        return self.regions[self._region_index(z)].tag

    def _region_index(self, z: float) -> int:
        half = 0.5 * self.slab.L
        if z < -half:
            return 0
        if z > half:
            return 2
        return 1

    def field(self, x: float, y: float, z: float) -> np.ndarray:
        """Complex electric mode vector at a point (region chosen by z)."""
        return self._eval(self._region_index(z), x, y, z)

    def field_in(self, tag: str, x: float, y: float, z: float) -> np.ndarray:
        """Evaluate one region's expansion regardless of z (for limits
        toward an interface)."""
        return self._eval(_REGION_TAGS.index(tag), x, y, z)

    def scalar(self, x: float, y: float, z: float) -> complex:
        """Scalar part of the mode (polarization vectors stripped)."""
        return self._eval_scalar(self._region_index(z), x, y, z)

    def scalar_in(self, tag: str, x: float, y: float, z: float) -> complex:
        return self._eval_scalar(_REGION_TAGS.index(tag), x, y, z)

    def curl_in(self, tag: str, x: float, y: float, z: float) -> np.ndarray:
        """Analytic curl of the region expansion: sum c (i k x e) exp(i k.r)."""
        out = np.zeros(3, dtype=complex)
        for term in self.regions[_REGION_TAGS.index(tag)].terms:
            k = np.asarray(term.wavevector, dtype=complex)
            e = np.asarray(term.polarization, dtype=complex)
            phase = cmath.exp(1j * (k[0] * x + k[1] * y + k[2] * z))
            out += term.amplitude * phase * 1j * np.cross(k, e)
        return out

    def _eval(self, idx: int, x: float, y: float, z: float) -> np.ndarray:
        out = np.zeros(3, dtype=complex)
        for term in self.regions[idx].terms:
            k = term.wavevector
            phase = cmath.exp(1j * (k[0] * x + k[1] * y + k[2] * z))
            out += (term.amplitude * phase) * np.asarray(term.polarization,
                                                         dtype=complex)
        return out

    def _eval_scalar(self, idx: int, x: float, y: float, z: float) -> complex:
        out = 0.0 + 0.0j
        for term in self.regions[idx].terms:
            k = term.wavevector
            out += term.amplitude * cmath.exp(
                1j * (k[0] * x + k[1] * y + k[2] * z))
        return out


def _pol_vector(pol: Polarization, k_par: float, kz_component: complex,
                n_medium: float, omega: complex) -> tuple[complex, complex, complex]:
    # transverse direction fixed along x; (1, 0) is the k_par -> 0 limit
    if pol is Polarization.TE:
        return (0.0, -1.0, 0.0)
    return (kz_component / (n_medium * omega), 0.0,
            -k_par / (n_medium * omega))


def _travelling_coefficients(pol: Polarization, k_z: float, k_par: float,
                             L: float, n: float):
    """(R, I, J, T) from the 4x4 interface continuity system."""
    k_zd = complex(snell_kzd(k_par, k_z, n))
    a = cmath.exp(-0.5j * k_z * L)
    b = cmath.exp(+0.5j * k_z * L)
    c = cmath.exp(-0.5j * k_zd * L)
    d = cmath.exp(+0.5j * k_zd * L)
    if pol is Polarization.TE:
        # tangential E (scalar) and tangential B (scalar derivative)
        mat = np.array([
            [-b, c, d, 0.0],
            [k_z * b, k_zd * c, -k_zd * d, 0.0],
            [0.0, d, c, -b],
            [0.0, k_zd * d, -k_zd * c, -k_z * b],
        ], dtype=complex)
        rhs = np.array([a, k_z * a, 0.0, 0.0], dtype=complex)
    else:
        # tangential E and normal D
        mat = np.array([
            [k_z * b, (k_zd / n) * c, -(k_zd / n) * d, 0.0],
            [-b, n * c, n * d, 0.0],
            [0.0, (k_zd / n) * d, -(k_zd / n) * c, -k_z * b],
            [0.0, n * d, n * c, -b],
        ], dtype=complex)
        rhs = np.array([k_z * a, a, 0.0, 0.0], dtype=complex)
    try:
        R, I, J, T = np.linalg.solve(mat, rhs)
    except np.linalg.LinAlgError:
        raise PoleError("interface system is singular (pole proximity)",
                        k_z=k_z, k_par=k_par) from None
    return R, I, J, T, k_zd


def travelling_mode(side: str, pol: Polarization, k: WaveVectors,
                    slab: Slab) -> ModeField:
    """Left- or right-incident travelling mode (side "L" or "R").

    Requires a propagating vacuum wave: real k_z > 0.
    """
    if side not in ("L", "R"):
        raise ValueError(f"side must be 'L' or 'R', got {side!r}")
    k_z = complex(k.k_z)
    if k_z.imag != 0.0 or not k_z.real > 0.0:
        raise ValueError("travelling modes need real k_z > 0")
    k_z = k_z.real
    k_par, n, L = k.k_par, slab.n, slab.L
    R, I, J, T, k_zd = _travelling_coefficients(pol, k_z, k_par, L, n)
    if not np.isfinite([abs(R), abs(I), abs(J), abs(T)]).all():
        raise PoleError("travelling-mode coefficients diverge (pole proximity)",
                        k_z=k_z, k_par=k_par)
    omega = math.sqrt(k_par * k_par + k_z * k_z)
    N = MODE_NORMALIZATION

    def vac(kz_comp):
        return _pol_vector(pol, k_par, kz_comp, 1.0, omega)

    def diel(kz_comp):
        return _pol_vector(pol, k_par, kz_comp, n, omega)

    def term(amplitude, kz_comp, pol_vec):
        return PlaneWaveTerm(amplitude=amplitude,
                             wavevector=(k_par, 0.0, kz_comp),
                             polarization=pol_vec)

    if side == "L":
        left = RegionPiece("left_vacuum", (
            term(N, k_z, vac(k_z)),
            term(N * R, -k_z, vac(-k_z)),
        ))
        mid = RegionPiece("slab", (
            term(N * I, k_zd, diel(k_zd)),
            term(N * J, -k_zd, diel(-k_zd)),
        ))
        right = RegionPiece("right_vacuum", (term(N * T, k_z, vac(k_z)),))
    else:
        left = RegionPiece("left_vacuum", (term(N * T, -k_z, vac(-k_z)),))
        mid = RegionPiece("slab", (
            term(N * I, -k_zd, diel(-k_zd)),
            term(N * J, k_zd, diel(k_zd)),
        ))
        right = RegionPiece("right_vacuum", (
            term(N, -k_z, vac(-k_z)),
            term(N * R, k_z, vac(k_z)),
        ))
    return ModeField(slab=slab, regions=(left, mid, right))


def trapped_mode(mode: TrappedMode, slab: Slab) -> ModeField:
    """Field of one trapped mode, built from the printed coefficients.

    Inside: e^{i k_d+ . r} +- e^{i k_d- . r} (S/A); outside: evanescent
    tails with the interface coefficients

        L_TE^S = 2 cos(k_zd L/2) e^{kappa L/2},
        L_TE^A = 2 i sin(k_zd L/2) e^{kappa L/2},
        L_TM^{S,A} = n * L_TE^{S,A},

    all scaled by the normalization constants M_TE, M_TM.
    """
    n, L = slab.n, slab.L
    k_par, k_zd, kappa = mode.k_par, mode.k_zd, mode.kappa
    theta = 0.5 * k_zd * L
    omega = math.sqrt(k_par * k_par + k_zd * k_zd) / n
    sgn = 1.0 if mode.parity == "S" else -1.0

    if mode.parity == "S":
        L_coef = 2.0 * math.cos(theta) * math.exp(0.5 * kappa * L)
    else:
        L_coef = 2.0j * math.sin(theta) * math.exp(0.5 * kappa * L)
    if mode.pol is Polarization.TM:
        L_coef = n * L_coef

    if mode.pol is Polarization.TE:
        M = 1.0 / (4.0 * math.pi * math.sqrt(
            n * n * L / 2.0 + (k_par / omega) ** 2 / kappa))
    else:
        M = 1.0 / (4.0 * math.pi * math.sqrt(
            n * n * L / 2.0
            + n * n * k_par * k_par / (kappa * (k_par * k_par
                                                + n * n * kappa * kappa))))

    def term(amplitude, kz_comp, n_medium):
        return PlaneWaveTerm(
            amplitude=amplitude,
            wavevector=(k_par, 0.0, kz_comp),
            polarization=_pol_vector(mode.pol, k_par, kz_comp, n_medium,
                                     omega))

    left = RegionPiece("left_vacuum",
                       (term(M * sgn * L_coef, -1j * kappa, 1.0),))
    mid = RegionPiece("slab", (
        term(M, k_zd, n),
        term(M * sgn, -k_zd, n),
    ))
    right = RegionPiece("right_vacuum",
                        (term(M * L_coef, 1j * kappa, 1.0),))
    return ModeField(slab=slab, regions=(left, mid, right))
