"""Two-atom interaction across the interface.

Outputs are dimensionless: potentials are in units of
U0 = 2*|d_A|^2*alpha_B(0)/R^6, the magnitude of the free-space near-field
value, and hbar = 1 in the imaginary-frequency integral (see
``HBAR_REDUCED``).  The excited atom A sits in the upper medium, the
ground-state atom B in the lower one.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, SingularityError, UnsupportedModelError, ValidityWarning
from .greens import AtomPositions
from .materials import (
    HalfSpaceSystem,
    Material,
    MaterialKind,
    local_field_factor,
    surface_mode_frequency,
)
from .quadrature import QuadratureSpec, adaptive_gauss

#: Reduced Planck constant of the unit system.  Absorbed here (and only
#: here) so that the vacuum-vacuum off-resonant potential reproduces the
#: London integral with the same U0 normalization as the resonant part.
HBAR_REDUCED = 1.0


@dataclass(frozen=True)
class Atom:
    """Isotropic two-level atom.

    ``omega0``/``gamma`` are the transition frequency and linewidth,
    ``alpha0`` the static polarizability and ``dipole_weight`` the squared
    dipole matrix element stand-in, all in reduced units.  ``offres_sign``
    switches the sign convention of this atom's imaginary-axis response when
    it plays the excited role in the off-resonant integral (ground-like by
    default; the excited-state convention uses -1).
    """

    omega0: float
    gamma: float = 0.0
    alpha0: float = 1.0
    dipole_weight: float = 1.0
    offres_sign: float = 1.0

    def __post_init__(self):
        if not (self.omega0 > 0.0):
            raise ParameterError(f"transition frequency must be positive, got {self.omega0}")
        if not (self.gamma >= 0.0):
            raise ParameterError(f"linewidth must be >= 0, got {self.gamma}")
        if not (self.alpha0 > 0.0):
            raise ParameterError(f"static polarizability must be positive, got {self.alpha0}")
        if not (self.dipole_weight > 0.0):
            raise ParameterError(f"dipole weight must be positive, got {self.dipole_weight}")


@dataclass(frozen=True)
class PotentialResult:
    """Resonant interaction potential in units of U0, with its enhancement.

    ``g`` is the interface enhancement over free space including the local
    field, ``g_no_localfield`` the same with both Onsager factors removed.
    ``u_offresonant`` is filled only when the imaginary-axis part was
    requested alongside.
    """

    u_resonant: float
    g: float
    g_no_localfield: float
    u_offresonant: float | None = None


def polarizability(atom: Atom, omega) -> complex:
    """Single-resonance polarizability alpha0*w0^2/(w0^2 - w^2 - i*w*gamma).

    Real on the positive imaginary axis.  An undamped atom evaluated at its
    own transition raises SingularityError.
    """
    w = complex(omega)
    w02 = atom.omega0 * atom.omega0
    den = w02 - w * w - 1j * w * atom.gamma
    if abs(den) <= 1e-12 * w02:
        raise SingularityError(f"undamped polarizability pole at omega = {omega!r}")
    return atom.alpha0 * w02 / den


def enhancement_factor(system: HalfSpaceSystem, omega_a: float):
    """Interface enhancement of the near-field interaction over free space.

    Returns ``(g, g_no_localfield)`` evaluated at the excited atom's
    transition frequency:

        g      = |18 e e_m / ((e + e_m)(2e + 1)(2e_m + 1))|^2
        g_nolf = |2 / (e + e_m)|^2

    i.e. the squared magnitude of the screened near-field coupling with and
    without the two Onsager cavity factors.
    """
    if not (omega_a > 0.0):
        raise ParameterError(f"omega_a must be positive, got {omega_a}")
    e_u = system.upper.eps(omega_a)
    e_l = system.lower.eps(omega_a)
    scale = abs(e_u) + abs(e_l) + 1.0
    s = e_u + e_l
    c_u = 2.0 * e_u + 1.0
    c_l = 2.0 * e_l + 1.0
    if abs(s) <= 1e-12 * scale:
        raise SingularityError(f"average permittivity vanishes at omega_a = {omega_a}")
    if abs(c_u) <= 1e-12 * scale or abs(c_l) <= 1e-12 * scale:
        raise SingularityError(f"Onsager cavity pole at omega_a = {omega_a}")
    g = abs(18.0 * e_u * e_l / (s * c_u * c_l)) ** 2
    g_no_lf = abs(2.0 / s) ** 2
    return g, g_no_lf


def peak_enhancement_estimate(m: Material) -> float:
    """Small-damping estimate of the enhancement peak at the surface mode.

    For an oscillator medium facing vacuum:

        4*(eps0 - eta)^2 / ((eta + 1)^2 (eps0 + 1)^2) * (w_s/gamma)^2 * |D_m(w_s)|^2

    valid for gamma << w_s.  Raises SingularityError for an undamped model.
    """
    if m.kind is not MaterialKind.LORENTZ:
        raise UnsupportedModelError("peak estimate is defined for the oscillator model")
    if m.gamma == 0.0:
        raise SingularityError("undamped medium has an unbounded enhancement peak")
    w_s = surface_mode_frequency(m)
    d_m = local_field_factor(m.eps(w_s))
    base = 4.0 * (m.eps0 - m.eta) ** 2 / ((m.eta + 1.0) ** 2 * (m.eps0 + 1.0) ** 2)
    return base * (w_s / m.gamma) ** 2 * abs(d_m) ** 2


def resonant_potential(
    system: HalfSpaceSystem,
    atom_a: Atom,
    atom_b: Atom,
    r: float | None = None,
) -> PotentialResult:
    """Resonant part of the interaction in units of U0.

        u = -Re[alpha_B(omega_A)]/alpha_B(0) * g(omega_A)

    The separation never enters the normalized value (the absolute potential
    is u * 2*|d_A|^2*alpha_B(0)/R^6); pass ``r`` to get an advisory warning
    when the geometry strains the near-field regime.
    """
    if r is not None:
        if not (r > 0.0):
            raise ParameterError(f"separation must be positive, got {r}")
        if r * max(atom_a.omega0, system.omega_max) > 1.0:
            warnings.warn(
                f"separation {r} is not small against 1/omega_max; "
                "near-field result may not apply",
                ValidityWarning,
                stacklevel=2,
            )
    g, g_no_lf = enhancement_factor(system, atom_a.omega0)
    alpha_ratio = polarizability(atom_b, atom_a.omega0).real / atom_b.alpha0
    return PotentialResult(u_resonant=-alpha_ratio * g, g=g, g_no_localfield=g_no_lf)


def offresonant_potential(
    system: HalfSpaceSystem,
    atom_a: Atom,
    atom_b: Atom,
    r: float | None = None,
    quad: QuadratureSpec | None = None,
    full_output: bool = False,
):
    """Off-resonant (imaginary-frequency) part of the interaction in units of U0.

        u = -3*hbar/(2*pi*d_A*alpha_B(0)) * Int_0^inf dxi
            alpha_A(i xi) alpha_B(i xi) [D*D_m/avg_eps]^2(i xi)

    The R^-6 law is carried entirely by U0, so the normalized value is
    separation-free.  The semi-infinite integral is mapped onto [0, 1) by
    xi = t/(1 - t).  With ``full_output`` the achieved error estimate (same
    units) is returned alongside.
    """
    if r is not None and not (r > 0.0):
        raise ParameterError(f"separation must be positive, got {r}")
    if quad is None:
        quad = QuadratureSpec()

    sign = atom_a.offres_sign
    wa2 = atom_a.omega0 * atom_a.omega0
    wb2 = atom_b.omega0 * atom_b.omega0

    def integrand(t):
        t = np.asarray(t, dtype=float)
        xi = t / (1.0 - t)
        jac = 1.0 / (1.0 - t) ** 2
        a_a = atom_a.alpha0 * wa2 / (wa2 + xi * xi + xi * atom_a.gamma)
        a_b = atom_b.alpha0 * wb2 / (wb2 + xi * xi + xi * atom_b.gamma)
        e_u = system.upper.eps_imag(xi)
        e_l = system.lower.eps_imag(xi)
        coupling = (
            (3.0 * e_u / (2.0 * e_u + 1.0))
            * (3.0 * e_l / (2.0 * e_l + 1.0))
            / (0.5 * (e_u + e_l))
        )
        return a_a * a_b * np.real(coupling * coupling) * jac

    # Seed panel edges at the atomic scales, mapped to the unit interval.
    breaks = sorted({w / (1.0 + w) for w in (atom_a.omega0, atom_b.omega0)})
    integral, err, _ = adaptive_gauss(integrand, 0.0, 1.0, quad, breakpoints=breaks)

    prefactor = 3.0 * HBAR_REDUCED / (2.0 * np.pi * atom_a.dipole_weight * atom_b.alpha0)
    u = -sign * prefactor * float(integral)
    if full_output:
        return u, prefactor * float(err)
    return u


def force(system: HalfSpaceSystem, atom_a: Atom, atom_b: Atom, pos: AtomPositions):
    """Equal and opposite forces on the two atoms from the resonant potential.

    F_A = -12*Re[alpha_B(omega_A)]*|d_A|^2*g(omega_A)/R^7 * rhat with
    rhat = (r_a - r_b)/R; returns ``(f_a, f_b)`` with f_b = -f_a exactly.
    Attractive (f_a antiparallel to rhat) when Re[alpha_B] > 0.
    """
    g, _ = enhancement_factor(system, atom_a.omega0)
    alpha_re = polarizability(atom_b, atom_a.omega0).real
    r_vec = pos.r_vec
    dist = pos.distance
    rhat = r_vec / dist
    f_a = -(12.0 * alpha_re * atom_a.dipole_weight * g / dist**7) * rhat
    return f_a, -f_a
