"""Half-space material response and interface mode frequencies.

Conventions used throughout the package:

* frequencies are in reduced units of a caller-chosen reference omega_ref,
  lengths in units of c/omega_ref (so c = 1 in all kernels);
* the time convention is exp(-i*omega*t), so passive media have
  Im(eps) >= 0 at real positive frequency;
* evaluation on the positive imaginary axis (omega = i*xi, xi >= 0) is the
  standard analytic continuation and yields real response values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ParameterError, SingularityError, UnsupportedModelError


class MaterialKind(Enum):
    VACUUM = "vacuum"
    CONSTANT = "constant"
    LORENTZ = "lorentz"


def _finite_complex(z) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ParameterError(f"non-finite material parameter {z!r}")
    return z


@dataclass(frozen=True)
class Material:
    """Homogeneous half-space material model.

    VACUUM and CONSTANT have frequency-independent response.  LORENTZ is the
    single-resonance oscillator

        eps(w) = eta + (eps0 - eta) * w_t**2 / (w_t**2 - w**2 - 1j*w*gamma)

    with background constant ``eta``, static constant ``eps0``, resonance
    frequency ``omega_t`` and damping ``gamma``; its permeability is the
    constant ``mu_const``.
    """

    kind: MaterialKind
    eps_const: complex = 1.0 + 0.0j
    mu_const: complex = 1.0 + 0.0j
    eta: float = 1.0
    eps0: float = 1.0
    omega_t: float = 1.0
    gamma: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "eps_const", _finite_complex(self.eps_const))
        object.__setattr__(self, "mu_const", _finite_complex(self.mu_const))
        if self.kind is MaterialKind.LORENTZ:
            if not (self.eps0 > self.eta >= 1.0):
                raise ParameterError(
                    f"oscillator model needs eps0 > eta >= 1, got eta={self.eta}, eps0={self.eps0}"
                )
            if not (self.omega_t > 0.0):
                raise ParameterError(f"oscillator resonance must be positive, got {self.omega_t}")
            if not (self.gamma >= 0.0):
                raise ParameterError(f"oscillator damping must be >= 0, got {self.gamma}")
        elif self.kind is MaterialKind.VACUUM:
            if self.eps_const != 1.0 or self.mu_const != 1.0:
                raise ParameterError("vacuum must have eps = mu = 1")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def vacuum() -> "Material":
        return Material(MaterialKind.VACUUM)

    @staticmethod
    def constant(eps, mu=1.0) -> "Material":
        return Material(MaterialKind.CONSTANT, eps_const=eps, mu_const=mu)

    @staticmethod
    def lorentz(eta, eps0, omega_t, gamma, mu=1.0) -> "Material":
        return Material(
            MaterialKind.LORENTZ,
            mu_const=mu,
            eta=float(eta),
            eps0=float(eps0),
            omega_t=float(omega_t),
            gamma=float(gamma),
        )

    @staticmethod
    def lorentz_from_surface_mode(eta, eps0, omega_s, gamma, mu=1.0) -> "Material":
        """Oscillator model pinned by its vacuum-interface surface-mode frequency.

        The resonance frequency is recovered from
        omega_t = omega_s * sqrt((eta + 1)/(eps0 + 1)); convenient when a
        measurement fixes the surface mode rather than the bulk resonance.
        """
        if not (omega_s > 0.0):
            raise ParameterError(f"surface-mode frequency must be positive, got {omega_s}")
        if not (eps0 > eta >= 1.0):
            raise ParameterError(
                f"oscillator model needs eps0 > eta >= 1, got eta={eta}, eps0={eps0}"
            )
        omega_t = float(omega_s) * math.sqrt((eta + 1.0) / (eps0 + 1.0))
        return Material.lorentz(eta, eps0, omega_t, gamma, mu=mu)

    # -- evaluation --------------------------------------------------------

    def eps(self, omega) -> complex:
        """Relative permittivity at complex frequency ``omega``.

        Supported arguments are real frequencies and points on the positive
        imaginary axis; the closed form is evaluated as-is for any complex
        input.
        """
        if self.kind is MaterialKind.LORENTZ:
            w = complex(omega)
            wt2 = self.omega_t * self.omega_t
            den = wt2 - w * w - 1j * w * self.gamma
            if den == 0:
                raise SingularityError(
                    f"undamped oscillator evaluated at its resonance {omega!r}"
                )
            return self.eta + (self.eps0 - self.eta) * wt2 / den
        return self.eps_const

    def eps_imag(self, xi):
        """Permittivity on the positive imaginary axis, vectorized over xi.

        For the oscillator model the continuation is real and strictly
        decreasing from eps0 to eta:

            eps(i*xi) = eta + (eps0 - eta) * w_t**2 / (w_t**2 + xi**2 + xi*gamma)

        Constant models return their fixed value unchanged.
        """
        xi = np.asarray(xi, dtype=float)
        if self.kind is MaterialKind.LORENTZ:
            wt2 = self.omega_t * self.omega_t
            return self.eta + (self.eps0 - self.eta) * wt2 / (wt2 + xi * xi + xi * self.gamma)
        return np.full(xi.shape, self.eps_const)

    def mu(self, omega) -> complex:
        """Relative permeability (dispersionless in every supported model)."""
        return self.mu_const


@dataclass(frozen=True)
class HalfSpaceSystem:
    """Two materials joined at the plane z = 0.

    ``upper`` fills z > 0 and ``lower`` fills z < 0.  ``omega_max`` is an
    advisory validity cutoff: near-field results are trustworthy only for
    geometries with distances well below c/omega_max.
    """

    upper: Material
    lower: Material
    omega_max: float = 10.0

    def __post_init__(self):
        if not (self.omega_max > 0.0):
            raise ParameterError(f"omega_max must be positive, got {self.omega_max}")

    def avg_eps(self, omega) -> complex:
        """Average permittivity (eps_upper + eps_lower)/2 of the media in contact."""
        return 0.5 * (self.upper.eps(omega) + self.lower.eps(omega))


# Poles are reported as errors instead of propagating inf; the detection
# window is a small relative neighbourhood so that undamped models evaluated
# at a float approximation of the pole still trip deterministically.
_POLE_RTOL = 1e-12


def local_field_factor(eps) -> complex:
    """Onsager empty-cavity factor 3*eps/(2*eps + 1).

    Raises SingularityError at (or within roundoff of) the cavity pole
    eps = -1/2.
    """
    eps = complex(eps)
    den = 2.0 * eps + 1.0
    if abs(den) <= _POLE_RTOL * (1.0 + 2.0 * abs(eps)):
        raise SingularityError(f"local-field factor pole at eps = {eps!r}")
    return 3.0 * eps / den


def surface_mode_frequency(m: Material) -> float:
    """Frequency where the average permittivity against vacuum vanishes.

    For the oscillator model this is sqrt((eps0 + 1)/(eta + 1)) * omega_t,
    the interface (surface polariton) resonance of a vacuum boundary.
    """
    if m.kind is not MaterialKind.LORENTZ:
        raise UnsupportedModelError("surface-mode frequency is defined for the oscillator model")
    return math.sqrt((m.eps0 + 1.0) / (m.eta + 1.0)) * m.omega_t


def cavity_mode_frequency(m: Material) -> float:
    """Frequency of the Onsager-cavity resonance, where 2*eps + 1 vanishes.

    For the oscillator model this is sqrt((2*eps0 + 1)/(2*eta + 1)) * omega_t.
    """
    if m.kind is not MaterialKind.LORENTZ:
        raise UnsupportedModelError("cavity-mode frequency is defined for the oscillator model")
    return math.sqrt((2.0 * m.eps0 + 1.0) / (2.0 * m.eta + 1.0)) * m.omega_t


def resonant_inv_avg_eps(m: Material, omega) -> complex:
    """Inverse average permittivity of a vacuum/oscillator interface.

    Algebraically identical to 1/((1 + eps(omega))/2) but written as an
    explicit resonance centred on the surface-mode frequency:

        2/(eta+1) * (1 - (eps0-eta)/(eps0+1) * w_s**2/(w_s**2 - w**2 - 1j*w*gamma))

    Useful to read off the resonant structure and as an identity check of the
    direct route.
    """
    if m.kind is not MaterialKind.LORENTZ:
        raise UnsupportedModelError("resonant form is defined for the oscillator model")
    w = complex(omega)
    ws2 = surface_mode_frequency(m) ** 2
    return (2.0 / (m.eta + 1.0)) * (
        1.0 - (m.eps0 - m.eta) / (m.eps0 + 1.0) * ws2 / (ws2 - w * w - 1j * w * m.gamma)
    )


#: Absolute surface-mode frequency (s^-1) that the "sapphire-ir" preset is
#: scaled to.  Metadata only: the preset itself uses reduced units with
#: omega_ref equal to the surface-mode frequency.
SAPPHIRE_IR_OMEGA_S = 1.54e14

_PRESETS = {
    # Infrared response of sapphire near its surface polariton; reduced
    # units with omega_ref = surface-mode frequency, so omega_s = 1 here.
    "sapphire-ir": lambda: Material.lorentz_from_surface_mode(
        eta=2.71, eps0=6.57, omega_s=1.0, gamma=0.015
    ),
    "vacuum": Material.vacuum,
}


def preset(name: str) -> Material:
    """Return a named built-in material preset."""
    try:
        factory = _PRESETS[name]
    except KeyError:
        known = ", ".join(sorted(_PRESETS))
        raise ParameterError(f"unknown material preset {name!r} (known: {known})") from None
    return factory()


def preset_names() -> tuple:
    return tuple(sorted(_PRESETS))
