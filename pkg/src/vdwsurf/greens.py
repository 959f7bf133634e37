"""Two-point dyadic Green function across a planar interface.

Three evaluation routes are provided for the transmission geometry (source
below the interface, observation point above):

* :func:`kspace_green` - the plane-wave kernel at fixed in-plane wavenumber,
* :func:`sommerfeld_green` - its radial-wavenumber (Bessel kernel) integral,
* :func:`nonretarded_green` - the closed near-field form, an instantaneous
  dipole tensor screened by the average permittivity of the two media.

The Green function is normalized to the wave equation with a 4*pi*delta
source, so the free-space near field is (3*RR - R^2 I)/(omega^2 R^5) in the
reduced units of this package (c = 1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import j0, j1, jv

from .errors import ParameterError, SingularityError
from .materials import HalfSpaceSystem, local_field_factor
from .quadrature import QuadratureSpec, adaptive_gauss

#: Tensor components that are generally nonzero in the frame whose x axis is
#: the in-plane separation direction (everything else vanishes by symmetry).
COMPONENTS = ("xx", "yy", "zz", "xz", "zx")

_COMPONENT_INDEX = {"xx": (0, 0), "yy": (1, 1), "zz": (2, 2), "xz": (0, 2), "zx": (2, 0)}

#: The evanescent tail is integrated in blocks spanning this many decades of
#: the e^{-k(z_a - z_b)} envelope each, and stops once a block contributes
#: below _TAIL_FLOOR of the running total (at most _TAIL_MAX_BLOCKS blocks,
#: over 40 decades of decay).
_TAIL_BLOCK_DECADES = 4.0
_TAIL_FLOOR = 1e-14
_TAIL_MAX_BLOCKS = 10


@dataclass(frozen=True, eq=False)
class AtomPositions:
    """Positions of the two atoms, strictly on opposite sides of z = 0.

    ``r_a`` must have z > 0 (upper medium), ``r_b`` z < 0 (lower medium).
    Lengths are reduced by c/omega_ref.
    """

    r_a: np.ndarray
    r_b: np.ndarray

    def __post_init__(self):
        r_a = np.asarray(self.r_a, dtype=float).reshape(3)
        r_b = np.asarray(self.r_b, dtype=float).reshape(3)
        object.__setattr__(self, "r_a", r_a)
        object.__setattr__(self, "r_b", r_b)
        if not (r_a[2] > 0.0 > r_b[2]):
            raise ParameterError(
                f"atoms must sit on opposite sides of the interface: z_a={r_a[2]}, z_b={r_b[2]}"
            )
        if not np.all(np.isfinite(r_a)) or not np.all(np.isfinite(r_b)):
            raise ParameterError("positions must be finite")

    @property
    def r_vec(self) -> np.ndarray:
        """Separation vector r_a - r_b."""
        return self.r_a - self.r_b

    @property
    def distance(self) -> float:
        return float(np.linalg.norm(self.r_vec))

    @property
    def rho(self) -> float:
        """In-plane separation."""
        return float(np.hypot(*(self.r_a[:2] - self.r_b[:2])))

    def scaled(self, s: float) -> "AtomPositions":
        if not (s > 0.0):
            raise ParameterError(f"scale must be positive, got {s}")
        return AtomPositions(s * self.r_a, s * self.r_b)


def _upward_root(z):
    """Square root on the branch Im >= 0 (Re >= 0 when the root is real).

    This is the outgoing/decaying-wave branch for the perpendicular
    wavenumbers: transmitted and evanescent waves decay away from the
    interface.
    """
    w = np.sqrt(np.asarray(z, dtype=complex))
    flip = (w.imag < 0.0) | ((w.imag == 0.0) & (w.real < 0.0))
    return np.where(flip, -w, w)


def near_field_tensor(r_vec) -> np.ndarray:
    """Instantaneous dipole tensor (3*rr - I)/r^3 for a separation vector."""
    r_vec = np.asarray(r_vec, dtype=float).reshape(3)
    r = np.linalg.norm(r_vec)
    if r == 0.0:
        raise ParameterError("zero separation")
    rhat = r_vec / r
    return (3.0 * np.outer(rhat, rhat) - np.eye(3)) / r**3


def _media_constants(system: HalfSpaceSystem, omega: float):
    eps_u = system.upper.eps(omega)
    eps_l = system.lower.eps(omega)
    mu_u = system.upper.mu(omega)
    mu_l = system.lower.mu(omega)
    n_u = complex(_upward_root(eps_u * mu_u))
    n_l = complex(_upward_root(eps_l * mu_l))
    return eps_u, eps_l, mu_u, mu_l, n_u, n_l


def _check_path_poles(eps_u, eps_l, mu_u, mu_l):
    # Lossless media can place the interface-mode pole of the p (or s)
    # denominator on the real-k integration path; reject instead of
    # integrating across it.
    if eps_u.imag == 0.0 and eps_l.imag == 0.0 and mu_u.imag == 0.0 and mu_l.imag == 0.0:
        er_u, er_l = eps_u.real, eps_l.real
        mr_u, mr_l = mu_u.real, mu_l.real
        if er_u * er_l < 0.0 and er_u + er_l < 0.0:
            raise SingularityError(
                "lossless interface mode lies on the integration path (p polarization)"
            )
        if mr_u * mr_l < 0.0 and mr_u + mr_l < 0.0:
            raise SingularityError(
                "lossless interface mode lies on the integration path (s polarization)"
            )


def fresnel_t(system: HalfSpaceSystem, omega: float, k: float):
    """Transmission coefficients (t_p, t_s) through the interface.

    The wave travels from the lower medium into the upper one with in-plane
    wavenumber ``k``; perpendicular wavenumbers use the decaying branch.
    """
    if not (omega > 0.0):
        raise ParameterError(f"omega must be positive, got {omega}")
    if not (k >= 0.0):
        raise ParameterError(f"k must be >= 0, got {k}")
    eps_u, eps_l, mu_u, mu_l, n_u, n_l = _media_constants(system, omega)
    beta = complex(_upward_root((n_u * omega) ** 2 - k * k))
    beta_m = complex(_upward_root((n_l * omega) ** 2 - k * k))
    den_p = eps_l * beta + eps_u * beta_m
    den_s = mu_l * beta + mu_u * beta_m
    scale = abs(omega) * (abs(eps_u) + abs(eps_l) + abs(mu_u) + abs(mu_l))
    if abs(den_p) <= 1e-14 * scale or abs(den_s) <= 1e-14 * scale:
        raise SingularityError(f"interface-mode pole hit at omega={omega}, k={k}")
    # sqrt(eps_u*mu_l/(eps_l*mu_u)) written as n_u*mu_l/(n_l*mu_u) so its
    # branch follows the same roots that normalize the polarization vectors.
    t_p = (n_u * mu_l / (n_l * mu_u)) * 2.0 * eps_l * beta / den_p
    t_s = 2.0 * mu_l * beta / den_s
    return t_p, t_s


def kspace_green(system: HalfSpaceSystem, omega: float, k: float, z_a: float, z_b: float) -> np.ndarray:
    """Plane-wave transmission kernel at in-plane wavenumber ``k``.

    Returned in the (khat, khat x zhat, zhat) frame:

        2*pi*i*(mu/beta) * [t_p * p_up (x) p_low + t_s * s (x) s] * e^{i beta z_a - i beta_m z_b}

    with p_up = (beta*khat - k*zhat)/(n*omega) and p_low its lower-medium
    counterpart.  The s block occupies only the middle row/column.
    """
    if not (z_a > 0.0 > z_b):
        raise ParameterError(f"kernel needs z_a > 0 > z_b, got z_a={z_a}, z_b={z_b}")
    eps_u, eps_l, mu_u, mu_l, n_u, n_l = _media_constants(system, omega)
    t_p, t_s = fresnel_t(system, omega, k)
    beta = complex(_upward_root((n_u * omega) ** 2 - k * k))
    beta_m = complex(_upward_root((n_l * omega) ** 2 - k * k))
    if beta == 0.0:
        raise SingularityError(f"grazing kernel beta = 0 at omega={omega}, k={k}")
    p_up = np.array([beta, 0.0, -k], dtype=complex) / (n_u * omega)
    p_low = np.array([beta_m, 0.0, -k], dtype=complex) / (n_l * omega)
    s_block = np.zeros((3, 3), dtype=complex)
    s_block[1, 1] = 1.0
    phase = np.exp(1j * (beta * z_a - beta_m * z_b))
    return 2j * np.pi * (mu_u / beta) * phase * (t_p * np.outer(p_up, p_low) + t_s * s_block)


def _radial_integrand(system: HalfSpaceSystem, omega: float, pos: AtomPositions):
    """Vectorized k-integrand of the five independent tensor components.

    The 1/beta prefactor of the kernel is folded into t_p/beta and t_s/beta
    analytically, so the integrand stays finite through beta = 0 (the
    grazing point of a lossless upper medium).
    """
    eps_u, eps_l, mu_u, mu_l, n_u, n_l = _media_constants(system, omega)
    _check_path_poles(eps_u, eps_l, mu_u, mu_l)
    z_a = pos.r_a[2]
    z_b = pos.r_b[2]
    rho = pos.rho
    sqrt_ratio = n_u * mu_l / (n_l * mu_u)
    p_norm = 1.0 / (n_u * n_l * omega * omega)

    def integrand(k):
        k = np.asarray(k, dtype=float)
        beta = _upward_root((n_u * omega) ** 2 - k * k)
        beta_m = _upward_root((n_l * omega) ** 2 - k * k)
        tp_over_beta = sqrt_ratio * 2.0 * eps_l / (eps_l * beta + eps_u * beta_m)
        ts_over_beta = 2.0 * mu_l / (mu_l * beta + mu_u * beta_m)
        phase = np.exp(1j * (beta * z_a - beta_m * z_b))
        u = k * rho
        b0, b1, b2 = j0(u), j1(u), jv(2, u)
        p = mu_u * tp_over_beta * p_norm
        s = mu_u * ts_over_beta
        pbb = p * beta * beta_m
        xx = 0.5j * k * (pbb * (b0 - b2) + s * (b0 + b2)) * phase
        yy = 0.5j * k * (pbb * (b0 + b2) + s * (b0 - b2)) * phase
        zz = 1j * k * p * k * k * b0 * phase
        xz = p * beta * k * k * b1 * phase
        zx = p * k * k * beta_m * b1 * phase
        return np.stack([xx, yy, zz, xz, zx], axis=-1)

    k_breaks = sorted({abs((n_u * omega).real), abs((n_l * omega).real)})
    return integrand, k_breaks


def sommerfeld_green(
    system: HalfSpaceSystem,
    omega: float,
    pos: AtomPositions,
    quad: QuadratureSpec | None = None,
    local_field: bool = True,
) -> np.ndarray:
    """Transmission Green function by radial-wavenumber integration.

    The angular integral is done analytically (J0/J1/J2 kernels); the radial
    integral runs along the real k axis, split into a propagating segment up
    to the largest Re(n*omega) and an evanescent tail integrated in blocks
    until its exponentially decaying contribution drops below roundoff of
    the running total.  With ``local_field`` the result carries the Onsager
    cavity factor of each medium.

    Raises QuadratureError when the panel budget is exhausted and
    SingularityError when a lossless interface mode sits on the path.
    """
    if not (omega > 0.0):
        raise ParameterError(f"omega must be positive, got {omega}")
    if quad is None:
        quad = QuadratureSpec()
    integrand, k_breaks = _radial_integrand(system, omega, pos)

    k_split = max(k_breaks)
    d = pos.r_a[2] - pos.r_b[2]  # > 0
    block = _TAIL_BLOCK_DECADES * np.log(10.0) / d

    flat = np.zeros(5, dtype=complex)
    if k_split > 0.0:
        val, _, _ = adaptive_gauss(integrand, 0.0, k_split, quad, breakpoints=k_breaks[:-1])
        flat += val
    start = k_split
    for _ in range(_TAIL_MAX_BLOCKS):
        val, _, _ = adaptive_gauss(integrand, start, start + block, quad)
        flat += val
        start += block
        if np.max(np.abs(val)) <= _TAIL_FLOOR * np.max(np.abs(flat)):
            break

    frame = np.zeros((3, 3), dtype=complex)
    for name, value in zip(COMPONENTS, flat):
        frame[_COMPONENT_INDEX[name]] = value

    # Rotate from the frame aligned with the in-plane separation back to lab axes.
    dx, dy = pos.r_a[0] - pos.r_b[0], pos.r_a[1] - pos.r_b[1]
    if dx * dx + dy * dy > 0.0:
        phi = np.arctan2(dy, dx)
        c, s = np.cos(phi), np.sin(phi)
        rot = np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
        green = rot @ frame @ rot.T
    else:
        green = frame

    if local_field:
        green = green * (
            local_field_factor(system.upper.eps(omega)) * local_field_factor(system.lower.eps(omega))
        )
    if not np.all(np.isfinite(green)):
        raise SingularityError("non-finite Green tensor")
    return green


def transmission_green(
    system: HalfSpaceSystem,
    omega: float,
    r_obs,
    r_src,
    quad: QuadratureSpec | None = None,
    local_field: bool = True,
) -> np.ndarray:
    """Sommerfeld-integrated Green function for either ordering of the atoms.

    Observation above / source below maps directly onto
    :func:`sommerfeld_green`; the opposite ordering is evaluated in the
    mirror system (media swapped, z negated) and conjugated back with
    diag(1, 1, -1).
    """
    r_obs = np.asarray(r_obs, dtype=float).reshape(3)
    r_src = np.asarray(r_src, dtype=float).reshape(3)
    if r_obs[2] > 0.0 > r_src[2]:
        return sommerfeld_green(system, omega, AtomPositions(r_obs, r_src), quad, local_field)
    if r_src[2] > 0.0 > r_obs[2]:
        mirror = np.array([1.0, 1.0, -1.0])
        flipped = HalfSpaceSystem(
            upper=system.lower, lower=system.upper, omega_max=system.omega_max
        )
        pos = AtomPositions(mirror * r_obs, mirror * r_src)
        green = sommerfeld_green(flipped, omega, pos, quad, local_field=False)
        if local_field:
            # the scalar cavity factors commute with the mirror conjugation
            green = green * (
                local_field_factor(system.upper.eps(omega))
                * local_field_factor(system.lower.eps(omega))
            )
        flip = np.diag(mirror)
        return flip @ green @ flip
    raise ParameterError("observation and source must sit on opposite sides of the interface")


def nonretarded_green(
    system: HalfSpaceSystem,
    omega,
    pos: AtomPositions,
    local_field: bool = True,
) -> np.ndarray:
    """Closed-form near-field Green function across the interface.

    The instantaneous (c -> infinity) limit of the transmission kernel is
    the free-space dipole tensor screened by the average permittivity of the
    two media:

        G = D * D_m / (omega^2 * avg_eps) * (3*rr - I)/R^3

    with the Onsager factors D, D_m dropped when ``local_field`` is False.
    Accepts complex ``omega`` (imaginary-axis evaluation).
    """
    w = complex(omega)
    if w == 0.0:
        raise ParameterError("omega must be nonzero")
    eps_bar = system.avg_eps(w)
    eps_scale = abs(system.upper.eps(w)) + abs(system.lower.eps(w))
    if abs(eps_bar) <= 1e-12 * max(eps_scale, 1.0):
        raise SingularityError(f"average permittivity vanishes at omega = {omega!r}")
    green = near_field_tensor(pos.r_vec) / (w * w * eps_bar)
    if local_field:
        green = green * (
            local_field_factor(system.upper.eps(w)) * local_field_factor(system.lower.eps(w))
        )
    return green


@dataclass(frozen=True)
class LimitRatio:
    """One convergence sample: retarded/nonretarded component ratio at a scale."""

    scale: float
    component: str
    ratio: complex

    @property
    def deviation(self) -> float:
        return abs(self.ratio - 1.0)


@dataclass(frozen=True)
class NonretardedLimitReport:
    """Outcome of shrinking the geometry toward the instantaneous limit."""

    omega: float
    scales: tuple
    rows: tuple

    def at_scale(self, scale: float) -> list:
        return [row for row in self.rows if row.scale == scale]

    def max_deviation(self, scale: float | None = None) -> float:
        rows = self.rows if scale is None else self.at_scale(scale)
        if not rows:
            return float("nan")
        return max(row.deviation for row in rows)

    def passed(self, tol: float = 0.01) -> bool:
        """True when every component ratio at the smallest scale is within tol of 1."""
        if not self.scales:
            return False
        final = self.at_scale(min(self.scales))
        return bool(final) and all(row.deviation <= tol for row in final)

    def convergence_order(self, component: str) -> float:
        """Log-log slope of |ratio - 1| between the two smallest scales."""
        scales = sorted(self.scales)
        if len(scales) < 2:
            return float("nan")
        devs = []
        for s in scales[:2]:
            match = [row for row in self.at_scale(s) if row.component == component]
            if not match:
                return float("nan")
            devs.append(match[0].deviation)
        if devs[0] == 0.0 or devs[1] == 0.0:
            return float("nan")
        return float(np.log(devs[1] / devs[0]) / np.log(scales[1] / scales[0]))


def nonretarded_limit_check(
    system: HalfSpaceSystem,
    omega: float,
    pos: AtomPositions,
    scales,
    quad: QuadratureSpec | None = None,
    local_field: bool = True,
) -> NonretardedLimitReport:
    """Compare the Sommerfeld integral against the closed near-field form.

    The geometry is shrunk by each factor in ``scales``; per component the
    ratio retarded/nonretarded is recorded.  Components that vanish in the
    closed form (relative magnitude below 1e-12) are skipped.  The report
    passes when all ratios at the smallest scale sit within tolerance of 1.
    """
    scales = tuple(float(s) for s in scales)
    rows = []
    for s in scales:
        shrunk = pos.scaled(s)
        retarded = sommerfeld_green(system, omega, shrunk, quad, local_field)
        closed = nonretarded_green(system, omega, shrunk, local_field)
        floor = 1e-12 * np.max(np.abs(closed))
        for name in COMPONENTS:
            idx = _COMPONENT_INDEX[name]
            if abs(closed[idx]) <= floor:
                continue
            rows.append(LimitRatio(scale=s, component=name, ratio=complex(retarded[idx] / closed[idx])))
    return NonretardedLimitReport(omega=omega, scales=scales, rows=tuple(rows))
