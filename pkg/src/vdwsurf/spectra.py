"""Frequency scans of the interaction and resonance-peak extraction.

A scan sweeps the excited atom's transition frequency over a uniform grid
and records the normalized resonant potential together with the enhancement
factors; peaks of |u_resonant| are refined off-grid by golden-section search
and classified against the known mode frequencies of the system (surface
mode, Onsager-cavity mode, atomic transition of the ground-state partner).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from .errors import ParameterError, SingularityError
from .interaction import (
    Atom,
    enhancement_factor,
    offresonant_potential,
    polarizability,
    resonant_potential,
)
from .materials import (
    HalfSpaceSystem,
    MaterialKind,
    cavity_mode_frequency,
    surface_mode_frequency,
)
from .quadrature import QuadratureSpec


class PeakKind(Enum):
    SURFACE_MODE = "surface_mode"
    CAVITY_MODE = "cavity_mode"
    ATOMIC_RESONANCE = "atomic_resonance"
    UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class ScanSpec:
    """Uniform frequency grid for the excited atom's transition."""

    omega_min: float
    omega_max: float
    n_points: int = 2000
    include_offresonant: bool = False
    include_no_lf_curve: bool = True

    def __post_init__(self):
        if not (0.0 < self.omega_min < self.omega_max):
            raise ParameterError(
                f"need 0 < omega_min < omega_max, got [{self.omega_min}, {self.omega_max}]"
            )
        if self.n_points < 2:
            raise ParameterError(f"n_points must be >= 2, got {self.n_points}")

    def grid(self) -> np.ndarray:
        return np.linspace(self.omega_min, self.omega_max, self.n_points)


@dataclass(frozen=True)
class SpectrumRow:
    """One frequency sample of the scan.

    Numeric fields are NaN (and ``error`` holds the reason) when the sample
    hit a pole exactly; the scan continues past such points.
    """

    omega: float
    u_resonant: float
    u_resonant_no_lf: float
    g: float
    g_no_lf: float
    u_offresonant: float | None = None
    error: str | None = None


@dataclass(frozen=True)
class PeakReport:
    location: float
    height: float
    width_fwhm: float
    kind: PeakKind


def scan_spectrum(
    system: HalfSpaceSystem,
    atom_a: Atom,
    atom_b: Atom,
    scan: ScanSpec,
    quad: QuadratureSpec | None = None,
) -> list[SpectrumRow]:
    """Sweep the excited atom's transition frequency over the scan grid.

    ``atom_a`` is a template whose ``omega0`` is replaced by each grid
    frequency.  Rows are ordered by frequency; grid points that fall exactly
    on a pole are flagged rather than aborting the scan.
    """
    rows = []
    nan = float("nan")
    for w in scan.grid():
        w = float(w)
        try:
            swept = replace(atom_a, omega0=w)
            res = resonant_potential(system, swept, atom_b)
            if scan.include_no_lf_curve:
                alpha_ratio = polarizability(atom_b, w).real / atom_b.alpha0
                u_no_lf = -alpha_ratio * res.g_no_localfield
            else:
                u_no_lf = nan
            u_off = None
            if scan.include_offresonant:
                u_off = offresonant_potential(system, swept, atom_b, quad=quad)
            rows.append(
                SpectrumRow(
                    omega=w,
                    u_resonant=res.u_resonant,
                    u_resonant_no_lf=u_no_lf,
                    g=res.g,
                    g_no_lf=res.g_no_localfield,
                    u_offresonant=u_off,
                )
            )
        except SingularityError as exc:
            rows.append(
                SpectrumRow(
                    omega=w,
                    u_resonant=nan,
                    u_resonant_no_lf=nan,
                    g=nan,
                    g_no_lf=nan,
                    error=str(exc),
                )
            )
    return rows


def scan_enhancement(system: HalfSpaceSystem, scan: ScanSpec):
    """Enhancement factors over the scan grid as (omega, g, g_no_lf) rows."""
    rows = []
    nan = float("nan")
    for w in scan.grid():
        w = float(w)
        try:
            g, g_no_lf = enhancement_factor(system, w)
            rows.append((w, g, g_no_lf))
        except SingularityError:
            rows.append((w, nan, nan))
    return rows


_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section_max(f, a: float, b: float, rel_tol: float = 1e-6):
    """Locate the maximum of a unimodal ``f`` on [a, b].

    Returns ``(x, f(x))``; the bracket shrinks until its width is below
    rel_tol relative to the midpoint location.
    """
    if not (b > a):
        raise ParameterError(f"invalid bracket [{a}, {b}]")
    x1 = b - _INVPHI * (b - a)
    x2 = a + _INVPHI * (b - a)
    f1, f2 = f(x1), f(x2)
    while (b - a) > rel_tol * max(abs(a), abs(b), 1e-300):
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INVPHI * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INVPHI * (b - a)
            f1 = f(x1)
    x = 0.5 * (a + b)
    return x, f(x)


def _known_modes(system: HalfSpaceSystem, atom_b: Atom, grid_step: float):
    """(frequency, window, kind) triples the classifier matches against.

    Mode windows are twice the relevant damping (the Lorentzian half width
    of each resonance), floored at one grid step so barely resolved features
    still classify.
    """
    modes = []
    for mat in (system.upper, system.lower):
        if mat.kind is MaterialKind.LORENTZ:
            window = max(2.0 * mat.gamma, grid_step)
            modes.append((surface_mode_frequency(mat), window, PeakKind.SURFACE_MODE))
            modes.append((cavity_mode_frequency(mat), window, PeakKind.CAVITY_MODE))
    modes.append(
        (atom_b.omega0, max(2.0 * atom_b.gamma, grid_step), PeakKind.ATOMIC_RESONANCE)
    )
    return modes


def find_peaks(
    system: HalfSpaceSystem,
    atom_b: Atom,
    rows: list[SpectrumRow],
    refine_tol: float = 1e-6,
) -> list[PeakReport]:
    """Locate, refine and classify the resonances of a scanned spectrum.

    Strict local maxima of |u_resonant| on the grid are refined by
    golden-section search on the continuous evaluator and classified by
    proximity to the known mode frequencies.  Several grid maxima matching
    the same mode (e.g. the two flanks of a dispersive atomic line) collapse
    into the single tallest report; unclassified peaks are kept
    individually.  Returns peaks ordered by location; an empty list for
    monotone input.
    """
    clean = [(row.omega, abs(row.u_resonant)) for row in rows if row.error is None]
    if len(clean) < 3:
        return []
    omegas = np.array([c[0] for c in clean])
    metric = np.array([c[1] for c in clean])
    grid_step = float(np.median(np.diff(omegas))) if len(omegas) > 1 else 0.0

    def evaluator(w: float) -> float:
        res = resonant_potential(system, Atom(omega0=w), atom_b)
        return abs(res.u_resonant)

    modes = _known_modes(system, atom_b, grid_step)

    raw: list[PeakReport] = []
    for i in range(1, len(metric) - 1):
        if not (metric[i] > metric[i - 1] and metric[i] > metric[i + 1]):
            continue
        loc, height = golden_section_max(
            evaluator, float(omegas[i - 1]), float(omegas[i + 1]), refine_tol
        )
        kind = PeakKind.UNCLASSIFIED
        best = math.inf
        for freq, window, mode_kind in modes:
            dist = abs(loc - freq)
            if dist < window and dist < best:
                best = dist
                kind = mode_kind
        width = _fwhm(omegas, metric, i, height)
        raw.append(PeakReport(location=loc, height=height, width_fwhm=width, kind=kind))

    merged: dict[PeakKind, PeakReport] = {}
    peaks: list[PeakReport] = []
    for peak in raw:
        if peak.kind is PeakKind.UNCLASSIFIED:
            peaks.append(peak)
        elif peak.kind not in merged or peak.height > merged[peak.kind].height:
            merged[peak.kind] = peak
    peaks.extend(merged.values())
    peaks.sort(key=lambda p: p.location)
    return peaks


def _fwhm(omegas: np.ndarray, metric: np.ndarray, i_peak: int, height: float) -> float:
    """Full width at half maximum from grid crossings, NaN if unbounded."""
    half = 0.5 * height
    left = right = float("nan")
    for i in range(i_peak, 0, -1):
        if metric[i - 1] <= half:
            frac = (metric[i] - half) / (metric[i] - metric[i - 1])
            left = omegas[i] + frac * (omegas[i - 1] - omegas[i])
            break
    for i in range(i_peak, len(metric) - 1):
        if metric[i + 1] <= half:
            frac = (metric[i] - half) / (metric[i] - metric[i + 1])
            right = omegas[i] + frac * (omegas[i + 1] - omegas[i])
            break
    return float(right - left)
