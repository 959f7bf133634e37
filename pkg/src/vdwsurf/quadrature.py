"""Adaptive panel quadrature for vector-valued (complex) integrands.

A fixed pair of Gauss-Legendre rules (7 and 15 points) is applied per panel;
the difference between the two estimates drives bisection of the worst panel
until every component of the integral meets the requested tolerance or the
panel budget is exhausted.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, QuadratureError

_LO_X, _LO_W = np.polynomial.legendre.leggauss(7)
_HI_X, _HI_W = np.polynomial.legendre.leggauss(15)


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and budget for one adaptive integration."""

    rel_tol: float = 1e-8
    abs_tol: float = 0.0
    max_panels: int = 10_000

    def __post_init__(self):
        if self.rel_tol < 0.0 or self.abs_tol < 0.0:
            raise ParameterError("tolerances must be >= 0")
        if self.rel_tol == 0.0 and self.abs_tol == 0.0:
            raise ParameterError("at least one of rel_tol/abs_tol must be positive")
        if self.max_panels < 1:
            raise ParameterError("max_panels must be >= 1")


def _panel(f, a, b):
    """Return (high-order value, per-component error) on [a, b]."""
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    lo = half * np.tensordot(_LO_W, f(mid + half * _LO_X), axes=(0, 0))
    hi = half * np.tensordot(_HI_W, f(mid + half * _HI_X), axes=(0, 0))
    return hi, np.abs(hi - lo)


def adaptive_gauss(f, a, b, spec: QuadratureSpec | None = None, breakpoints=()):
    """Integrate ``f`` over [a, b] adaptively.

    ``f`` maps an abscissa array of shape (n,) to values of shape (n,) or
    (n, m); the m components are integrated together and share panels.
    ``breakpoints`` seeds panel edges at known kinks.

    Returns ``(value, error_estimate, panels)`` where value/error have shape
    (m,) (or are scalars for a scalar integrand).  Raises QuadratureError,
    carrying the best value and achieved estimate, if the budget runs out.
    """
    if spec is None:
        spec = QuadratureSpec()
    a = float(a)
    b = float(b)
    if not b > a:
        raise ParameterError(f"empty integration interval [{a}, {b}]")

    probe = np.asarray(f(np.array([0.5 * (a + b)])))
    scalar = probe.ndim == 1
    fv = (lambda x: np.asarray(f(x))[:, None]) if scalar else (lambda x: np.asarray(f(x)))

    edges = [a] + sorted(p for p in set(float(p) for p in breakpoints) if a < p < b) + [b]

    m = 1 if scalar else probe.shape[-1]
    heap = []  # (-max component error, tie-break, left, right, value, err)
    tick = 0
    # Running totals are maintained incrementally; the returned value is
    # recomputed from the surviving panels so pop/push cycles leave no drift.
    vals = np.zeros(m, dtype=complex)
    errs = np.zeros(m, dtype=float)
    l1 = np.zeros(m, dtype=float)

    def push(left, right):
        nonlocal tick, vals, errs, l1
        val, err = _panel(fv, left, right)
        heapq.heappush(heap, (-float(err.max()), tick, left, right, val, err))
        vals = vals + val
        errs = errs + err
        l1 = l1 + np.abs(val)
        tick += 1

    for left, right in zip(edges[:-1], edges[1:]):
        push(left, right)

    while True:
        # rel_tol is measured against the largest component; cancelling
        # integrals additionally converge at the roundoff floor of their
        # panel-sum magnitude.
        tol = spec.abs_tol + spec.rel_tol * np.max(np.abs(vals))
        floor = 100.0 * np.finfo(float).eps * np.max(l1)
        if np.all(errs <= max(tol, floor)):
            break
        if len(heap) >= spec.max_panels:
            best = np.sum([item[4] for item in heap], axis=0)
            raise QuadratureError(
                f"no convergence within {spec.max_panels} panels "
                f"(error estimate {errs.max():.3e}, tolerance {max(tol, floor):.3e})",
                value=best[0] if scalar else best,
                error_estimate=errs[0] if scalar else errs,
                panels=len(heap),
            )
        _, _, left, right, val, err = heapq.heappop(heap)
        vals = vals - val
        errs = np.maximum(errs - err, 0.0)
        l1 = np.maximum(l1 - np.abs(val), 0.0)
        mid = 0.5 * (left + right)
        push(left, mid)
        push(mid, right)

    vals = np.sum([item[4] for item in heap], axis=0)
    errs = np.sum([item[5] for item in heap], axis=0)
    if scalar:
        return vals[0], errs[0], len(heap)
    return vals, errs, len(heap)
