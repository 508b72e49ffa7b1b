"""Kernel function, local weights, and kernel moment constants.

Rescaled time runs over tau_t = t/T for t = 1..T.  All estimators weight
observation t by K((tau_t - tau)/h); the Epanechnikov kernel is the only
family implemented.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import BandwidthTooSmallError

EPANECHNIKOV = "epanechnikov"


def kernel_eval(u):
    """Epanechnikov kernel 0.75*(1 - u^2) on [-1, 1], zero outside."""
    u = np.asarray(u, dtype=float)
    out = 0.75 * (1.0 - u * u)
    out = np.where(np.abs(u) <= 1.0, out, 0.0)
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class KernelSpec:
    """Kernel family plus bandwidth."""

    h: float
    family: str = EPANECHNIKOV

    def __post_init__(self):
        if self.family != EPANECHNIKOV:
            raise ValueError(f"unsupported kernel family: {self.family!r}")
        if not 0.0 < self.h:
            raise ValueError(f"bandwidth must be positive, got {self.h}")


@dataclass(frozen=True)
class KernelMoments:
    """Moment constants c_k = int u^k K(u) du and v_k = int u^k K(u)^2 du."""

    c: tuple = field(default=(1.0, 0.0, 0.2, 0.0, 3.0 / 35.0))
    v: tuple = field(default=(0.6, 0.0, 3.0 / 35.0))


def kernel_moments(spec: KernelSpec) -> KernelMoments:
    """Closed-form moment constants for the Epanechnikov kernel."""
    if spec.family != EPANECHNIKOV:
        raise ValueError(f"unsupported kernel family: {spec.family!r}")
    return KernelMoments()


def sample_taus(T, start=1):
    """Rescaled-time grid t/T for t = start..T."""
    return np.arange(start, T + 1, dtype=float) / T


def weight_matrix(grid, taus, h, squared=False):
    """Raw kernel weights K((tau_t - g)/h) for every grid point g and sample time t.

    Returns a (len(grid), len(taus)) array of plain kernel values: the 1/h
    factor of K_h is left to the caller, since most uses are ratios where
    it cancels.  ``squared=True`` returns K(.)^2 entries.
    """
    grid = np.atleast_1d(np.asarray(grid, dtype=float))
    taus = np.asarray(taus, dtype=float)
    u = (taus[None, :] - grid[:, None]) / h
    w = kernel_eval(u)
    return w * w if squared else w


def local_weights(T, tau, spec: KernelSpec):
    """Normalized local-constant weights over t = 1..T at rescaled time tau.

    Weights are proportional to K((t/T - tau)/h) and renormalized to sum to
    one.  Raises :class:`BandwidthTooSmallError` when no sample point falls
    inside the window.
    """
    if T < 2:
        raise ValueError("need at least two observations")
    if not 0.0 < tau <= 1.0:
        raise ValueError(f"tau must lie in (0, 1], got {tau}")
    w = weight_matrix([tau], sample_taus(T), spec.h)[0]
    total = w.sum()
    if total <= 0.0:
        raise BandwidthTooSmallError(tau, spec.h)
    return w / total
