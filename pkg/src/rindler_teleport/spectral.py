"""Frequency-domain building blocks for accelerated-observer optics.

A uniformly accelerated observer (proper acceleration ``a``) sees the
inertial vacuum as a two-mode-squeezed state pairing each of her frequency
modes with a partner behind the horizon.  The per-frequency squeezing
parameter is

    r(omega) = arctanh(exp(-pi * omega / a)),

which diverges logarithmically as omega -> 0 and dies off exponentially for
omega >> a.  Everything downstream (mode transformations, teleportation
variances, the discretized circuit oracle) consumes r(omega) only through
cosh r, sinh r and cosh r - sinh r, so this module provides numerically
stable forms of all of them, plus Gaussian wavepacket envelopes and the four
spectral integrals that the closed-form variance expressions are built from:

    i_c    = integral |g|^2 cosh^2 r          (>= 1)
    i_s    = integral |g|^2 sinh^2 r          (= i_c - 1 exactly)
    i_cs   = integral |g|^2 (cosh r - sinh r)^2
    phi_cs = integral g (cosh r - sinh r)

Conventions
-----------
* ``sigma`` is the standard deviation of the *intensity* profile |g|^2, so
  the amplitude envelope is g(omega) ∝ exp(-(omega - omega0)^2 / (4 sigma^2))
  and the window ``omega0 ± 8 sigma`` carries all but ~1e-14 of the mass.
* Wavepackets are truncated below at ``1e-12 * omega0`` because i_c is
  log-divergent whenever g(0) != 0; a wavepacket whose positive-frequency
  truncation removes more than 1e-6 of the intensity mass carries
  ``truncation_warning = True`` and its integral values depend on that
  cutoff by construction.
* All integrals use composite Gauss-Legendre panels, refined (panel
  doubling) until successive values agree to 1e-10 relative, which leaves
  comfortable headroom under the 1e-8 accuracy contract.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss

__all__ = [
    "SpectralConvergenceError",
    "SpectralIntegrals",
    "WavepacketSpec",
    "make_wavepacket",
    "spectral_integrals",
    "squeeze_param",
    "unruh_cosh_sinh",
    "unruh_ch_minus_sh",
]

#: Relative frequency below which wavepackets are truncated (infrared cutoff).
OMEGA_MIN_FACTOR = 1e-12

#: Intensity mass removed by truncation above which the wavepacket is flagged.
TRUNCATION_WARN_THRESHOLD = 1e-6

_GL_ORDER = 16


class SpectralConvergenceError(RuntimeError):
    """Raised when panel-doubling refinement fails to stabilize an integral."""


def _as_array(x) -> tuple[np.ndarray, bool]:
    arr = np.asarray(x, dtype=float)
    return arr, (arr.ndim == 0)


def squeeze_param(omega, a):
    """Per-frequency squeezing parameter r(omega) = arctanh(e^(-pi omega / a)).

    Accepts scalars or arrays; frequencies must be strictly positive (the
    parameter diverges at omega = 0) and ``a`` must be positive.

    Evaluated in two stable branches: ``arctanh(e^(-x))`` directly when the
    argument is small (x = pi*omega/a >= ln 2), and the equivalent
    ``-(1/2) ln tanh(x/2)`` otherwise, so both the deep-exponential tail and
    the logarithmic divergence keep full relative precision.
    """
    w, scalar = _as_array(omega)
    if a <= 0:
        raise ValueError(f"acceleration must be positive, got {a}")
    if np.any(w <= 0):
        raise ValueError("frequencies must be strictly positive")
    x = math.pi * w / a
    u = np.exp(-x)
    with np.errstate(divide="ignore", invalid="ignore"):
        tail = np.arctanh(np.where(u < 0.75, u, 0.0))
        head = -0.5 * np.log(np.tanh(0.5 * x))
    r = np.where(x >= math.log(2.0), tail, head)
    return float(r) if scalar else r


def unruh_cosh_sinh(omega, a):
    """(cosh r, sinh r) of the acceleration squeezing parameter, stably.

    Uses cosh^2 r = 1 / (1 - e^(-2x)) and sinh^2 r = e^(-2x) cosh^2 r with
    x = pi*omega/a, avoiding the catastrophic cancellation of evaluating
    cosh(arctanh(...)) near either limit.
    """
    w, scalar = _as_array(omega)
    if a <= 0:
        raise ValueError(f"acceleration must be positive, got {a}")
    if np.any(w <= 0):
        raise ValueError("frequencies must be strictly positive")
    x = math.pi * w / a
    inv = 1.0 / (-np.expm1(-2.0 * x))
    ch = np.sqrt(inv)
    sh = np.sqrt(np.exp(-2.0 * x) * inv)
    if scalar:
        return float(ch), float(sh)
    return ch, sh


def unruh_ch_minus_sh(omega, a):
    """cosh r - sinh r = sqrt(tanh(pi*omega/(2a))), the per-mode noise gain.

    This is the factor by which the teleported quadrature noise contribution
    of each frequency is suppressed; it tends to 1 for omega >> a (inertial
    limit) and to 0 as omega/a -> 0 (noise-dominated limit).
    """
    w, scalar = _as_array(omega)
    if a <= 0:
        raise ValueError(f"acceleration must be positive, got {a}")
    if np.any(w <= 0):
        raise ValueError("frequencies must be strictly positive")
    out = np.sqrt(np.tanh(0.5 * math.pi * w / a))
    return float(out) if scalar else out


@dataclass(frozen=True)
class WavepacketSpec:
    """Truncated Gaussian wavepacket with its quadrature grid.

    Fields
    ------
    omega0, sigma:
        Center frequency and intensity-profile standard deviation.
    grid:
        (n, 2) array of ordered (frequency, weight) quadrature nodes on the
        truncation window; weights integrate plain functions of omega.
    window:
        (lo, hi) truncation interval, lo = max(1e-12*omega0, omega0 - 8 sigma),
        hi = omega0 + 8 sigma.
    norm_const:
        C such that g(omega) = C exp(-(omega-omega0)^2/(4 sigma^2)) has unit
        intensity integral_window |g|^2 = 1 on this grid.
    truncated_mass:
        Intensity mass of the untruncated Gaussian lying below the window.
    truncation_warning:
        True when truncated_mass exceeds 1e-6; integral values then depend
        on the infrared cutoff.
    panel_edges, order:
        Composite Gauss-Legendre structure, kept so integrators can rebuild
        refined versions of the same grid.
    """

    omega0: float
    sigma: float
    grid: np.ndarray
    window: tuple[float, float]
    norm_const: float
    truncated_mass: float
    truncation_warning: bool
    panel_edges: tuple[float, ...]
    order: int

    @property
    def nodes(self) -> np.ndarray:
        return self.grid[:, 0]

    @property
    def weights(self) -> np.ndarray:
        return self.grid[:, 1]

    def envelope(self, omega) -> np.ndarray:
        """Unnormalized amplitude envelope exp(-(omega-omega0)^2/(4 sigma^2))."""
        w = np.asarray(omega, dtype=float)
        return np.exp(-((w - self.omega0) ** 2) / (4.0 * self.sigma**2))

    def amplitude(self, omega) -> np.ndarray:
        """Normalized amplitude g(omega), zero outside the window."""
        w = np.asarray(omega, dtype=float)
        lo, hi = self.window
        mask = (w >= lo) & (w <= hi)
        return np.where(mask, self.norm_const * self.envelope(w), 0.0)


def _panel_nodes(edges: np.ndarray, order: int) -> np.ndarray:
    """Composite Gauss-Legendre (frequency, weight) rows over given edges."""
    xg, wg = leggauss(order)
    lo = edges[:-1, None]
    hi = edges[1:, None]
    half = 0.5 * (hi - lo)
    nodes = (0.5 * (hi + lo) + half * xg[None, :]).ravel()
    weights = (half * wg[None, :]).ravel()
    return np.column_stack([nodes, weights])


def _build_edges(lo: float, hi: float, omega0: float, sigma: float, n_linear: int) -> np.ndarray:
    """Panel edges: geometric grading into a clipped infrared tail, else uniform.

    When the window is clipped at the infrared cutoff the integrands behave
    like 1/omega near the lower edge, so each decade needs its own panels;
    a geometric ladder from lo up to ~sigma captures that, and uniform
    panels cover the Gaussian bulk.
    """
    bulk_lo = omega0 - 8.0 * sigma
    if lo >= bulk_lo:  # no clipping: plain uniform panels
        return np.linspace(lo, hi, n_linear + 1)
    breakpoint_ = min(sigma, 0.25 * hi)
    breakpoint_ = max(breakpoint_, lo * 10.0)
    decades = math.log10(breakpoint_ / lo)
    n_log = max(8, int(math.ceil(1.5 * decades)))
    log_edges = np.geomspace(lo, breakpoint_, n_log + 1)
    lin_edges = np.linspace(breakpoint_, hi, max(n_linear, 6) + 1)
    return np.concatenate([log_edges[:-1], lin_edges])


def make_wavepacket(omega0: float, sigma: float, resolution: int = 256) -> WavepacketSpec:
    """Build a truncated Gaussian wavepacket and its quadrature grid.

    ``resolution`` is the quadrature-node budget (minimum 16); clipped
    windows may receive extra infrared panels beyond it so that the 1/omega
    tail is resolved decade by decade.
    """
    if omega0 <= 0:
        raise ValueError(f"omega0 must be positive, got {omega0}")
    if sigma <= 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    if resolution < 16:
        raise ValueError(f"resolution must be at least 16, got {resolution}")

    lo = max(OMEGA_MIN_FACTOR * omega0, omega0 - 8.0 * sigma)
    hi = omega0 + 8.0 * sigma
    n_linear = max(2, resolution // _GL_ORDER)
    edges = _build_edges(lo, hi, omega0, sigma, n_linear)
    grid = _panel_nodes(edges, _GL_ORDER)

    intensity = np.exp(-((grid[:, 0] - omega0) ** 2) / (2.0 * sigma**2))
    norm = float(grid[:, 1] @ intensity)
    if norm <= 0 or not math.isfinite(norm):
        raise SpectralConvergenceError(
            f"degenerate wavepacket normalization (norm={norm}) for omega0={omega0}, sigma={sigma}"
        )

    # Intensity mass the positive-frequency truncation removed, measured on
    # the untruncated unit-mass Gaussian N(omega0, sigma^2).
    truncated_mass = 0.5 * math.erfc((omega0 - lo) / (sigma * math.sqrt(2.0)))

    return WavepacketSpec(
        omega0=float(omega0),
        sigma=float(sigma),
        grid=grid,
        window=(lo, hi),
        norm_const=norm**-0.5,
        truncated_mass=truncated_mass,
        truncation_warning=truncated_mass > TRUNCATION_WARN_THRESHOLD,
        panel_edges=tuple(float(e) for e in edges),
        order=_GL_ORDER,
    )


@dataclass(frozen=True)
class SpectralIntegrals:
    """The four wavepacket integrals entering the variance closed forms."""

    i_c: float
    i_s: float
    i_cs: float
    phi_cs: float
    a: float


def _integrals_on_edges(edges: np.ndarray, order: int, omega0: float, sigma: float, a: float):
    grid = _panel_nodes(edges, order)
    w = grid[:, 0]
    q = grid[:, 1]
    envelope = np.exp(-((w - omega0) ** 2) / (4.0 * sigma**2))
    intensity = envelope**2
    norm = q @ intensity
    x = math.pi * w / a
    ch2 = 1.0 / (-np.expm1(-2.0 * x))
    sh2 = np.exp(-2.0 * x) * ch2
    cms2 = np.tanh(0.5 * x)  # (cosh r - sinh r)^2
    i_c = (q @ (intensity * ch2)) / norm
    i_s = (q @ (intensity * sh2)) / norm
    i_cs = (q @ (intensity * cms2)) / norm
    phi_cs = (q @ (envelope * np.sqrt(cms2))) / math.sqrt(norm)
    return np.array([i_c, i_s, i_cs, phi_cs])


def _split_edges(edges: np.ndarray) -> np.ndarray:
    mids = 0.5 * (edges[:-1] + edges[1:])
    out = np.empty(2 * len(edges) - 1)
    out[0::2] = edges
    out[1::2] = mids
    return out


def spectral_integrals(wp: WavepacketSpec, a: float, rel_tol: float = 1e-10) -> SpectralIntegrals:
    """Evaluate i_c, i_s, i_cs and phi_cs for a wavepacket at acceleration ``a``.

    Refines the wavepacket's own panel set by repeated halving until all
    four values are stable to ``rel_tol`` relative between successive
    levels; raises :class:`SpectralConvergenceError` if seven refinements
    are not enough.  The intensity is renormalized per level, which keeps
    the i_c - i_s = 1 identity exact on every grid.
    """
    if a <= 0:
        raise ValueError(f"acceleration must be positive, got {a}")
    edges = np.asarray(wp.panel_edges, dtype=float)
    values = _integrals_on_edges(edges, wp.order, wp.omega0, wp.sigma, a)
    for _ in range(7):
        edges = _split_edges(edges)
        refined = _integrals_on_edges(edges, wp.order, wp.omega0, wp.sigma, a)
        scale = np.maximum(np.abs(refined), 1e-300)
        delta = float(np.max(np.abs(refined - values) / scale))
        values = refined
        if delta <= rel_tol:
            break
    else:
        raise SpectralConvergenceError(
            f"spectral integrals did not stabilize to {rel_tol:g} relative "
            f"(last inter-level change {delta:.3e}) for omega0={wp.omega0}, "
            f"sigma={wp.sigma}, a={a}"
        )
    i_c, i_s, i_cs, phi_cs = (float(v) for v in values)
    if abs(i_c - i_s - 1.0) > 1e-8:
        raise SpectralConvergenceError(
            f"normalization identity violated: i_c - i_s = {i_c - i_s!r} (expected 1)"
        )
    return SpectralIntegrals(i_c=i_c, i_s=i_s, i_cs=i_cs, phi_cs=phi_cs, a=a)
