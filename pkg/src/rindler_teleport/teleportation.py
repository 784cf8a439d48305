"""Closed-form output statistics of the accelerated teleportation protocol.

The protocol teleports a wavepacket mode of a uniformly accelerated sender
to an inertial receiver using only passive/active Gaussian optics: a strong
two-mode-squeezing amplifier plays the classical channel, a beam splitter
of matched transmissivity performs the displacement, and the receiver-side
half of the acceleration-induced two-mode squeezing is consumed as the
entanglement resource.

With the teleported quadrature measured against a bright local-oscillator
copy of the wavepacket (self-referencing homodyne), its variance splits
exactly into

    total = thermal_noise + qnl_or_decoherence

where the thermal term 2 * i_cs * (i_c + i_s) collects the contributions of
the modes on the far side of the horizon, and the second term is the
quantum-noise limit 1 for a coherent-state payload or the phase-dependent
decoherence function Delta(phi) for a squeezed payload.  Input states are
pure, so any variance product above 1 diagnoses decoherence inherited from
the acceleration.

All formulas here are strong-amplification limits; the discretized circuit
oracle cross-checks them at large finite gain.  Quadrature convention:
X(phi) = e^(-i phi) a + e^(i phi) a^dagger, vacuum variance 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .mode_algebra import (
    Chirality,
    OperatorExpr,
    Sector,
    beam_splitter,
    mode,
    two_mode_squeeze,
)
from .spectral import WavepacketSpec, spectral_integrals, squeeze_param

__all__ = [
    "ScenarioParams",
    "VarianceReport",
    "conformal_residual",
    "delta_decoherence",
    "displaced_variance",
    "inertial_teleport_output",
    "narrowband_variance",
    "squeezed_variance",
]


@dataclass(frozen=True)
class ScenarioParams:
    """One protocol configuration.

    ``r_s = 0`` is the coherent-state (displaced) scenario; ``r_s > 0``
    teleports a squeezed payload and makes the output variance depend on
    the local-oscillator phase ``phi``.  ``channel_gain_r = inf`` selects
    the strong-amplification limit the closed forms describe.
    """

    a: float
    wavepacket: WavepacketSpec
    r_s: float = 0.0
    phi: float = 0.0
    channel_gain_r: float = math.inf


@dataclass(frozen=True)
class VarianceReport:
    """Quadrature-variance decomposition of the teleported output.

    Invariants: ``total == thermal_noise + qnl_or_decoherence`` exactly
    (the two parts are built from disjoint mode families), and
    ``purity_product`` - the product of the total variances at phi = 0 and
    phi = pi/2 - is >= 1 for any physical state, with equality only for a
    pure Gaussian output.
    """

    total: float
    thermal_noise: float
    qnl_or_decoherence: float
    purity_product: float


def displaced_variance(a: float, wp: WavepacketSpec) -> VarianceReport:
    """Output variance for a coherent-state payload (phase independent).

    total = 2 i_cs (i_c + i_s) + 1; the quantum-noise-limit part is exactly
    1 because a coherent payload adds no excess left-mover noise.
    """
    ints = spectral_integrals(wp, a)
    thermal = 2.0 * ints.i_cs * (ints.i_c + ints.i_s)
    total = thermal + 1.0
    return VarianceReport(
        total=total,
        thermal_noise=thermal,
        qnl_or_decoherence=1.0,
        purity_product=total * total,
    )


def narrowband_variance(omega0: float, a: float) -> float:
    """Sigma -> 0 limit of the displaced-payload variance.

    With r0 the acceleration squeezing parameter at the carrier frequency,
    i_cs -> e^(-2 r0) and i_c + i_s -> cosh 2 r0, giving
    (1 + e^(-4 r0)) + 1.  Tends to 3 in the inertial limit (r0 -> 0) and
    to 2 (the quantum-noise limit) for omega0 << a.
    """
    r0 = squeeze_param(omega0, a)
    return 2.0 + math.exp(-4.0 * r0)


def delta_decoherence(r_s: float, i_c: float, phi: float) -> float:
    """Phase-dependent payload term Delta(phi) for a squeezed payload.

    Delta(phi) = cosh 2 r_s
               + 4 i_c (i_c - 1) (cosh 2 r_s - 2 cosh r_s + 1)
               + 2 sinh r_s [ (2 i_c - 1)^2 cosh r_s - 4 i_c (i_c - 1) ] cos 2 phi

    Reduces to the pure squeezed-vacuum variance e^(2 r_s cos-profile) at
    i_c = 1 (inertial limit) and to 1 at r_s = 0; the i_c-growing part is
    the decoherence the acceleration inflicts on the payload itself.
    """
    if not math.isfinite(r_s) or r_s < 0:
        raise ValueError(f"payload squeezing must be finite and non-negative, got {r_s}")
    if i_c < 1.0:
        raise ValueError(f"i_c must be >= 1 (it is 1 + i_s), got {i_c}")
    c1 = math.cosh(r_s)
    s1 = math.sinh(r_s)
    c2 = math.cosh(2.0 * r_s)
    ii = i_c * (i_c - 1.0)
    return (
        c2
        + 4.0 * ii * (c2 - 2.0 * c1 + 1.0)
        + 2.0 * s1 * ((2.0 * i_c - 1.0) ** 2 * c1 - 4.0 * ii) * math.cos(2.0 * phi)
    )


def squeezed_variance(a: float, wp: WavepacketSpec, r_s: float, phi: float) -> VarianceReport:
    """Output variance for a squeezed payload at local-oscillator phase phi.

    total(phi) = 2 i_cs (i_c + i_s) + Delta(phi).  The purity product uses
    the extremal phases 0 and pi/2.
    """
    ints = spectral_integrals(wp, a)
    thermal = 2.0 * ints.i_cs * (ints.i_c + ints.i_s)
    dec = delta_decoherence(r_s, ints.i_c, phi)
    v0 = thermal + delta_decoherence(r_s, ints.i_c, 0.0)
    v90 = thermal + delta_decoherence(r_s, ints.i_c, 0.5 * math.pi)
    return VarianceReport(
        total=thermal + dec,
        thermal_noise=thermal,
        qnl_or_decoherence=dec,
        purity_product=v0 * v90,
    )


def conformal_residual(a: float, wp: WavepacketSpec) -> float:
    """Amplitude-weighted noise-gain integral phi_cs = integral g (ch - sh).

    Measures how far the wavepacket is from the perfectly teleported
    (inertial, phi_cs -> 1) regime; it controls the residual coherent
    amplitude the protocol preserves.
    """
    return spectral_integrals(wp, a).phi_cs


# -- single-frequency (inertial) protocol circuit --------------------------


def inertial_teleport_output(r: float, r_omega: float) -> OperatorExpr:
    """Output mode of the single-frequency all-optical teleporter.

    Composes the amplifier (gain ``r``) on the input against one half of a
    two-mode-squeezed resource (strength ``r_omega``), then the matched
    beam splitter (transmissivity 1/cosh^2 r) against the other half:

      a_out = a_in + tanh(r) (a_i^dagger - a_j)
            = a_in + tanh(r) e^(-r_omega) (v1^dagger - v2)

    with (a_i, a_j) the resource halves built from vacuum modes (v1, v2).
    ``r = math.inf`` returns the exact strong-amplification limit
    (tanh r -> 1); the added-noise factor e^(-r_omega) then shows the
    resource squeezing suppressing the teleportation penalty.
    """
    if r < 0 or math.isnan(r):
        raise ValueError(f"amplifier gain must be non-negative, got {r}")
    if not math.isfinite(r_omega) or r_omega < 0:
        raise ValueError(f"resource squeezing must be finite and non-negative, got {r_omega}")
    a_in = mode(Sector.AUX, Chirality.LEFT, 0)
    v1 = mode(Sector.AUX, Chirality.LEFT, 1)
    v2 = mode(Sector.AUX, Chirality.LEFT, 2)
    res_i, res_j = two_mode_squeeze(v1, v2, r_omega)
    if math.isinf(r):
        return a_in + res_i.dagger() - res_j
    wire, _ = two_mode_squeeze(a_in, res_i, r)
    eta = 1.0 / math.cosh(r) ** 2
    out, _ = beam_splitter(wire, res_j, eta)
    return out
