"""Continuous-variable teleportation from a uniformly accelerated sender.

The package computes the output statistics of an all-optical teleportation
protocol in which a uniformly accelerated observer sends a wavepacket mode
to an inertial receiver, with the acceleration-induced two-mode squeezing
of the vacuum serving as the entanglement resource:

* :mod:`.spectral` - acceleration squeezing spectrum, wavepacket envelopes
  and the four closed-form integrals (i_c, i_s, i_cs, phi_cs).
* :mod:`.mode_algebra` - affine operator expressions over labelled modes,
  Gaussian gates, Wick expectation values, region-to-vacuum-family maps.
* :mod:`.teleportation` - closed-form variance reports for coherent and
  squeezed payloads, plus the single-frequency protocol circuit.
* :mod:`.oracle` - independent numerical cross-checks: a discretized
  gate-by-gate circuit evaluated by mechanical Wick pairing, and a
  truncated-Fock brute-force simulation.
* :mod:`.cli` - ``rindler-teleport`` command line: figure sweeps, generic
  parameter sweeps and the self-verification suite.
"""

from .mode_algebra import (
    Chirality,
    ModeLabel,
    OperatorExpr,
    Sector,
    beam_splitter,
    commutator,
    displace,
    mode,
    quadrature_variance,
    rindler_to_unruh,
    single_mode_squeeze,
    two_mode_squeeze,
    wick_expectation,
)
from .oracle import (
    DiscretizedCircuit,
    FockCheckReport,
    GridMismatchError,
    IdentityRow,
    OracleConvergenceError,
    TruncationError,
    appendix_expectations,
    build_displaced_circuit,
    build_squeezed_circuit,
    fock_check_inertial,
    photon_number_variance_lo,
    refine_circuit,
)
from .spectral import (
    SpectralConvergenceError,
    SpectralIntegrals,
    WavepacketSpec,
    make_wavepacket,
    spectral_integrals,
    squeeze_param,
    unruh_ch_minus_sh,
    unruh_cosh_sinh,
)
from .teleportation import (
    ScenarioParams,
    VarianceReport,
    conformal_residual,
    delta_decoherence,
    displaced_variance,
    inertial_teleport_output,
    narrowband_variance,
    squeezed_variance,
)

__version__ = "0.1.0"

__all__ = [
    "Chirality",
    "DiscretizedCircuit",
    "FockCheckReport",
    "GridMismatchError",
    "IdentityRow",
    "ModeLabel",
    "OperatorExpr",
    "OracleConvergenceError",
    "ScenarioParams",
    "Sector",
    "SpectralConvergenceError",
    "SpectralIntegrals",
    "TruncationError",
    "VarianceReport",
    "WavepacketSpec",
    "appendix_expectations",
    "beam_splitter",
    "build_displaced_circuit",
    "build_squeezed_circuit",
    "commutator",
    "conformal_residual",
    "delta_decoherence",
    "displace",
    "displaced_variance",
    "fock_check_inertial",
    "inertial_teleport_output",
    "make_wavepacket",
    "mode",
    "narrowband_variance",
    "photon_number_variance_lo",
    "quadrature_variance",
    "refine_circuit",
    "rindler_to_unruh",
    "single_mode_squeeze",
    "spectral_integrals",
    "squeeze_param",
    "squeezed_variance",
    "two_mode_squeeze",
    "unruh_ch_minus_sh",
    "unruh_cosh_sinh",
    "wick_expectation",
]
