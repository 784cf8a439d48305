"""Affine Gaussian mode algebra over a labelled bosonic vacuum.

Every operator handled here is an affine combination

    E = d + sum_m ( u_m * a_m + v_m * a_m^dagger )

of annihilation/creation operators of labelled modes plus a c-number
displacement ``d``.  Gaussian circuits (displacements, one- and two-mode
squeezers, beam splitters) map such expressions to each other, so an entire
protocol can be composed by ordinary arithmetic on :class:`OperatorExpr`
values, and vacuum expectation values of products follow from Wick pairing.

Mode labels carry a sector, a chirality (propagation direction) and a
frequency-bin index:

* ``UNRUH_C`` / ``UNRUH_D`` - the two global vacuum-annihilating families an
  accelerated observer's modes decompose into; these ARE vacuum modes, and
  expectation values are taken in their joint vacuum.
* ``RINDLER_I..IV`` - wedge/region modes of the accelerated observer.  They
  do NOT annihilate the global vacuum; :func:`wick_expectation` rejects
  them, and :func:`rindler_to_unruh` rewrites them into the Unruh families
  with the standard thermal Bogoliubov coefficients cosh r(omega),
  sinh r(omega).
* ``AUX`` - ordinary inertial vacuum modes (circuit inputs, resource modes).

Quadrature convention: X(phi) = e^(-i phi) a + e^(i phi) a^dagger, so the
vacuum variance of any quadrature is 1.

Region-to-family mapping (left-movers live in regions IV and II,
right-movers in III and I):

    b_IV  = cosh r * c_left  + sinh r * d_left^dagger
    b_II  = cosh r * d_left  + sinh r * c_left^dagger
    b_III = cosh r * c_right + sinh r * d_right^dagger
    b_I   = cosh r * d_right + sinh r * c_right^dagger
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Sequence

import numpy as np

from .spectral import unruh_cosh_sinh

__all__ = [
    "Chirality",
    "ModeLabel",
    "OperatorExpr",
    "Sector",
    "annihilator",
    "beam_splitter",
    "commutator",
    "creator",
    "displace",
    "mode",
    "pair_contraction",
    "quadrature_variance",
    "rindler_to_unruh",
    "single_mode_squeeze",
    "two_mode_squeeze",
    "wick_expectation",
]

#: Coefficients at or below this magnitude are dropped from term maps.
PRUNE_TOL = 1e-15


class Sector(Enum):
    UNRUH_C = "unruh_c"
    UNRUH_D = "unruh_d"
    RINDLER_I = "rindler_i"
    RINDLER_II = "rindler_ii"
    RINDLER_III = "rindler_iii"
    RINDLER_IV = "rindler_iv"
    AUX = "aux"


_RINDLER_SECTORS = frozenset(
    {Sector.RINDLER_I, Sector.RINDLER_II, Sector.RINDLER_III, Sector.RINDLER_IV}
)


class Chirality(Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class ModeLabel:
    """Identity of one bosonic mode: sector, propagation direction, bin."""

    sector: Sector
    chirality: Chirality
    bin: int

    def _key(self):
        return (self.sector.value, self.chirality.value, self.bin)

    def __repr__(self) -> str:  # compact: c_L[3], b4_R[0], aux[1]
        short = {
            Sector.UNRUH_C: "c",
            Sector.UNRUH_D: "d",
            Sector.RINDLER_I: "b1",
            Sector.RINDLER_II: "b2",
            Sector.RINDLER_III: "b3",
            Sector.RINDLER_IV: "b4",
            Sector.AUX: "aux",
        }[self.sector]
        wing = {Chirality.LEFT: "L", Chirality.RIGHT: "R"}[self.chirality]
        return f"{short}_{wing}[{self.bin}]"


class OperatorExpr:
    """Affine operator: displacement + {(label, is_dagger): coefficient} terms.

    Instances are treated as immutable; every operation returns a new
    expression with exact-zero (below ``PRUNE_TOL``) coefficients removed.
    """

    __slots__ = ("displacement", "terms")

    def __init__(
        self,
        displacement: complex = 0.0,
        terms: Mapping[tuple[ModeLabel, bool], complex] | None = None,
    ):
        d = complex(displacement)
        if not (math.isfinite(d.real) and math.isfinite(d.imag)):
            raise ValueError(f"non-finite displacement {d!r}")
        object.__setattr__(self, "displacement", d)
        pruned: dict[tuple[ModeLabel, bool], complex] = {}
        if terms:
            for key, coeff in terms.items():
                c = complex(coeff)
                if not (math.isfinite(c.real) and math.isfinite(c.imag)):
                    raise ValueError(f"non-finite coefficient {c!r} for {key[0]!r}")
                if abs(c) > PRUNE_TOL:
                    pruned[key] = c
        object.__setattr__(self, "terms", pruned)

    def __setattr__(self, name, value):  # immutability guard
        raise AttributeError("OperatorExpr is immutable")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, OperatorExpr):
            terms = dict(self.terms)
            for key, c in other.terms.items():
                terms[key] = terms.get(key, 0.0) + c
            return OperatorExpr(self.displacement + other.displacement, terms)
        return OperatorExpr(self.displacement + complex(other), self.terms)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-1.0) * (other if isinstance(other, OperatorExpr) else complex(other))

    def __rsub__(self, other):
        return (-1.0) * self + complex(other)

    def __mul__(self, scalar):
        if isinstance(scalar, OperatorExpr):
            raise TypeError(
                "operator products are not expressions; pass a sequence to wick_expectation"
            )
        s = complex(scalar)
        return OperatorExpr(
            self.displacement * s, {k: c * s for k, c in self.terms.items()}
        )

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1.0

    def dagger(self) -> "OperatorExpr":
        """Hermitian adjoint: conjugate coefficients, flip dagger flags."""
        return OperatorExpr(
            self.displacement.conjugate(),
            {
                (label, not dag): c.conjugate()
                for (label, dag), c in self.terms.items()
            },
        )

    def centered(self) -> "OperatorExpr":
        """The fluctuation part: same terms, zero displacement."""
        return OperatorExpr(0.0, self.terms)

    # -- inspection -------------------------------------------------------

    def coefficient(self, label: ModeLabel, dagger: bool = False) -> complex:
        return self.terms.get((label, dagger), 0.0)

    def modes(self) -> frozenset[ModeLabel]:
        return frozenset(label for (label, _) in self.terms)

    def sectors(self) -> frozenset[Sector]:
        return frozenset(label.sector for (label, _) in self.terms)

    def __repr__(self) -> str:
        parts = []
        if self.displacement != 0:
            parts.append(f"{self.displacement:.6g}")
        for (label, dag), c in sorted(
            self.terms.items(), key=lambda kv: (kv[0][0]._key(), kv[0][1])
        ):
            op = f"{label!r}" + ("†" if dag else "")
            parts.append(f"({c:.6g})·{op}")
        return "OperatorExpr(" + (" + ".join(parts) if parts else "0") + ")"


# -- constructors ---------------------------------------------------------


def annihilator(label: ModeLabel) -> OperatorExpr:
    return OperatorExpr(0.0, {(label, False): 1.0})


def creator(label: ModeLabel) -> OperatorExpr:
    return OperatorExpr(0.0, {(label, True): 1.0})


def mode(sector: Sector, chirality: Chirality, bin_index: int) -> OperatorExpr:
    """Annihilation operator of the mode (sector, chirality, bin_index)."""
    return annihilator(ModeLabel(sector, chirality, bin_index))


# -- canonical bilinears --------------------------------------------------


def commutator(e1: OperatorExpr, e2: OperatorExpr) -> complex:
    """[E1, E2] as a c-number (exact for affine expressions).

    [E1, E2] = sum_m (u1_m v2_m - v1_m u2_m) over shared mode labels.
    """
    total = 0.0 + 0.0j
    for (label, dag), c1 in e1.terms.items():
        if dag:
            total -= c1 * e2.terms.get((label, False), 0.0)
        else:
            total += c1 * e2.terms.get((label, True), 0.0)
    return total


def pair_contraction(e1: OperatorExpr, e2: OperatorExpr) -> complex:
    """Connected vacuum pairing <F1 F2> of the fluctuation parts.

    Only <a_m a_m^dagger> = 1 survives in the vacuum, so this is
    sum_m u1_m * v2_m.  Displacements are ignored.
    """
    total = 0.0 + 0.0j
    if len(e1.terms) <= len(e2.terms):
        for (label, dag), c1 in e1.terms.items():
            if not dag:
                total += c1 * e2.terms.get((label, True), 0.0)
    else:
        for (label, dag), c2 in e2.terms.items():
            if dag:
                total += e1.terms.get((label, False), 0.0) * c2
    return total


def _reject_non_vacuum(product: Iterable[OperatorExpr]) -> None:
    for expr in product:
        bad = expr.sectors() & _RINDLER_SECTORS
        if bad:
            names = ", ".join(sorted(s.value for s in bad))
            raise ValueError(
                f"expectation over non-vacuum sectors [{names}]: rewrite with "
                "rindler_to_unruh before taking vacuum expectation values"
            )


def wick_expectation(product: Sequence[OperatorExpr]) -> complex:
    """Vacuum expectation of an ordered product of 1, 2 or 4 expressions.

    Displacements are kept (the state is the displaced Gaussian vacuum the
    expressions encode), and the Gaussian moment expansion is exact:
    scalars times even-order pairings, odd fluctuation moments vanishing.
    Rindler-sector labels are rejected - they do not annihilate the vacuum.
    """
    exprs = list(product)
    if len(exprs) not in (1, 2, 4):
        raise ValueError(f"wick_expectation supports products of length 1, 2 or 4, got {len(exprs)}")
    _reject_non_vacuum(exprs)
    d = [e.displacement for e in exprs]
    if len(exprs) == 1:
        return d[0]
    if len(exprs) == 2:
        return d[0] * d[1] + pair_contraction(exprs[0], exprs[1])
    e1, e2, e3, e4 = exprs
    p12, p13, p14 = (pair_contraction(e1, x) for x in (e2, e3, e4))
    p23, p24 = (pair_contraction(e2, x) for x in (e3, e4))
    p34 = pair_contraction(e3, e4)
    return (
        d[0] * d[1] * d[2] * d[3]
        + d[0] * d[1] * p34
        + d[0] * d[2] * p24
        + d[0] * d[3] * p23
        + d[1] * d[2] * p14
        + d[1] * d[3] * p13
        + d[2] * d[3] * p12
        + p12 * p34
        + p13 * p24
        + p14 * p23
    )


def quadrature_variance(expr: OperatorExpr, phi: float = 0.0) -> float:
    """Variance of X(phi) = e^(-i phi) E + e^(i phi) E^dagger in the vacuum."""
    x = cmath.exp(-1j * phi) * expr
    x = x + x.dagger()
    return float(pair_contraction(x, x).real)


# -- Gaussian circuit elements -------------------------------------------


def displace(expr: OperatorExpr, alpha: complex) -> OperatorExpr:
    """Displacement: E -> E + alpha (the mode acquires amplitude alpha)."""
    return expr + complex(alpha)


def two_mode_squeeze(
    a1: OperatorExpr, a2: OperatorExpr, r: float, phase: float = 0.0
) -> tuple[OperatorExpr, OperatorExpr]:
    """Two-mode squeezer: a1 -> ch a1 + e^(i phase) sh a2^dagger, and symmetrically.

    ``r`` is the squeezing strength (our amplifier/EPR convention is the
    real + sign at phase = 0).  The two inputs must not share any mode
    label - squeezing a wire against itself is not a two-mode operation.
    """
    if not math.isfinite(r):
        raise ValueError(f"squeezing strength must be finite, got {r}")
    shared = a1.modes() & a2.modes()
    if shared:
        raise ValueError(f"two_mode_squeeze inputs share mode labels: {sorted(map(repr, shared))}")
    ch = math.cosh(r)
    sh = math.sinh(r) * cmath.exp(1j * phase)
    out1 = ch * a1 + sh * a2.dagger()
    out2 = ch * a2 + sh * a1.dagger()
    return out1, out2


def single_mode_squeeze(a: OperatorExpr, r_s: float) -> OperatorExpr:
    """Single-mode squeezer: a -> ch a + sh a^dagger (X(0) stretched by e^r_s)."""
    if not math.isfinite(r_s):
        raise ValueError(f"squeezing strength must be finite, got {r_s}")
    return math.cosh(r_s) * a + math.sinh(r_s) * a.dagger()


def beam_splitter(
    a1: OperatorExpr, a2: OperatorExpr, eta: float
) -> tuple[OperatorExpr, OperatorExpr]:
    """Beam splitter of transmissivity eta:

        a1 -> sqrt(eta) a1 - sqrt(1-eta) a2
        a2 -> sqrt(1-eta) a1 + sqrt(eta) a2
    """
    if not (0.0 <= eta <= 1.0):
        raise ValueError(f"transmissivity must lie in [0, 1], got {eta}")
    t = math.sqrt(eta)
    s = math.sqrt(1.0 - eta)
    return t * a1 - s * a2, s * a1 + t * a2


# -- region -> vacuum-family rewriting -------------------------------------

_REGION_RULES: dict[Sector, tuple[Chirality, Sector, Sector]] = {
    # region: (required chirality, family of the direct term, family of the dagger term)
    Sector.RINDLER_IV: (Chirality.LEFT, Sector.UNRUH_C, Sector.UNRUH_D),
    Sector.RINDLER_II: (Chirality.LEFT, Sector.UNRUH_D, Sector.UNRUH_C),
    Sector.RINDLER_III: (Chirality.RIGHT, Sector.UNRUH_C, Sector.UNRUH_D),
    Sector.RINDLER_I: (Chirality.RIGHT, Sector.UNRUH_D, Sector.UNRUH_C),
}


def rindler_to_unruh(expr: OperatorExpr, a: float, grid: np.ndarray) -> OperatorExpr:
    """Rewrite region-mode labels into the vacuum-annihilating families.

    ``grid`` maps bin indices to frequencies; each region annihilator of
    frequency omega becomes ch(omega) * (family op) + sh(omega) * (partner
    family op)^dagger per the table in the module docstring, with
    (ch, sh) = (cosh, sinh) of the acceleration squeezing parameter at
    acceleration ``a``.  Non-region labels pass through unchanged.
    """
    freqs = np.asarray(grid, dtype=float)
    if freqs.ndim != 1 or len(freqs) == 0:
        raise ValueError("grid must be a non-empty 1-D array of bin frequencies")
    acc: dict[tuple[ModeLabel, bool], complex] = {}

    def _bump(key: tuple[ModeLabel, bool], value: complex) -> None:
        acc[key] = acc.get(key, 0.0) + value

    for (label, dag), coeff in expr.terms.items():
        if label.sector not in _RINDLER_SECTORS:
            _bump((label, dag), coeff)
            continue
        required, direct_family, partner_family = _REGION_RULES[label.sector]
        if label.chirality is not required:
            raise ValueError(
                f"label {label!r} has chirality {label.chirality.value} but region "
                f"{label.sector.value} holds {required.value}-movers; no mapping exists"
            )
        if not (0 <= label.bin < len(freqs)):
            raise ValueError(
                f"label {label!r} has no grid coefficient (grid holds {len(freqs)} bins)"
            )
        ch, sh = unruh_cosh_sinh(float(freqs[label.bin]), a)
        direct = ModeLabel(direct_family, label.chirality, label.bin)
        partner = ModeLabel(partner_family, label.chirality, label.bin)
        if dag:  # image of b^dagger is the adjoint of the image of b
            _bump((direct, True), coeff * ch)
            _bump((partner, False), coeff * sh)
        else:
            _bump((direct, False), coeff * ch)
            _bump((partner, True), coeff * sh)
    return OperatorExpr(expr.displacement, acc)
