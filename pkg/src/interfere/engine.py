"""Interference of two probabilistic alternatives.

Writing a combined probability as

    p = p1 + p2 + 2*sqrt(p1*p2)*lam

defines the normalized deviation ``lam`` of p from the classical additive
rule.  |lam| <= 1 admits the trigonometric parameterization lam = cos(theta),
realized by complex amplitudes sqrt(p1) + e^{i theta} sqrt(p2); |lam| >= 1
admits the hyperbolic one lam = +/-cosh(theta), realized by split-complex
amplitudes sqrt(p1) +/- e^{j theta} sqrt(p2).  |lam| = 1 sits on the shared
boundary and fits both pictures.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from . import hyperbolic
from .errors import DegenerateContextError, ValidationError
from .numeric import (
    as_probability,
    cross_term,
    phase_cos,
    require_probability,
    sqrt_keeping_exact,
)


class Regime(enum.Enum):
    """Which parameterization of the normalized deviation applies."""

    TRIGONOMETRIC = "trigonometric"
    HYPERBOLIC = "hyperbolic"
    BOUNDARY = "boundary"  # |lam| = 1: compatible with both parameterizations
    DEGENERATE = "degenerate"  # p1*p2 = 0: lam undefined


def lambda_of(p1, p2, p):
    """Normalized deviation (p - p1 - p2) / (2*sqrt(p1*p2)).

    Exact when the inputs are exact and p1*p2 is a perfect square; never
    clamped.  Undefined (DegenerateContextError) when p1*p2 = 0.
    """
    require_probability(p1, "p1")
    require_probability(p2, "p2")
    require_probability(p, "p")
    if p1 * p2 == 0:
        raise DegenerateContextError(
            "normalized deviation is undefined when p1*p2 = 0"
        )
    return (p - (p1 + p2)) / (2 * sqrt_keeping_exact(p1 * p2))


def classify(lam) -> Regime:
    """Regime of a finite deviation: |lam| < 1, = 1, or > 1."""
    if isinstance(lam, float) and not math.isfinite(lam):
        raise ValidationError(f"deviation must be finite, got {lam!r}")
    magnitude = abs(lam)
    if magnitude < 1:
        return Regime.TRIGONOMETRIC
    if magnitude == 1:
        return Regime.BOUNDARY
    return Regime.HYPERBOLIC


def phase_of(lam):
    """Canonical (phase, sign) for a finite deviation.

    |lam| <= 1: (arccos(lam), +1) with phase in [0, pi]; |lam| > 1:
    (arccosh(|lam|), sign(lam)) with phase > 0.  On the boundary |lam| = 1 the
    trigonometric parameterization is returned (phase 0 or pi, sign +1); the
    hyperbolic reading there would be (0, sign(lam)).
    """
    if isinstance(lam, float) and not math.isfinite(lam):
        raise ValidationError(f"deviation must be finite, got {lam!r}")
    if abs(lam) <= 1:
        return math.acos(lam), 1
    return math.acosh(abs(lam)), (1 if lam > 0 else -1)


def combine(p1, p2, lam):
    """The deviation form p1 + p2 + 2*sqrt(p1*p2)*lam, unvalidated.

    This is the raw rule shared by both parameterizations; exactness is
    preserved for exact inputs with lam in {0, +1, -1} or a perfect-square
    p1*p2.
    """
    return p1 + p2 + cross_term(2 * sqrt_keeping_exact(p1 * p2), lam)


def interfere_trig(p1, p2, theta):
    """Trigonometric rule p1 + p2 + 2*sqrt(p1*p2)*cos(theta).

    Equals the squared modulus |sqrt(p1) + e^{i theta} sqrt(p2)|**2.  A result
    outside [0, 1] (possible once p1 + p2 + 2*sqrt(p1*p2) > 1) raises
    NotAProbabilityError with the raw value attached, never a clamp.
    """
    require_probability(p1, "p1")
    require_probability(p2, "p2")
    raw = combine(p1, p2, phase_cos(theta))
    return as_probability(raw, what="trigonometric interference")


def interfere_hyp(p1, p2, theta, sign):
    """Hyperbolic rule p1 + p2 + sign * 2*sqrt(p1*p2)*cosh(theta).

    Equals norm_sq(sqrt(p1) + sign * e^{j theta} sqrt(p2)) over the
    split-complex numbers.  Outside the validity window the result escapes
    [0, 1] and NotAProbabilityError is raised with the raw value.
    """
    require_probability(p1, "p1")
    require_probability(p2, "p2")
    if sign not in (1, -1):
        raise ValidationError(f"sign must be +1 or -1, got {sign!r}")
    raw = combine(p1, p2, sign * math.cosh(theta))
    return as_probability(raw, what="hyperbolic interference")


def amplitudes_trig(p1, p2, theta):
    """Complex amplitude pair (sqrt(p1), e^{i theta} * sqrt(p2)).

    The squared modulus of their sum reproduces interfere_trig.
    """
    require_probability(p1, "p1")
    require_probability(p2, "p2")
    return complex(math.sqrt(p1)), cmath.exp(1j * theta) * math.sqrt(p2)


def amplitudes_hyp(p1, p2, theta, sign):
    """Split-complex amplitude pair (sqrt(p1), sign * e^{j theta} * sqrt(p2)).

    norm_sq of their sum reproduces interfere_hyp.
    """
    require_probability(p1, "p1")
    require_probability(p2, "p2")
    if sign not in (1, -1):
        raise ValidationError(f"sign must be +1 or -1, got {sign!r}")
    first = hyperbolic.HyperbolicNumber(math.sqrt(p1), 0)
    second = hyperbolic.exp(theta) * (sign * math.sqrt(p2))
    return first, second


@dataclass(frozen=True)
class InterferenceRecord:
    """A fitted triple (p1, p2, p) with its deviation, regime, and phase."""

    p1: float
    p2: float
    p: float
    lam: float
    regime: Regime
    phase: float
    sign: int

    def reconstruct(self):
        """Recompute p from the fitted phase; inverse of the fit."""
        if self.regime is Regime.HYPERBOLIC:
            return interfere_hyp(self.p1, self.p2, self.phase, self.sign)
        return interfere_trig(self.p1, self.p2, self.phase)

    def residual(self) -> float:
        return abs(self.reconstruct() - self.p)


def fit_record(p1, p2, p) -> InterferenceRecord:
    """Fit the deviation form to a measured triple.

    Requires p1*p2 > 0 (DegenerateContextError otherwise: with one
    alternative missing there is nothing to interfere and lam is undefined).
    """
    lam = lambda_of(p1, p2, p)
    regime = classify(lam)
    phase, sign = phase_of(lam)
    return InterferenceRecord(p1, p2, p, lam, regime, phase, sign)


def phases_from_deviation(u, grid):
    """Pointwise phases theta(s) = arccos(u(s)) for a caller-supplied
    deviation parameterization u with |u(s)| <= 1 on the grid.

    Returns (thetas, jumps): jumps lists the indices i whose phase step
    |theta[i] - theta[i-1]| exceeds pi/2, the tell that the arccos picture is
    discontinuous in s and a different linearization may suit the experiment
    better.
    """
    thetas = []
    for s in grid:
        value = u(s)
        if not -1 <= value <= 1:
            raise ValidationError(
                f"deviation parameterization left [-1, 1]: u({s!r}) = {value!r}"
            )
        thetas.append(math.acos(value))
    jumps = [
        i
        for i in range(1, len(thetas))
        if abs(thetas[i] - thetas[i - 1]) > math.pi / 2
    ]
    return thetas, jumps
