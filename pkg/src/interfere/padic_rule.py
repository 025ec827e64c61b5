"""The p-adic amplitude rule for two alternatives.

Amplitudes are p-adic integers alpha_i = p**l_i * unit, so the individual
probabilities P_i = |alpha_i|_p**2 = p**(-2*l_i) are exact powers of p, and
the combined probability is P = |alpha_1 + eps*alpha_2|_p**2 for a unit eps.
The ultrametric decides everything:

  case A, P1 > P2:  P = P1 exactly, and lam = -sqrt(P2/P1) / 2;
  case B, P1 < P2:  symmetric, lam = -sqrt(P1/P2) / 2;
  case C, P1 = P2:  P = c * P1 with the unit cross factor
                    c = |e1 + eps*e2|_p**2 in [0, 1], and lam = c/2 - 1.

Hence lam always lies in [-1, 0]: cases A/B inside (-1/2, 0), case C inside
[-1, -1/2], so the equivalent phase angle arccos(lam) is confined to
[pi/2, pi].  All values here are exact rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateContextError, ValidationError
from .numeric import exact_sqrt
from .padic import PadicRational, is_prime, prime_multiplicity


def _lift(p: int, value, name: str) -> PadicRational:
    if isinstance(value, PadicRational):
        if value.p != p:
            raise ValidationError(f"{name} carries prime {value.p}, expected {p}")
        return value
    return PadicRational(p, Fraction(value))


@dataclass(frozen=True)
class PadicAmplitudePair:
    """Two nonzero p-adic integer amplitudes and a unit interference factor.

    Amplitudes must have order >= 0 so that their squared valuations are
    probabilities (<= 1); eps must sit on the unit sphere |eps|_p = 1.
    """

    p: int
    alpha1: PadicRational
    alpha2: PadicRational
    epsilon: PadicRational

    def __post_init__(self):
        object.__setattr__(self, "alpha1", _lift(self.p, self.alpha1, "alpha1"))
        object.__setattr__(self, "alpha2", _lift(self.p, self.alpha2, "alpha2"))
        object.__setattr__(self, "epsilon", _lift(self.p, self.epsilon, "epsilon"))
        for name in ("alpha1", "alpha2"):
            amp = getattr(self, name)
            if amp.value == 0:
                raise DegenerateContextError(f"{name} must be nonzero")
            if amp.order < 0:
                raise ValidationError(
                    f"{name} must be a p-adic integer (order >= 0) so that "
                    f"|{name}|_p**2 is a probability; got order {amp.order}"
                )
        if self.epsilon.abs() != 1:
            raise ValidationError(
                f"epsilon must be a p-adic unit (|eps|_p = 1), got |eps|_p = {self.epsilon.abs()}"
            )


@dataclass(frozen=True)
class PadicInterference:
    """Outcome of the p-adic rule: exact probabilities, case, and deviation."""

    p: int
    case: str  # "A" (P1 > P2), "B" (P1 < P2), or "C" (P1 = P2)
    probability: Fraction
    p1: Fraction
    p2: Fraction
    lam: Fraction
    cross_factor: Fraction | None  # c, case C only

    @property
    def theta(self) -> float:
        """Equivalent trigonometric phase arccos(lam), in [pi/2, pi]."""
        return math.acos(self.lam)


def padic_interfere(pair: PadicAmplitudePair) -> PadicInterference:
    """Apply P = |alpha1 + eps*alpha2|_p**2 and classify the case.

    Everything is computed with exact valuations; the deviation lam is the
    exact rational that makes P = P1 + P2 + 2*sqrt(P1*P2)*lam hold.
    """
    p1 = pair.alpha1.abs() ** 2
    p2 = pair.alpha2.abs() ** 2
    total = pair.alpha1 + pair.epsilon * pair.alpha2
    probability = total.abs() ** 2
    if p1 > p2:
        case = "A"
        ratio_root = exact_sqrt(p2 / p1)
        lam = -ratio_root / 2
        cross = None
    elif p1 < p2:
        case = "B"
        ratio_root = exact_sqrt(p1 / p2)
        lam = -ratio_root / 2
        cross = None
    else:
        case = "C"
        cross = probability / p1
        lam = cross / 2 - 1
    return PadicInterference(pair.p, case, probability, p1, p2, lam, cross)


def lambda_range_check(pair: PadicAmplitudePair):
    """(lam, theta, within_claimed_range) for an amplitude pair.

    The claimed range is (-1/2, 0) for cases A/B and [-1, -1/2] for case C,
    which pins theta = arccos(lam) inside [pi/2, pi]; the boolean is True on
    every valid input.
    """
    result = padic_interfere(pair)
    if result.case == "C":
        within = Fraction(-1) <= result.lam <= Fraction(-1, 2)
    else:
        within = Fraction(-1, 2) < result.lam < 0
    return result.lam, result.theta, within


@dataclass(frozen=True)
class SlitSample:
    """One symmetric two-slit sample: interference factor eps and exact P."""

    epsilon: int
    multiplicity: int  # v_p(1 + eps)
    probability: Fraction


def padic_slit_profile(p: int, l: int, eps_max: int):
    """Symmetric two-slit table with unit parts fixed to 1.

    Both amplitudes are p**l (so P1 = P2 = A = p**(-2l)) and eps runs over
    the naturals not divisible by p, up to eps_max.  Then

        P(eps) = A * p**(-2 * v_p(1 + eps)),

    exactly: brightness drops precisely where 1 + eps is divisible by p, by
    two orders of magnitude in base p per power.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ValidationError(f"p must be prime, got {p!r}")
    if l < 0:
        raise ValidationError(f"l must be >= 0, got {l}")
    if eps_max < 1:
        raise ValidationError(f"eps_max must be >= 1, got {eps_max}")
    amplitude_scale = Fraction(p) ** (-2 * l)
    samples = []
    for eps in range(1, eps_max + 1):
        if eps % p == 0:
            continue
        v = prime_multiplicity(p, 1 + eps)
        samples.append(SlitSample(eps, v, amplitude_scale * Fraction(p) ** (-2 * v)))
    return samples
