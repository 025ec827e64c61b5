"""Split-complex (hyperbolic) numbers.

The commutative two-dimensional real algebra spanned by 1 and j with
j*j = +1.  A number x + j*y carries the indefinite norm x**2 - y**2, which is
multiplicative but vanishes on the light cone x = +/-y, so the algebra has
zero divisors.  Unit-norm elements are +/-(cosh t + j sinh t), the hyperbolic
Euler formula, and every element of positive norm factors uniquely as
sign(x) * modulus * exp(j * phase).

Ring operations preserve exact (int / Fraction) components; ``exp`` and the
polar decomposition are float-valued.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonPositiveNormError
from .numeric import is_exact


@dataclass(frozen=True)
class HyperbolicNumber:
    """x + j*y with j*j = +1."""

    x: float | Fraction
    y: float | Fraction = 0

    def __add__(self, other):
        if not isinstance(other, HyperbolicNumber):
            return NotImplemented
        return HyperbolicNumber(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        if not isinstance(other, HyperbolicNumber):
            return NotImplemented
        return HyperbolicNumber(self.x - other.x, self.y - other.y)

    def __neg__(self):
        return HyperbolicNumber(-self.x, -self.y)

    def __mul__(self, other):
        if isinstance(other, HyperbolicNumber):
            return HyperbolicNumber(
                self.x * other.x + self.y * other.y,
                self.x * other.y + other.x * self.y,
            )
        if isinstance(other, (int, float, Fraction)):
            return HyperbolicNumber(self.x * other, self.y * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, Fraction)):
            return HyperbolicNumber(self.x * other, self.y * other)
        return NotImplemented

    def conjugate(self) -> "HyperbolicNumber":
        return HyperbolicNumber(self.x, -self.y)

    def norm_sq(self):
        """The indefinite norm x**2 - y**2 (= z * conj(z)); may be negative."""
        return self.x * self.x - self.y * self.y

    def in_positive_cone(self) -> bool:
        """norm_sq >= 0; closed under products since the norm is multiplicative."""
        return self.norm_sq() >= 0

    def on_light_cone(self) -> bool:
        """x = +/-y, the locus of zero divisors."""
        return self.norm_sq() == 0


ZERO = HyperbolicNumber(0, 0)
ONE = HyperbolicNumber(1, 0)
J = HyperbolicNumber(0, 1)


def exp(theta: float) -> HyperbolicNumber:
    """cosh(theta) + j*sinh(theta): the unit-norm one-parameter group.

    exp(a) * exp(b) = exp(a + b) and norm_sq(exp(theta)) = 1.  Raises
    ValueError for non-finite theta and OverflowError once cosh leaves the
    float range (|theta| beyond ~710).
    """
    if not math.isfinite(theta):
        raise ValueError(f"phase must be finite, got {theta!r}")
    return HyperbolicNumber(math.cosh(theta), math.sinh(theta))


@dataclass(frozen=True)
class PolarForm:
    """Decomposition sign * modulus * exp(j * phase) of a positive-norm element."""

    sign: int
    modulus: float
    phase: float

    def to_number(self) -> HyperbolicNumber:
        scale = self.sign * self.modulus
        return HyperbolicNumber(scale * math.cosh(self.phase), scale * math.sinh(self.phase))


def polar(z: HyperbolicNumber) -> PolarForm:
    """Polar form of an element with norm_sq > 0.

    There x**2 > y**2 forces x != 0, so the sign factor sign(x) and the phase
    atanh(y/x) are uniquely determined; no tie-breaking is ever needed.
    """
    n = z.norm_sq()
    if n <= 0:
        raise NonPositiveNormError(
            f"polar form needs norm_sq > 0, got norm_sq({z.x!r} + j*{z.y!r}) = {n!r}"
        )
    sign = 1 if z.x > 0 else -1
    return PolarForm(sign, math.sqrt(n), math.atanh(z.y / z.x))


def inverse(z: HyperbolicNumber) -> HyperbolicNumber:
    """Multiplicative inverse conj(z) / norm_sq(z); exact for exact components.

    Only elements with norm_sq > 0 are invertible: the light cone consists of
    zero divisors and negative-norm elements fall outside the positive cone.
    """
    n = z.norm_sq()
    if n == 0:
        raise NonPositiveNormError(f"{z!r} is a zero divisor (light cone), not invertible")
    if n < 0:
        raise NonPositiveNormError(f"{z!r} has negative norm_sq {n!r}, not invertible here")
    if is_exact(z.x) and is_exact(z.y):
        return HyperbolicNumber(Fraction(z.x) / n, -Fraction(z.y) / n)
    return HyperbolicNumber(z.x / n, -z.y / n)
