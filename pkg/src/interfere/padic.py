"""Exact p-adic valuation arithmetic on rationals.

For a prime p, the valuation |x|_p is p**(-v) where v is the net multiplicity
of p in x (negative when p divides the denominator), with |0|_p = 0.  The
valuation is multiplicative and non-Archimedean:

    |x + y|_p <= max(|x|_p, |y|_p),   with equality whenever |x|_p != |y|_p,

so the induced metric is an ultrametric, balls are clopen, and any member of
a ball can serve as its center.  Everything here is an exact Fraction tagged
with the prime; valuation comparisons are decisions, never approximations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import PrimeMismatchError, ValidationError

# Deterministic Miller-Rabin witness set; exact for n < 3.3e24, which covers
# the full 64-bit range.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (exact below 3.3e24)."""
    if n < 2:
        return False
    for w in _WITNESSES:
        if n == w:
            return True
        if n % w == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_multiplicity(p: int, n: int) -> int:
    """How many times p divides the nonzero integer n."""
    n = abs(n)
    if n == 0:
        raise ValueError("multiplicity of p in 0 is undefined (infinite)")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


@dataclass(frozen=True, repr=False)
class PadicRational:
    """An exact rational seen through the p-adic valuation.

    The p-order (the exponent v with |x|_p = p**-v) is computed once at
    construction; the order of zero is the explicit sentinel math.inf.
    """

    p: int
    value: Fraction
    order: float = field(init=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValidationError(f"modulus must be a prime number, got {self.p!r}")
        if isinstance(self.value, float):
            # Fraction(0.1) is the exact dyadic 3602879701896397/2**55, almost
            # never the rational the caller had in mind; valuations built on
            # it would be silently wrong.
            raise ValidationError(
                f"refusing float {self.value!r}: pass an int, Fraction, or "
                f"string like '1/10' for exact values"
            )
        if not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", Fraction(self.value))
        v = self.value
        if v == 0:
            order = math.inf
        else:
            order = prime_multiplicity(self.p, v.numerator) - prime_multiplicity(
                self.p, v.denominator
            )
        object.__setattr__(self, "order", order)

    # -- valuation ---------------------------------------------------------

    def abs(self) -> Fraction:
        """|x|_p = p**(-order), exactly (Fraction; 0 for x = 0)."""
        if self.value == 0:
            return Fraction(0)
        return Fraction(self.p) ** -self.order

    def unit_part(self) -> "PadicRational":
        """The unit e in x = p**order * e (so |e|_p = 1); undefined for 0."""
        if self.value == 0:
            raise ValidationError("0 has no unit decomposition")
        return PadicRational(self.p, self.value / Fraction(self.p) ** self.order)

    # -- field arithmetic ----------------------------------------------------

    def _lift(self, other):
        if isinstance(other, PadicRational):
            if other.p != self.p:
                raise PrimeMismatchError(f"mixed primes {self.p} and {other.p}")
            return other
        if isinstance(other, (int, Fraction)):
            return PadicRational(self.p, Fraction(other))
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return PadicRational(self.p, self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return PadicRational(self.p, self.value - other.value)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return PadicRational(self.p, other.value - self.value)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return PadicRational(self.p, self.value * other.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return PadicRational(self.p, self.value / other.value)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return PadicRational(self.p, other.value / self.value)

    def __neg__(self):
        return PadicRational(self.p, -self.value)

    # -- canonical digits ----------------------------------------------------

    def digits(self, count: int) -> "PadicExpansion":
        """First `count` digits of the canonical expansion sum(a_k * p**k).

        Digits start at k = order (everything below is zero); each a_k is in
        {0, ..., p-1} and partial sums converge to x in |.|_p.  For x = 0 the
        expansion is the empty sentinel.
        """
        if count < 1:
            raise ValidationError(f"digit count must be >= 1, got {count}")
        if self.value == 0:
            return PadicExpansion(self.p, 0, ())
        start = int(self.order)
        residue = self.value / Fraction(self.p) ** start
        out = []
        for _ in range(count):
            # residue has denominator coprime to p, so it reduces mod p
            num, den = residue.numerator, residue.denominator
            digit = num * pow(den, -1, self.p) % self.p
            out.append(digit)
            residue = (residue - digit) / self.p
        return PadicExpansion(self.p, start, tuple(out))

    # -- housekeeping --------------------------------------------------------

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"PadicRational({self.p}, {self.value})"


@dataclass(frozen=True)
class PadicExpansion:
    """Leading digits a_k of a canonical base-p series sum(a_k * p**k).

    `exponent` is the position k of digits[0]; an empty digit tuple is the
    sentinel for the expansion of zero.
    """

    p: int
    exponent: int
    digits: tuple

    @property
    def is_zero(self) -> bool:
        return not self.digits

    def partial_sum(self, count: int | None = None) -> Fraction:
        """Exact value of the first `count` digits (all of them by default)."""
        if count is None:
            count = len(self.digits)
        total = Fraction(0)
        scale = Fraction(self.p) ** self.exponent
        for digit in self.digits[:count]:
            total += digit * scale
            scale *= self.p
        return total

    def __str__(self):
        """Right-to-left rendering '...a2a1a0.a-1...' of the known digits."""
        if self.is_zero:
            return "0"
        by_exp = {self.exponent + i: d for i, d in enumerate(self.digits)}
        high = max(max(by_exp), 0)
        integer = "".join(str(by_exp.get(k, 0)) for k in range(high, -1, -1))
        low = min(min(by_exp), 0)
        fractional = "".join(str(by_exp.get(k, 0)) for k in range(-1, low - 1, -1))
        return "…" + integer + "." + fractional


_BALL_KINDS = ("closed", "open", "sphere")


@dataclass(frozen=True)
class PadicBall:
    """Ball or sphere of radius p**radius_exponent around a center.

    Membership is the exact valuation comparison: <= r for closed, < r for
    open, == r for the sphere.  Balls are clopen, every member is a center,
    and two balls intersect only when one contains the other.
    """

    p: int
    center: PadicRational
    radius_exponent: int
    kind: str = "closed"

    def __post_init__(self):
        if self.kind not in _BALL_KINDS:
            raise ValidationError(f"kind must be one of {_BALL_KINDS}, got {self.kind!r}")
        if not isinstance(self.center, PadicRational):
            object.__setattr__(self, "center", PadicRational(self.p, self.center))
        if self.center.p != self.p:
            raise PrimeMismatchError(f"center prime {self.center.p} != ball prime {self.p}")

    @property
    def radius(self) -> Fraction:
        return Fraction(self.p) ** self.radius_exponent

    def contains(self, x) -> bool:
        if not isinstance(x, PadicRational):
            x = PadicRational(self.p, x)
        distance = (x - self.center).abs()
        if self.kind == "closed":
            return distance <= self.radius
        if self.kind == "open":
            return distance < self.radius
        return distance == self.radius

    __contains__ = contains
