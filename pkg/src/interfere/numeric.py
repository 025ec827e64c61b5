"""Numeric plumbing shared by the calculus modules.

Probabilities may be floats or exact rationals (int / Fraction).  The helpers
here keep exact inputs exact wherever the mathematics allows it, and
centralize the single tolerance used for every float comparison and boundary
snap in the package.
"""

import math
from fractions import Fraction

from .errors import NotAProbabilityError, ValidationError

#: Single knob for float comparisons, reconstruction checks, boundary snaps.
TOLERANCE = 1e-10


def is_exact(value) -> bool:
    """True for values carried exactly (int or Fraction)."""
    return isinstance(value, (int, Fraction))


def exact_sqrt(value):
    """Exact square root of a nonnegative int/Fraction, or None if irrational."""
    f = Fraction(value)
    if f < 0:
        raise ValueError(f"square root of negative value {value!r}")
    num = math.isqrt(f.numerator)
    den = math.isqrt(f.denominator)
    if num * num == f.numerator and den * den == f.denominator:
        return Fraction(num, den)
    return None


def sqrt_keeping_exact(value):
    """Square root that stays exact for perfect squares of exact inputs."""
    if is_exact(value):
        root = exact_sqrt(value)
        if root is not None:
            return root
    return math.sqrt(value)


def phase_cos(theta):
    """Cosine of a phase, computed as sin(pi/2 - theta).

    Agrees with math.cos to about one ulp for phases up to a few turns, but
    sends the float pi/2 to exactly 0.0 (and 0, pi to exactly +1.0, -1.0), so
    quarter-turn phases kill or saturate cross terms exactly instead of
    leaving ~1e-16 dust in results that should be clean.
    """
    return math.sin(math.pi / 2 - theta)


def cross_term(weight, lam):
    """weight * lam, preserving exactness at lam = 0 and lam = +/-1.

    An exact weight multiplied by float 0.0 or 1.0 would silently become a
    float; the quarter-turn cosines from phase_cos hit those values exactly,
    and this keeps the product exact.
    """
    if lam == 0:
        return 0
    if lam == 1:
        return weight
    if lam == -1:
        return -weight
    return weight * lam


def require_probability(value, name):
    """Validate an input probability in [0, 1]; returns it unchanged."""
    if isinstance(value, float) and not math.isfinite(value):
        raise ValidationError(f"{name} must be finite, got {value!r}")
    if not 0 <= value <= 1:
        raise ValidationError(f"{name} must lie in [0, 1], got {value!r}")
    return value


def as_probability(value, what="result", component=None):
    """Validate a computed probability, absorbing float roundoff at 0 and 1.

    Float results within TOLERANCE outside the unit interval are endpoint
    evaluations up to roundoff and snap to the boundary; anything further out
    raises NotAProbabilityError carrying the raw value.  Exact values are
    never snapped: if exact arithmetic says the value escaped [0, 1], it did.
    """
    if 0 <= value <= 1:
        return value
    if isinstance(value, float):
        if -TOLERANCE <= value < 0:
            return 0.0
        if 1 < value <= 1 + TOLERANCE:
            return 1.0
    raise NotAProbabilityError(value, what=what, component=component)


def fmt_float(value) -> str:
    """Deterministic 12-significant-digit rendering."""
    return f"{float(value):.12g}"


def round12(value) -> float:
    """Round to 12 significant digits (stable numbers for reports)."""
    return float(fmt_float(value))


def fmt_number(value) -> str:
    """Exact values as 'num/den' or plain integers, floats via fmt_float."""
    if isinstance(value, (int, Fraction)):
        return str(value)
    return fmt_float(value)
