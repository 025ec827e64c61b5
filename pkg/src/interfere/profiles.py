"""Brightness profiles: probability as a function of detector radius.

An idealized detector registers a particle on the circle of radius r with
probability P(r).  Reading the phase as the radius gives four pictures:

  trig:       P(r) = p1 + p2 + 2*sqrt(p1*p2)*cos(r), slow oscillation with
              maxima at even and minima at odd multiples of pi;
  hyp (+):    P(r) = p1 + p2 + 2*sqrt(p1*p2)*cosh(r), dark center, grows
              exponentially until it saturates P = 1 at theta_max;
  hyp (-):    bright center, decays exponentially to P = 0 at theta_min;
  piecewise:  the +/- branches alternating over caller-chosen intervals;
  padic:      radii 1 + eps with exact brightness from the p-adic rule,
              locally constant in the p-adic metric but jumpy in the
              Euclidean one.

Profiles are rejected, never silently clipped: grid points outside a validity
window are dropped with an explicit warning record on the profile.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .engine import interfere_hyp, interfere_trig
from .errors import DegenerateContextError, ProfileError
from .numeric import (
    TOLERANCE,
    fmt_float,
    fmt_number,
    require_probability,
    sqrt_keeping_exact,
)
from .padic_rule import padic_slit_profile

VERSION = "0.1.0"


@dataclass
class BrightnessProfile:
    """A sampled curve radius -> probability with its provenance."""

    kind: str  # trig | hyp | piecewise | padic
    grid: tuple
    values: tuple  # floats, or exact Fractions for the padic picture
    metadata: dict = field(default_factory=dict)
    theta_max: float | None = None
    theta_min: float | None = None
    warnings: tuple = ()


def uniform_grid(lo: float, hi: float, n: int):
    """n evenly spaced samples covering [lo, hi] inclusive."""
    if n < 1:
        raise ProfileError(f"grid needs at least one sample, got n = {n}")
    if n == 1:
        return (float(lo),)
    step = (hi - lo) / (n - 1)
    return tuple(lo + i * step for i in range(n))


def theta_bounds(p1, p2):
    """Validity endpoints (theta_max, theta_min) of the hyperbolic branches.

    theta_max solves p1 + p2 + 2*sqrt(p1*p2)*cosh(theta) = 1; it exists only
    when q_plus = (1 - p1 - p2) / (2*sqrt(p1*p2)) >= 1 (otherwise even theta=0
    overshoots and None is returned).  theta_min solves the minus-branch zero
    p1 + p2 - 2*sqrt(p1*p2)*cosh(theta) = 0 and always exists because
    q_minus = (p1 + p2) / (2*sqrt(p1*p2)) >= 1 by AM-GM.
    """
    require_probability(p1, "p1")
    require_probability(p2, "p2")
    if p1 * p2 == 0:
        raise DegenerateContextError("theta bounds need p1*p2 > 0")
    weight = 2 * sqrt_keeping_exact(p1 * p2)
    q_plus = (1 - p1 - p2) / weight
    q_minus = (p1 + p2) / weight
    if q_plus >= 1:
        theta_max = math.acosh(q_plus)
    elif q_plus >= 1 - TOLERANCE:
        theta_max = 0.0
    else:
        theta_max = None
    # q_minus < 1 is impossible; floats may dip a hair below for p1 == p2
    theta_min = math.acosh(q_minus) if q_minus > 1 else 0.0
    return theta_max, theta_min


def profile_trig(p1, p2, grid) -> BrightnessProfile:
    """Sample the trigonometric picture; the whole curve must be a probability.

    Requires peak = p1 + p2 + 2*sqrt(p1*p2) <= 1, since the curve attains the
    peak at every even multiple of pi.
    """
    require_probability(p1, "p1")
    require_probability(p2, "p2")
    peak = p1 + p2 + 2 * sqrt_keeping_exact(p1 * p2)
    if peak > 1 + TOLERANCE:
        raise ProfileError(
            f"trigonometric profile would peak at {peak!r} > 1; "
            "reduce p1, p2 so that (sqrt(p1)+sqrt(p2))**2 <= 1"
        )
    values = tuple(interfere_trig(p1, p2, r) for r in grid)
    return BrightnessProfile(
        kind="trig",
        grid=tuple(grid),
        values=values,
        metadata={"p1": p1, "p2": p2},
    )


def _window(p1, p2, sign):
    theta_max, theta_min = theta_bounds(p1, p2)
    if sign == 1:
        if theta_max is None:
            raise ProfileError(
                "plus branch has no valid window: p1 + p2 + 2*sqrt(p1*p2) > 1 "
                "already at theta = 0"
            )
        return theta_max, theta_max, theta_min
    return theta_min, theta_max, theta_min


def profile_hyp(p1, p2, sign, grid) -> BrightnessProfile:
    """Sample one hyperbolic branch on [0, theta_max] (+) or [0, theta_min] (-).

    Grid points outside the branch's window are dropped with a warning record
    (the curve is not a probability out there); an empty remainder is an
    error.  Values are strictly monotone: increasing for +, decreasing for -.
    """
    if sign not in (1, -1):
        raise ProfileError(f"sign must be +1 or -1, got {sign!r}")
    hi, theta_max, theta_min = _window(p1, p2, sign)
    kept = tuple(r for r in grid if 0 <= r <= hi + TOLERANCE)
    warnings = ()
    dropped = len(tuple(grid)) - len(kept)
    if dropped:
        warnings = (
            f"clipped {dropped} grid point(s) outside the validity window [0, {fmt_float(hi)}]",
        )
    if not kept:
        raise ProfileError(
            f"empty valid window: no grid points inside [0, {fmt_float(hi)}]"
        )
    values = tuple(interfere_hyp(p1, p2, r, sign) for r in kept)
    return BrightnessProfile(
        kind="hyp",
        grid=kept,
        values=values,
        metadata={"p1": p1, "p2": p2, "sign": sign},
        theta_max=theta_max,
        theta_min=theta_min,
        warnings=warnings,
    )


def profile_piecewise(p1, p2, partition, grid) -> BrightnessProfile:
    """Alternate the +/- branches over caller-chosen intervals.

    ``partition`` is a sequence of (lo, hi, sign) triples; intervals must not
    overlap in their interior and each must fit inside its branch's validity
    window.  Grid points are sampled by the first interval that contains
    them; points outside every interval are dropped (they are not part of the
    requested picture).
    """
    pieces = [(float(lo), float(hi), sign) for lo, hi, sign in partition]
    if not pieces:
        raise ProfileError("partition must contain at least one interval")
    for lo, hi, sign in pieces:
        if sign not in (1, -1):
            raise ProfileError(f"interval sign must be +1 or -1, got {sign!r}")
        if not 0 <= lo <= hi:
            raise ProfileError(f"bad interval [{lo}, {hi}]: need 0 <= lo <= hi")
        window_hi, _, _ = _window(p1, p2, sign)
        if hi > window_hi + TOLERANCE:
            raise ProfileError(
                f"interval [{lo}, {hi}] leaves the sign {sign:+d} validity window "
                f"[0, {fmt_float(window_hi)}]"
            )
    ordered = sorted(pieces)
    for (lo_a, hi_a, _), (lo_b, hi_b, _) in zip(ordered, ordered[1:]):
        if lo_b < hi_a:
            raise ProfileError(
                f"intervals [{lo_a}, {hi_a}] and [{lo_b}, {hi_b}] overlap"
            )
    theta_max, theta_min = theta_bounds(p1, p2)
    out_grid = []
    out_values = []
    taken = set()
    for lo, hi, sign in pieces:
        # the same slack as the window test, so grid endpoints computed as
        # lo + k*step may overshoot an interval edge by an ulp and still count
        for i, r in enumerate(grid):
            if i not in taken and lo - TOLERANCE <= r <= hi + TOLERANCE:
                taken.add(i)
                out_grid.append(r)
                out_values.append(interfere_hyp(p1, p2, r, sign))
    if not out_grid:
        raise ProfileError("no grid points fall inside the partition")
    return BrightnessProfile(
        kind="piecewise",
        grid=tuple(out_grid),
        values=tuple(out_values),
        metadata={
            "p1": p1,
            "p2": p2,
            "partition": ";".join(
                f"{fmt_float(lo)}:{fmt_float(hi)}:{sign:+d}" for lo, hi, sign in pieces
            ),
        },
        theta_max=theta_max,
        theta_min=theta_min,
    )


def profile_padic(p: int, l: int, eps_max: int) -> BrightnessProfile:
    """The p-adic circle picture: radii 1 + eps with exact brightness.

    Brightness equals A * p**(-2*v_p(r)) with A = p**(-2l): circles whose
    radius is divisible by powers of p are dimmed, discontinuously in the
    Euclidean metric but continuously in the p-adic one.
    """
    samples = padic_slit_profile(p, l, eps_max)
    return BrightnessProfile(
        kind="padic",
        grid=tuple(1 + s.epsilon for s in samples),
        values=tuple(s.probability for s in samples),
        metadata={"p": p, "l": l, "A": Fraction(p) ** (-2 * l)},
    )


def write_csv(profile: BrightnessProfile, stream) -> None:
    """Self-describing CSV: '#' metadata comments, then r,P_float,P_exact,kind."""
    meta = {"kind": profile.kind, "version": VERSION}
    for key, value in profile.metadata.items():
        meta[str(key)] = fmt_number(value) if not isinstance(value, str) else value
    if profile.theta_max is not None:
        meta["theta_max"] = fmt_float(profile.theta_max)
    if profile.theta_min is not None:
        meta["theta_min"] = fmt_float(profile.theta_min)
    for i, warning in enumerate(profile.warnings, 1):
        meta[f"warning{i}"] = warning
    for key in sorted(meta):
        stream.write(f"# {key}={meta[key]}\n")
    stream.write("r,P_float,P_exact,kind\n")
    for r, value in zip(profile.grid, profile.values):
        exact = str(value) if isinstance(value, (int, Fraction)) else ""
        stream.write(f"{fmt_number(r)},{fmt_float(value)},{exact},{profile.kind}\n")


def to_json_dict(profile: BrightnessProfile) -> dict:
    """JSON-ready dict with floats and exact strings side by side."""
    out = {
        "kind": profile.kind,
        "grid": [float(r) for r in profile.grid],
        "values": [float(v) for v in profile.values],
        "metadata": {
            str(k): (v if isinstance(v, (str, int)) else fmt_number(v))
            for k, v in profile.metadata.items()
        },
        "warnings": list(profile.warnings),
    }
    if any(isinstance(v, (int, Fraction)) for v in profile.values):
        out["values_exact"] = [str(v) for v in profile.values]
    if profile.theta_max is not None:
        out["theta_max"] = profile.theta_max
    if profile.theta_min is not None:
        out["theta_min"] = profile.theta_min
    return out
