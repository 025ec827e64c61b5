"""Command-line front end.

Subcommands: fit, profile (trig | hyp | piecewise | padic), totalprob, padic,
check.  Numbers parse as exact rationals ("1/16", "0.36") and are kept exact
with --mode exact or converted to floats with the default --mode float.
Output is deterministic: floats render with 12 significant digits, exact
values as num/den, CSV rows in a fixed order with '#' metadata comments.

Exit codes: 0 success, 2 flag/config parse error, 3 domain error, 4 invariant
failures from `check`.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from fractions import Fraction

from . import checks, engine, profiles
from .context import (
    ContextTransform,
    normalization_defect,
    total_prob_classical,
    total_prob_hyperbolic,
    total_prob_quantum,
)
from .errors import InterfereError, NotAProbabilityError
from .numeric import fmt_float, round12
from .padic import PadicRational
from .padic_rule import PadicAmplitudePair, lambda_range_check, padic_interfere, padic_slit_profile

VERSION = "0.1.0"


class ConfigError(Exception):
    """Bad flag value or config-file line; maps to exit code 2."""


# ---------------------------------------------------------------------------
# parsing helpers
# ---------------------------------------------------------------------------

_PI_FORM = re.compile(
    r"^(?P<sign>[+-])?(?P<num>\d+)?\s*\*?\s*pi(?:\s*/\s*(?P<den>\d+))?$", re.IGNORECASE
)


def _parse_fraction(text: str, what: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"{what}: cannot parse number {text!r} ({exc})") from None


def _parse_number(text: str, mode: str, what: str):
    value = _parse_fraction(text, what)
    return value if mode == "exact" else float(value)


def _parse_angle(text: str, what: str) -> float:
    s = text.strip()
    m = _PI_FORM.match(s)
    if m:
        num = int(m.group("num") or 1)
        den = int(m.group("den") or 1)
        value = math.pi * num / den
        return -value if m.group("sign") == "-" else value
    return float(_parse_fraction(s, what))


def _parse_sign(text: str, what: str) -> int:
    mapping = {"+": 1, "-": -1, "+1": 1, "-1": -1, "1": 1}
    try:
        return mapping[text.strip()]
    except KeyError:
        raise ConfigError(f"{what}: sign must be '+' or '-', got {text!r}") from None


def _parse_int(text: str, what: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise ConfigError(f"{what}: expected an integer, got {text!r}") from None


def _jsonable(value):
    if isinstance(value, bool) or value is None or isinstance(value, (str, int)):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return round12(value)
    if isinstance(value, engine.Regime):
        return value.value
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    return str(value)


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as stream:
            stream.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(payload: dict, out_path):
    _emit(json.dumps(_jsonable(payload), sort_keys=True, indent=2) + "\n", out_path)


# ---------------------------------------------------------------------------
# fit
# ---------------------------------------------------------------------------

def _cmd_fit(args) -> int:
    p1 = _parse_number(args.p1, args.mode, "p1")
    p2 = _parse_number(args.p2, args.mode, "p2")
    p = _parse_number(args.p, args.mode, "p")
    record = engine.fit_record(p1, p2, p)
    _emit_json(
        {
            "p1": record.p1,
            "p2": record.p2,
            "p": record.p,
            "lambda": record.lam,
            "regime": record.regime,
            "phase": record.phase,
            "sign": record.sign,
            "residual": float(record.residual()),
        },
        args.out,
    )
    return 0


# ---------------------------------------------------------------------------
# profile
# ---------------------------------------------------------------------------

def _profile_to_text(profile) -> str:
    import io

    buffer = io.StringIO()
    profiles.write_csv(profile, buffer)
    return buffer.getvalue()


def _cmd_profile_trig(args) -> int:
    p1 = _parse_number(args.p1, args.mode, "--p1")
    p2 = _parse_number(args.p2, args.mode, "--p2")
    grid = profiles.uniform_grid(args.min, args.max, args.n)
    _emit(_profile_to_text(profiles.profile_trig(p1, p2, grid)), args.out)
    return 0


def _cmd_profile_hyp(args) -> int:
    p1 = _parse_number(args.p1, args.mode, "--p1")
    p2 = _parse_number(args.p2, args.mode, "--p2")
    sign = _parse_sign(args.sign, "--sign")
    if args.auto_window:
        theta_max, theta_min = profiles.theta_bounds(p1, p2)
        hi = theta_max if sign == 1 else theta_min
        if hi is None:
            raise ConfigError("--auto-window: the plus branch has no valid window here")
    elif args.max is not None:
        hi = args.max
    else:
        raise ConfigError("profile hyp needs --max or --auto-window")
    grid = profiles.uniform_grid(0.0, hi, args.n)
    _emit(_profile_to_text(profiles.profile_hyp(p1, p2, sign, grid)), args.out)
    return 0


def _parse_intervals(text: str):
    pieces = []
    for chunk in text.split(","):
        parts = chunk.split(":")
        if len(parts) != 3:
            raise ConfigError(
                f"--intervals: expected 'lo:hi:sign' got {chunk!r}"
            )
        lo = float(_parse_fraction(parts[0], "--intervals lo"))
        hi = float(_parse_fraction(parts[1], "--intervals hi"))
        pieces.append((lo, hi, _parse_sign(parts[2], "--intervals sign")))
    return pieces


def _cmd_profile_piecewise(args) -> int:
    p1 = _parse_number(args.p1, args.mode, "--p1")
    p2 = _parse_number(args.p2, args.mode, "--p2")
    partition = _parse_intervals(args.intervals)
    hi = max(piece[1] for piece in partition)
    grid = profiles.uniform_grid(0.0, hi, args.n)
    _emit(
        _profile_to_text(profiles.profile_piecewise(p1, p2, partition, grid)),
        args.out,
    )
    return 0


def _cmd_profile_padic(args) -> int:
    _emit(
        _profile_to_text(profiles.profile_padic(args.p, args.l, args.eps_max)),
        args.out,
    )
    return 0


# ---------------------------------------------------------------------------
# totalprob
# ---------------------------------------------------------------------------

_CONFIG_KEYS = (
    "mode",
    "pb1",
    "pb2",
    "p11",
    "p12",
    "p21",
    "p22",
    "theta1",
    "theta2",
    "sign1",
    "sign2",
)
_REQUIRED_KEYS = ("pb1", "pb2", "p11", "p12", "p21", "p22", "theta1", "theta2")


def _read_config(path: str) -> dict:
    values = {}
    try:
        with open(path, encoding="utf-8") as stream:
            lines = stream.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc}") from None
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw.rstrip()!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown field {key!r}")
        values[key] = (value.strip(), f"{path}:{lineno}")
    return values


def _cmd_totalprob(args) -> int:
    raw = _read_config(args.config) if args.config else {}
    for key in _CONFIG_KEYS:
        override = args.kind if key == "mode" else getattr(args, key, None)
        if override is not None:
            raw[key] = (override, "--kind" if key == "mode" else f"--{key}")
    missing = [key for key in _REQUIRED_KEYS if key not in raw]
    if missing:
        raise ConfigError(f"missing field(s): {', '.join(missing)}")

    def number(key):
        text, where = raw[key]
        return _parse_number(text, args.mode, where)

    def angle(key):
        text, where = raw[key]
        return _parse_angle(text, where)

    mode = raw.get("mode", ("trig", ""))[0]
    if mode not in ("trig", "hyp"):
        raise ConfigError(f"mode must be 'trig' or 'hyp', got {mode!r}")
    transform = ContextTransform(
        prior=(number("pb1"), number("pb2")),
        cond=((number("p11"), number("p12")), (number("p21"), number("p22"))),
        phases=(angle("theta1"), angle("theta2")),
        signs=(
            _parse_sign(raw.get("sign1", ("+", ""))[0], "sign1"),
            _parse_sign(raw.get("sign2", ("+", ""))[0], "sign2"),
        ),
        mode=mode,
    )

    def attempt(func, t):
        try:
            return list(func(t))
        except NotAProbabilityError as exc:
            return {"error": str(exc), "component": exc.component, "raw": float(exc.value)}

    payload = {
        "transform": transform.to_dict(),
        "classical": list(total_prob_classical(transform)),
        "quantum": attempt(total_prob_quantum, transform.with_mode("trig")),
        "hyperbolic": attempt(total_prob_hyperbolic, transform.with_mode("hyp")),
        "normalization_defect": float(normalization_defect(transform)),
    }
    _emit_json(payload, args.out)
    return 0


# ---------------------------------------------------------------------------
# padic
# ---------------------------------------------------------------------------

def _cmd_padic(args) -> int:
    if args.table:
        samples = padic_slit_profile(args.p, args.l, args.eps_max)
        lines = [
            f"# A={Fraction(args.p) ** (-2 * args.l)}",
            "# kind=padic-slit-table",
            f"# l={args.l}",
            f"# p={args.p}",
            f"# version={VERSION}",
            "epsilon,v_p_of_1_plus_epsilon,P_exact,P_float",
        ]
        lines.extend(
            f"{s.epsilon},{s.multiplicity},{s.probability},{fmt_float(s.probability)}"
            for s in samples
        )
        _emit("\n".join(lines) + "\n", args.out)
        return 0
    if args.alpha1 is None or args.alpha2 is None or args.eps is None:
        raise ConfigError("padic needs --alpha1, --alpha2 and --eps (or --table)")
    pair = PadicAmplitudePair(
        args.p,
        PadicRational(args.p, _parse_fraction(args.alpha1, "--alpha1")),
        PadicRational(args.p, _parse_fraction(args.alpha2, "--alpha2")),
        PadicRational(args.p, _parse_fraction(args.eps, "--eps")),
    )
    result = padic_interfere(pair)
    lam, theta, within = lambda_range_check(pair)
    payload = {
        "p": result.p,
        "alpha1": pair.alpha1.value,
        "alpha2": pair.alpha2.value,
        "epsilon": pair.epsilon.value,
        "case": result.case,
        "P": result.probability,
        "P_float": float(result.probability),
        "P1": result.p1,
        "P2": result.p2,
        "c": result.cross_factor,
        "lambda": lam,
        "lambda_float": float(lam),
        "theta": theta,
        "within_range": within,
    }
    _emit_json(payload, args.out)
    return 0


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------

def _cmd_check(args) -> int:
    results = checks.run_all(full=not args.fast)
    lines = []
    failures = 0
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        line = f"{status}  {result.name}: {result.cases} cases, {result.violations} violations"
        if not result.passed:
            failures += 1
            if result.detail:
                line += f" [{result.detail}]"
        lines.append(line)
    lines.append(f"{len(results) - failures}/{len(results)} checks passed")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if failures == 0 else 4


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_common(parser):
    parser.add_argument(
        "--mode",
        choices=("exact", "float"),
        default="float",
        help="parse/print numbers as exact rationals or floats (default float)",
    )
    parser.add_argument("--out", default=None, help="write output to a file instead of stdout")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="interfere",
        description="Interference of probabilistic alternatives over complex, "
        "split-complex, and p-adic amplitudes.",
    )
    parser.add_argument("--version", action="version", version=f"interfere {VERSION}")
    sub = parser.add_subparsers(dest="command")

    fit = sub.add_parser("fit", help="fit the deviation form to a (p1, p2, p) triple")
    fit.add_argument("p1")
    fit.add_argument("p2")
    fit.add_argument("p")
    _add_common(fit)
    fit.set_defaults(handler=_cmd_fit)

    profile = sub.add_parser("profile", help="emit a brightness profile as CSV")
    kinds = profile.add_subparsers(dest="kind")

    trig = kinds.add_parser("trig", help="trigonometric oscillation")
    trig.add_argument("--p1", required=True)
    trig.add_argument("--p2", required=True)
    trig.add_argument("--min", type=float, default=0.0)
    trig.add_argument("--max", type=float, required=True)
    trig.add_argument("--n", type=int, default=100)
    _add_common(trig)
    trig.set_defaults(handler=_cmd_profile_trig)

    hyp = kinds.add_parser("hyp", help="one hyperbolic branch")
    hyp.add_argument("--p1", required=True)
    hyp.add_argument("--p2", required=True)
    hyp.add_argument("--sign", required=True, help="'+' or '-'")
    hyp.add_argument("--max", type=float, default=None)
    hyp.add_argument("--auto-window", action="store_true", help="sample the full validity window")
    hyp.add_argument("--n", type=int, default=100)
    _add_common(hyp)
    hyp.set_defaults(handler=_cmd_profile_hyp)

    piecewise = kinds.add_parser("piecewise", help="alternating +/- branches")
    piecewise.add_argument("--p1", required=True)
    piecewise.add_argument("--p2", required=True)
    piecewise.add_argument(
        "--intervals", required=True, help="comma-separated lo:hi:sign triples"
    )
    piecewise.add_argument("--n", type=int, default=100)
    _add_common(piecewise)
    piecewise.set_defaults(handler=_cmd_profile_piecewise)

    padic_profile = kinds.add_parser("padic", help="p-adic circle brightness")
    padic_profile.add_argument("--p", type=int, required=True)
    padic_profile.add_argument("--l", type=int, default=0)
    padic_profile.add_argument("--eps-max", type=int, required=True)
    _add_common(padic_profile)
    padic_profile.set_defaults(handler=_cmd_profile_padic)

    totalprob = sub.add_parser(
        "totalprob", help="classical / perturbed / hyperbolic total probability"
    )
    totalprob.add_argument("--config", default=None, help="flat key=value config file")
    totalprob.add_argument(
        "--kind",
        choices=("trig", "hyp"),
        default=None,
        help="override the config field 'mode' (trig or hyp)",
    )
    for key in _CONFIG_KEYS:
        if key == "mode":
            continue
        totalprob.add_argument(f"--{key}", default=None, help=f"override config field {key}")
    _add_common(totalprob)
    totalprob.set_defaults(handler=_cmd_totalprob)

    padic = sub.add_parser("padic", help="p-adic amplitude rule")
    padic.add_argument("--p", type=int, required=True)
    padic.add_argument("--alpha1", default=None)
    padic.add_argument("--alpha2", default=None)
    padic.add_argument("--eps", default=None)
    padic.add_argument("--table", action="store_true", help="emit the two-slit CSV table")
    padic.add_argument("--l", type=int, default=0)
    padic.add_argument("--eps-max", type=int, default=20)
    _add_common(padic)
    padic.set_defaults(handler=_cmd_padic)

    check = sub.add_parser("check", help="run the invariant suite")
    check.add_argument("--fast", action="store_true", help="smaller sweeps")
    check.add_argument("--out", default=None)
    check.set_defaults(handler=_cmd_check)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "handler"):
        parser.print_help()
        return 2
    try:
        return args.handler(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InterfereError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
