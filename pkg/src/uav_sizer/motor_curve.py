"""Empirical motor model from thrust-stand samples.

A :class:`MotorCurve` maps ESC pulse width to electrical power and thrust for
one motor/propeller pair, and inverts the thrust trace to find the pulse
width (and hence power) needed for a given thrust. Queries outside the
measured PWM range raise instead of extrapolating.
"""
from __future__ import annotations

import csv
import math
from bisect import bisect_left
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import CurveError, InsufficientThrustError, OutOfDomainError
from .interpolation import KINDS, LINEAR, Interpolant
from .units import PowerW, PwmUs, ThrustKgf

MIN_SAMPLES = 3
_CUBIC_PWM_TOL = 1e-9


@dataclass(frozen=True)
class ThrustStandSample:
    pwm: PwmUs
    power: PowerW
    thrust: ThrustKgf

    def __post_init__(self):
        for name, typ in (("pwm", PwmUs), ("power", PowerW), ("thrust", ThrustKgf)):
            try:
                object.__setattr__(self, name, typ(getattr(self, name)))
            except ValueError as exc:
                raise CurveError(f"sample {name}: {exc}") from None


@dataclass(frozen=True)
class MotorCurve:
    samples: tuple
    kind: str = LINEAR

    def __post_init__(self):
        samples = tuple(
            s if isinstance(s, ThrustStandSample) else ThrustStandSample(*s)
            for s in self.samples)
        object.__setattr__(self, "samples", samples)
        if self.kind not in KINDS:
            raise CurveError(f"unknown interpolation kind {self.kind!r}")
        if len(samples) < MIN_SAMPLES:
            raise CurveError(f"too few rows: need at least {MIN_SAMPLES} distinct "
                             f"PWM values, got {len(samples)}")
        pwm = [s.pwm for s in samples]
        for a, b in zip(samples, samples[1:]):
            if b.pwm <= a.pwm:
                raise CurveError(f"pwm must be strictly increasing at {b.pwm:g} us",
                                 pwm=float(b.pwm))
            if b.power < a.power:
                raise CurveError(f"power decreases at pwm {b.pwm:g} us "
                                 f"({a.power:g} W -> {b.power:g} W)", pwm=float(b.pwm))
            if b.thrust < a.thrust:
                raise CurveError(f"thrust decreases at pwm {b.pwm:g} us "
                                 f"({a.thrust:g} kgf -> {b.thrust:g} kgf)",
                                 pwm=float(b.pwm))
        object.__setattr__(self, "_power", Interpolant(pwm, [s.power for s in samples],
                                                       self.kind))
        object.__setattr__(self, "_thrust", Interpolant(pwm, [s.thrust for s in samples],
                                                        self.kind))

    @property
    def pwm_values(self):
        return np.array([s.pwm for s in self.samples])

    @property
    def power_values(self):
        return np.array([s.power for s in self.samples])

    @property
    def thrust_values(self):
        return np.array([s.thrust for s in self.samples])

    @property
    def domain(self):
        return float(self.samples[0].pwm), float(self.samples[-1].pwm)

    @property
    def max_thrust(self) -> ThrustKgf:
        return self.samples[-1].thrust

    @property
    def min_thrust(self) -> ThrustKgf:
        return self.samples[0].thrust

    @property
    def max_power(self) -> PowerW:
        return self.samples[-1].power

    def with_kind(self, kind):
        return MotorCurve(self.samples, kind)

    def _check_pwm(self, pwm):
        lo, hi = self.domain
        p = float(pwm)
        if not lo <= p <= hi:
            raise OutOfDomainError(
                f"pwm {p:g} us outside measured range [{lo:g}, {hi:g}] us")
        return p

    def thrust_at_pwm(self, pwm) -> ThrustKgf:
        return ThrustKgf(self._thrust(self._check_pwm(pwm)))

    def power_at_pwm(self, pwm) -> PowerW:
        return PowerW(self._power(self._check_pwm(pwm)))

    def pwm_for_thrust(self, thrust) -> PwmUs:
        """Smallest PWM whose interpolated thrust equals ``thrust``."""
        t = float(thrust)
        ts = self._thrust._ys
        xs = self._thrust._xs
        if t > ts[-1]:
            raise InsufficientThrustError(t, ts[-1])
        if not t >= ts[0]:
            raise OutOfDomainError(
                f"thrust {t:g} kgf below curve minimum {ts[0]:g} kgf")
        i = bisect_left(ts, t)
        if ts[i] == t:
            return PwmUs(xs[i])
        # ts[i-1] < t < ts[i]; the interpolant is monotone on this segment
        x0, x1 = xs[i - 1], xs[i]
        if self.kind == LINEAR:
            p = x0 + (t - ts[i - 1]) / (ts[i] - ts[i - 1]) * (x1 - x0)
            return PwmUs(min(max(p, x0), x1))
        lo, hi = x0, x1
        while hi - lo > _CUBIC_PWM_TOL:
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                break
            if self._thrust.segment_value(i - 1, mid) >= t:
                hi = mid
            else:
                lo = mid
        return PwmUs(hi)

    def power_for_thrust(self, thrust) -> PowerW:
        return self.power_at_pwm(self.pwm_for_thrust(thrust))

    def summary(self):
        lo, hi = self.domain
        return {"pwm_min_us": lo, "pwm_max_us": hi,
                "max_thrust_kgf": float(self.max_thrust),
                "max_power_w": float(self.max_power),
                "samples": len(self.samples), "interpolation": self.kind}


def thrust_at_pwm(curve: MotorCurve, pwm) -> ThrustKgf:
    return curve.thrust_at_pwm(pwm)


def power_at_pwm(curve: MotorCurve, pwm) -> PowerW:
    return curve.power_at_pwm(pwm)


def pwm_for_thrust(curve: MotorCurve, thrust) -> PwmUs:
    return curve.pwm_for_thrust(thrust)


def power_for_thrust(curve: MotorCurve, thrust) -> PowerW:
    return curve.power_for_thrust(thrust)


# --- CSV ingestion ---------------------------------------------------------

def _number(text, column, line):
    try:
        v = float(text)
    except (TypeError, ValueError):
        raise CurveError(f"line {line}: column {column!r} is not a number: {text!r}") from None
    if not math.isfinite(v):
        raise CurveError(f"line {line}: column {column!r} is not finite")
    return v


def read_thrust_stand_rows(lines):
    """Parse CSV text lines into ``(pwm, power_w, thrust_kgf)`` tuples."""
    body = [ln for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    reader = csv.DictReader(body)
    header = [h.strip() for h in (reader.fieldnames or [])]
    reader.fieldnames = header
    if "pwm_us" not in header:
        raise CurveError("missing column 'pwm_us'")
    if "power_w" in header:
        power_cols = ("power_w",)
    elif "voltage_v" in header and "current_a" in header:
        power_cols = ("voltage_v", "current_a")
    else:
        missing = "voltage_v" if "current_a" in header else "current_a"
        if "voltage_v" not in header and "current_a" not in header:
            missing = "power_w"
        raise CurveError(f"missing column {missing!r} (need power_w or voltage_v,current_a)")
    if "thrust_kgf" in header:
        thrust_col, scale = "thrust_kgf", 1.0
    elif "thrust_gf" in header:
        thrust_col, scale = "thrust_gf", 1e-3
    else:
        raise CurveError("missing column 'thrust_kgf' (or 'thrust_gf')")

    rows = []
    for line_no, rec in enumerate(reader, start=2):
        pwm = _number(rec.get("pwm_us"), "pwm_us", line_no)
        if len(power_cols) == 1:
            power = _number(rec.get("power_w"), "power_w", line_no)
        else:
            power = (_number(rec.get("voltage_v"), "voltage_v", line_no)
                     * _number(rec.get("current_a"), "current_a", line_no))
        thrust = _number(rec.get(thrust_col), thrust_col, line_no) * scale
        rows.append((pwm, power, thrust))
    return rows


def curve_from_rows(rows, kind=LINEAR) -> MotorCurve:
    """Average duplicate-PWM rows, sort, and validate into a MotorCurve."""
    groups = {}
    for pwm, power, thrust in rows:
        groups.setdefault(float(pwm), []).append((power, thrust))
    if len(groups) < MIN_SAMPLES:
        raise CurveError(f"too few rows: need at least {MIN_SAMPLES} distinct PWM "
                         f"values, got {len(groups)}")
    samples = []
    for pwm in sorted(groups):
        vals = groups[pwm]
        samples.append(ThrustStandSample(
            pwm,
            math.fsum(v[0] for v in vals) / len(vals),
            math.fsum(v[1] for v in vals) / len(vals)))
    return MotorCurve(tuple(samples), kind)


def ingest_thrust_stand(path, kind=LINEAR) -> MotorCurve:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CurveError(f"cannot read {path}: {exc.strerror}") from None
    return curve_from_rows(read_thrust_stand_rows(text.splitlines()), kind)


def write_curve(curve: MotorCurve, path):
    """Write the normalised (sorted, de-duplicated) sample table as CSV."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["pwm_us", "power_w", "thrust_kgf"])
        for s in curve.samples:
            w.writerow([repr(float(s.pwm)), repr(float(s.power)), repr(float(s.thrust))])
