"""Evaluate complete designs, sweep payload, and search part catalogs.

``evaluate_design`` runs the full check for one design: AUW and per-motor
thrust, hover PWM against the safety threshold, predicted endurance against
the target, and the battery pack against the feasibility frontier. Designs
the motors cannot lift come back as failed reports rather than exceptions.

``search_catalog`` replaces manual iteration over parts with exhaustive
enumeration; catalogs are small enough that this stays cheap.
"""
from __future__ import annotations

import csv
import itertools
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import power_budget as pb
from .battery_feasibility import (DEFAULT_PWM_STEP, BatteryVerdict, build_frontier,
                                  classify_battery)
from .catalog import Catalog, ComponentSpec, DesignSpec, design_to_dict
from .errors import InsufficientThrustError, ValidationError
from .motor_curve import MotorCurve, ingest_thrust_stand

DEFAULT_PWM_THRESHOLD = 1600.0


@dataclass(frozen=True)
class Check:
    passed: bool
    margin: Optional[float]

    def to_dict(self):
        return {"passed": self.passed, "margin": self.margin}


@dataclass(frozen=True)
class DesignReport:
    auw: float
    auw_other: float
    per_motor_thrust: float
    hover_pwm: Optional[float]
    hover_power: Optional[float]
    total_power: Optional[float]
    predicted_flight_time: Optional[float]
    pwm_check: Check
    endurance_check: Check
    battery_verdict: Optional[BatteryVerdict]
    pwm_threshold: float = DEFAULT_PWM_THRESHOLD
    target_flight_time: float = 0.0
    failure: Optional[str] = None
    name: str = ""

    @property
    def passed(self):
        return (self.failure is None and self.pwm_check.passed
                and self.endurance_check.passed
                and self.battery_verdict is not None and self.battery_verdict.feasible)

    def reasons(self):
        out = []
        if self.failure:
            out.append(self.failure)
        if self.failure is None and not self.pwm_check.passed:
            out.append(f"hover pwm {self.hover_pwm:.1f} us exceeds "
                       f"{self.pwm_threshold:g} us")
        if self.failure is None and not self.endurance_check.passed:
            out.append(f"predicted {self.predicted_flight_time:.2f} min below "
                       f"target {self.target_flight_time:g} min")
        if self.battery_verdict is not None and not self.battery_verdict.feasible:
            out.append("battery pack below feasibility frontier")
        return out

    def to_dict(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "auw": self.auw,
            "auw_other": self.auw_other,
            "per_motor_thrust": self.per_motor_thrust,
            "hover_pwm": self.hover_pwm,
            "hover_power": self.hover_power,
            "total_power": self.total_power,
            "predicted_flight_time": self.predicted_flight_time,
            "pwm_threshold": self.pwm_threshold,
            "target_flight_time": self.target_flight_time,
            "pwm_check": self.pwm_check.to_dict(),
            "endurance_check": self.endurance_check.to_dict(),
            "battery_verdict": (None if self.battery_verdict is None
                                else self.battery_verdict.to_dict()),
            "failure": self.failure,
            "reasons": self.reasons(),
        }

    def render_text(self):
        def num(v, unit):
            return "n/a" if v is None else f"{v:.4f} {unit}"

        def verdict(ok):
            return "PASS" if ok else "FAIL"

        lines = []
        if self.name:
            lines.append(f"design: {self.name}")
        lines += [
            f"AUW:                   {num(self.auw, 'kg')}",
            f"AUW (non-battery):     {num(self.auw_other, 'kg')}",
            f"per-motor thrust:      {num(self.per_motor_thrust, 'kgf')}",
            f"hover PWM:             {num(self.hover_pwm, 'µs')}",
            f"hover flight power:    {num(self.hover_power, 'W')}",
            f"total power:           {num(self.total_power, 'W')}",
            f"predicted flight time: {num(self.predicted_flight_time, 'min')}",
            f"PWM check:             {verdict(self.pwm_check.passed)} "
            f"(margin {num(self.pwm_check.margin, 'µs')})",
            f"endurance check:       {verdict(self.endurance_check.passed)} "
            f"(margin {num(self.endurance_check.margin, 'min')})",
        ]
        bv = self.battery_verdict
        if bv is not None:
            lines.append(
                f"battery frontier:      {verdict(bv.feasible)} "
                f"(capacity surplus {bv.capacity_surplus:.4f} Wh, "
                f"mass headroom {bv.mass_headroom:.4f} kg at {bv.pwm:.4f} µs)")
        for r in self.reasons():
            lines.append(f"  - {r}")
        lines.append(f"overall: {verdict(self.passed)}")
        return "\n".join(lines)


def evaluate_design(design: DesignSpec, curve: MotorCurve,
                    pwm_threshold=DEFAULT_PWM_THRESHOLD, pwm_step=DEFAULT_PWM_STEP,
                    name="") -> DesignReport:
    if not design.batteries:
        raise ValidationError("batteries", "design needs at least one battery")
    n = design.motor_count
    auw = float(design.auw)
    auw_other = float(design.auw_other)
    thrust = float(pb.per_motor_thrust(auw, n))
    target = float(design.target_flight_time)

    frontier = build_frontier(curve, n, auw_other, design.compute_power,
                              design.radio_power, target, design.usable_fraction,
                              pwm_step, design.loss_power)
    verdict = classify_battery(frontier, design.battery_mass, design.battery_capacity)
    common = dict(auw=auw, auw_other=auw_other, per_motor_thrust=thrust,
                  battery_verdict=verdict, pwm_threshold=float(pwm_threshold),
                  target_flight_time=target, name=name)
    try:
        hover_pwm = float(curve.pwm_for_thrust(thrust))
        budget = pb.design_budget(design, curve, auw)
    except InsufficientThrustError as exc:
        return DesignReport(hover_pwm=None, hover_power=None, total_power=None,
                            predicted_flight_time=None,
                            pwm_check=Check(False, None),
                            endurance_check=Check(False, None),
                            failure=f"insufficient thrust: {exc}", **common)
    total = float(pb.total_power(budget))
    minutes = float(pb.predict_endurance(design, curve))
    pwm_margin = float(pwm_threshold) - hover_pwm
    time_margin = minutes - target
    return DesignReport(
        hover_pwm=hover_pwm, hover_power=float(budget.flight_power),
        total_power=total, predicted_flight_time=minutes,
        pwm_check=Check(hover_pwm <= pwm_threshold, pwm_margin),
        endurance_check=Check(time_margin >= 0, time_margin),
        **common)


# --- payload sweep ---------------------------------------------------------

@dataclass(frozen=True)
class SweepPoint:
    auw: float
    flight_power: float
    predicted_flight_time: float
    payload: float = 0.0


@dataclass
class Sweep:
    """Sweep output. ``truncated_at`` is the first payload (kg) the motors
    could not lift, or None if the whole range was flown."""
    points: list = field(default_factory=list)
    truncated_at: Optional[float] = None

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def write_csv(self, fh):
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["auw_kg", "flight_power_w", "flight_time_min"])
        for p in self.points:
            w.writerow([repr(p.auw), repr(p.flight_power), repr(p.predicted_flight_time)])


def _payload_steps(lo, hi, step):
    if not step > 0:
        raise ValueError(f"step must be > 0, got {step}")
    if hi < lo:
        raise ValueError("payload range upper bound below lower bound")
    count = int(math.floor((hi - lo) / step + 1e-9))
    return [lo + k * step for k in range(count + 1)]


def sweep_auw(design: DesignSpec, curve: MotorCurve, payload_range=(0.0, 0.0),
              step=0.05) -> Sweep:
    """Add payload mass in ``step`` kg increments and re-predict endurance."""
    lo, hi = (float(v) for v in payload_range)
    if lo < 0:
        raise ValueError("payload range must be non-negative")
    sweep = Sweep()
    for payload in _payload_steps(lo, hi, step):
        loaded = design
        if payload > 0:
            loaded = design.with_payloads(
                ComponentSpec("payload", f"sweep payload {payload:g} kg", payload))
        auw = float(loaded.auw)
        try:
            power = float(pb.hover_flight_power(curve, auw, design.motor_count))
            minutes = float(pb.predict_endurance(loaded, curve))
        except InsufficientThrustError:
            sweep.truncated_at = payload
            break
        sweep.points.append(SweepPoint(auw, power, minutes, payload))
    return sweep


# --- catalog search --------------------------------------------------------

@dataclass
class SearchResult:
    passing: list
    failures: list  # (design name, reasons) pairs, sorted by name

    def to_dict(self):
        return {"passing": [r.to_dict() for r in self.passing],
                "failures": [{"name": n, "reasons": list(r)} for n, r in self.failures]}


_SEARCH_KINDS = ("motor", "propeller", "esc", "frame", "fcu", "compute", "radio",
                 "battery")


def _design_name(parts, battery, count):
    tags = [f"{k}={parts[k].name}" for k in _SEARCH_KINDS[:-1]]
    tags.append(f"battery={count}x{battery.name}")
    return " | ".join(tags)


def _resolve_curves(catalog, curves):
    out = {}
    source = dict(catalog.curves)
    source.update(curves or {})
    for motor in catalog.of_kind("motor"):
        c = source.get(motor.name)
        if c is None:
            raise ValidationError(f"motor:{motor.name}", "no motor curve supplied")
        out[motor.name] = c if isinstance(c, MotorCurve) else ingest_thrust_stand(Path(c))
    return out


def search_catalog(catalog: Catalog, curves=None, target_flight_time=None,
                   pwm_threshold=DEFAULT_PWM_THRESHOLD, max_auw=None,
                   pwm_step=DEFAULT_PWM_STEP, usable_fraction=None,
                   loss_power=None, interp=None) -> SearchResult:
    """Enumerate every part combination with 1..max_battery_count identical
    batteries, evaluate each, and rank the passing ones by flight time
    (longest first), then AUW (lightest first), then name."""
    for kind in _SEARCH_KINDS:
        if not catalog.of_kind(kind):
            raise ValidationError(kind, f"catalog has no {kind} entries")
    curve_map = _resolve_curves(catalog, curves)
    if interp is not None:
        curve_map = {k: c.with_kind(interp) for k, c in curve_map.items()}
    target = catalog.target_flight_time if target_flight_time is None else target_flight_time
    fraction = catalog.usable_fraction if usable_fraction is None else usable_fraction
    loss = catalog.loss_power if loss_power is None else loss_power
    n = catalog.motor_count
    payloads = catalog.of_kind("payload")

    passing, failures = [], []
    pools = [catalog.of_kind(k) for k in _SEARCH_KINDS[:-1]]
    for combo in itertools.product(*pools):
        parts = dict(zip(_SEARCH_KINDS[:-1], combo))
        curve = curve_map[parts["motor"].name]
        base = DesignSpec(**parts, batteries=(), extra_payloads=tuple(payloads),
                          motor_count=n, target_flight_time=target,
                          usable_fraction=fraction, loss_power=loss)
        # nothing heavier than the full-throttle lift limit can hover
        lift_limit = n * float(curve.max_thrust) - float(base.auw_other)
        for battery in catalog.of_kind("battery"):
            for count in range(1, catalog.max_battery_count + 1):
                name = _design_name(parts, battery, count)
                if count * float(battery.mass) > lift_limit:
                    failures.append((name, (
                        f"pruned: {count} x {float(battery.mass):g} kg battery exceeds "
                        f"liftable mass {lift_limit:.4f} kg",)))
                    continue
                design = base.with_batteries([battery] * count)
                report = evaluate_design(design, curve, pwm_threshold, pwm_step, name)
                reasons = report.reasons()
                if max_auw is not None and report.auw > max_auw:
                    reasons.append(f"AUW {report.auw:.4f} kg above limit {max_auw:g} kg")
                if report.passed and len(reasons) == 0:
                    passing.append((report, design))
                else:
                    failures.append((name, tuple(reasons)))

    def rank(item):
        report, design = item
        # full design JSON breaks ties between identically named parts
        return (-report.predicted_flight_time, report.auw, report.name,
                json.dumps(design_to_dict(design), sort_keys=True))

    passing.sort(key=rank)
    failures.sort()
    return SearchResult(passing=[r for r, _ in passing], failures=failures)
