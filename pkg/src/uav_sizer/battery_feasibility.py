"""Battery capacity versus battery mass feasibility frontier.

For every sampled hover PWM the frontier pairs two bounds:

* the most battery mass the motors can hold up, ``n*T(pwm) - auw_other``;
* the least capacity that keeps the aircraft up for the target time at that
  throttle, ``(n*P(pwm) + P_C + P_R + P_L) * t_f / usable_fraction``.

A battery is viable if some sampled PWM satisfies both at once. Only the
sampled points are used; nothing is interpolated between them.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .motor_curve import MotorCurve
from .units import EnergyWh, PwmUs

DEFAULT_PWM_STEP = 10.0


def required_capacity_at_pwm(curve: MotorCurve, pwm, n, compute_power, radio_power,
                             flight_time_min, usable_fraction=0.8,
                             loss_power=0.0) -> EnergyWh:
    if flight_time_min < 0:
        raise ValueError(f"flight time must be >= 0, got {flight_time_min}")
    if not 0 < usable_fraction <= 1:
        raise ValueError(f"usable_fraction must lie in (0, 1], got {usable_fraction}")
    draw = math.fsum((n * curve.power_at_pwm(pwm), compute_power, radio_power, loss_power))
    return EnergyWh(draw * (flight_time_min / 60.0) / usable_fraction)


def max_battery_mass_at_pwm(curve: MotorCurve, pwm, n, auw_other) -> float:
    """Liftable battery mass in kg; zero or negative means none at this PWM."""
    return n * curve.thrust_at_pwm(pwm) - float(auw_other)


@dataclass(frozen=True)
class FrontierPoint:
    pwm: PwmUs
    max_battery_mass: float
    required_capacity: EnergyWh

    @property
    def liftable(self):
        return self.max_battery_mass > 0


@dataclass(frozen=True)
class FeasibilityFrontier:
    points: tuple
    auw_other: float
    motor_count: int
    compute_power: float
    radio_power: float
    flight_time: float
    usable_fraction: float
    loss_power: float = 0.0

    def as_arrays(self):
        return (np.array([p.pwm for p in self.points]),
                np.array([p.max_battery_mass for p in self.points]),
                np.array([p.required_capacity for p in self.points]))

    def rows(self):
        return [(float(p.pwm), float(p.max_battery_mass), float(p.required_capacity))
                for p in self.points]

    def write_csv(self, path_or_file):
        header = ["pwm_us", "max_battery_mass_kg", "required_capacity_wh"]
        if hasattr(path_or_file, "write"):
            _write_rows(path_or_file, header, self.rows())
        else:
            with open(path_or_file, "w", newline="", encoding="utf-8") as fh:
                _write_rows(fh, header, self.rows())


def _write_rows(fh, header, rows):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([repr(v) for v in row])


def pwm_grid(curve: MotorCurve, pwm_step=DEFAULT_PWM_STEP):
    """Sample PWMs from the low end of the curve in ``pwm_step`` increments.

    The top of the measured range is appended when the step does not land on it.
    """
    if not pwm_step > 0:
        raise ValueError(f"pwm_step must be > 0, got {pwm_step}")
    lo, hi = curve.domain
    count = int(math.floor((hi - lo) / pwm_step + 1e-9))
    grid = [lo + k * pwm_step for k in range(count + 1)]
    grid[-1] = min(grid[-1], hi)
    if hi - grid[-1] > 1e-9 * pwm_step:
        grid.append(hi)
    return grid


def build_frontier(curve: MotorCurve, n, auw_other, compute_power, radio_power,
                   flight_time_min, usable_fraction=0.8, pwm_step=DEFAULT_PWM_STEP,
                   loss_power=0.0) -> FeasibilityFrontier:
    if flight_time_min < 0:
        raise ValueError(f"flight time must be >= 0, got {flight_time_min}")
    if not 0 < usable_fraction <= 1:
        raise ValueError(f"usable_fraction must lie in (0, 1], got {usable_fraction}")
    grid = pwm_grid(curve, pwm_step)
    # one vectorised pass; same arithmetic as the per-point helpers above
    thrust = curve._thrust(np.array(grid)).tolist()
    power = curve._power(np.array(grid)).tolist()
    other = float(auw_other)
    hours = flight_time_min / 60.0
    points = []
    for pwm, t, p in zip(grid, thrust, power):
        draw = math.fsum((n * p, compute_power, radio_power, loss_power))
        points.append(FrontierPoint(PwmUs(pwm), n * t - other,
                                    EnergyWh(draw * hours / usable_fraction)))
    for a, b in zip(points, points[1:]):
        if b.max_battery_mass < a.max_battery_mass or \
                b.required_capacity < a.required_capacity:
            raise ValueError(f"frontier not monotone at pwm {b.pwm:g} us")
    return FeasibilityFrontier(
        points=tuple(points), auw_other=float(auw_other), motor_count=n,
        compute_power=float(compute_power), radio_power=float(radio_power),
        flight_time=float(flight_time_min), usable_fraction=float(usable_fraction),
        loss_power=float(loss_power))


@dataclass(frozen=True)
class BatteryVerdict:
    feasible: bool
    pwm: Optional[float]
    capacity_surplus: float
    mass_headroom: float

    def to_dict(self):
        return {"feasible": self.feasible, "pwm": self.pwm,
                "capacity_surplus_wh": self.capacity_surplus,
                "mass_headroom_kg": self.mass_headroom}


def classify_battery(frontier: FeasibilityFrontier, battery_mass,
                     battery_capacity) -> BatteryVerdict:
    """Check a battery pack against every sampled frontier point.

    Margins are reported at the point where the tighter of the two relative
    margins is largest; for an infeasible pack that is the nearest miss.
    """
    if not frontier.points:
        raise ValueError("empty frontier")
    mass = float(battery_mass)
    capacity = float(battery_capacity)
    best = None
    for p in frontier.points:
        surplus = capacity - p.required_capacity
        headroom = p.max_battery_mass - mass
        ok = surplus >= 0 and headroom >= 0
        rel_cap = surplus / p.required_capacity if p.required_capacity > 0 else math.inf
        rel_mass = headroom / max(frontier.auw_other + mass, 1e-12)
        score = (ok, min(rel_cap, rel_mass))
        if best is None or score > best[0]:
            best = (score, p, surplus, headroom)
    (ok, _), p, surplus, headroom = best
    return BatteryVerdict(feasible=ok, pwm=float(p.pwm),
                          capacity_surplus=surplus, mass_headroom=headroom)
