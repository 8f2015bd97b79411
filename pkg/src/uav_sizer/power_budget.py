"""Hover power budget and flight-time prediction.

Total draw is flight + compute + radio + loss power. Flight power in hover is
``n`` times the single-motor power needed to carry AUW/n, with AUW in kg read
directly as kgf of thrust. Flight time is the usable share of stored energy
divided by total draw.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .catalog import DEFAULT_USABLE_FRACTION, DesignSpec
from .errors import EnduranceUndefinedError, InsufficientThrustError
from .motor_curve import MotorCurve
from .units import EnergyWh, MassKg, PowerW, ThrustKgf, TimeMin, kg_to_kgf


@dataclass(frozen=True)
class PowerBudget:
    flight_power: PowerW
    compute_power: PowerW = PowerW(0.0)
    radio_power: PowerW = PowerW(0.0)
    loss_power: PowerW = PowerW(0.0)

    def __post_init__(self):
        for name in ("flight_power", "compute_power", "radio_power", "loss_power"):
            object.__setattr__(self, name, PowerW(getattr(self, name)))


@dataclass(frozen=True)
class EnergyStore:
    total_capacity: EnergyWh
    usable_fraction: float = DEFAULT_USABLE_FRACTION

    def __post_init__(self):
        cap = EnergyWh(self.total_capacity)
        if cap <= 0:
            raise ValueError("energy store capacity must be > 0")
        object.__setattr__(self, "total_capacity", cap)
        if not 0 < self.usable_fraction <= 1:
            raise ValueError(f"usable_fraction must lie in (0, 1], got {self.usable_fraction}")

    @property
    def usable_wh(self):
        return self.usable_fraction * self.total_capacity


def total_power(budget: PowerBudget) -> PowerW:
    return PowerW(math.fsum((budget.flight_power, budget.compute_power,
                             budget.radio_power, budget.loss_power)))


def flight_time(store: EnergyStore, total) -> TimeMin:
    total = float(total)
    if not total > 0:
        raise EnduranceUndefinedError("flight time undefined for zero total power")
    return TimeMin(60.0 * store.usable_fraction * store.total_capacity / total)


def per_motor_thrust(auw, n) -> ThrustKgf:
    if n < 3:
        raise ValueError(f"motor count must be >= 3, got {n}")
    return kg_to_kgf(MassKg(auw) / n)


def hover_flight_power(curve: MotorCurve, auw, n) -> PowerW:
    """Electrical power for ``n`` motors to hold ``auw`` kg in hover.

    Raises InsufficientThrustError (with ``deficit`` in kgf per motor) when
    AUW/n is beyond what the curve can produce.
    """
    thrust = per_motor_thrust(auw, n)
    if thrust > curve.max_thrust:
        raise InsufficientThrustError(thrust, curve.max_thrust)
    return PowerW(n * curve.power_for_thrust(thrust))


def design_budget(design: DesignSpec, curve: MotorCurve, auw=None) -> PowerBudget:
    auw = design.auw if auw is None else auw
    return PowerBudget(
        flight_power=hover_flight_power(curve, auw, design.motor_count),
        compute_power=design.compute_power,
        radio_power=design.radio_power,
        loss_power=design.loss_power,
    )


def predict_endurance(design: DesignSpec, curve: MotorCurve) -> TimeMin:
    if not design.batteries:
        raise EnduranceUndefinedError("design carries no batteries")
    store = EnergyStore(design.battery_capacity, design.usable_fraction)
    return flight_time(store, total_power(design_budget(design, curve)))
