"""Component and design records, plus the JSON design/catalog file format.

Mass fields in files always carry a unit, ``{"g": 170}`` or ``{"kg": 0.17}``.
Batteries specify energy directly (``capacity_wh``) or through
``cells`` x ``nominal_cell_voltage`` x ``amp_hours``; when both are present
they must agree to within 1 %.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable, Optional

from .errors import ParseError, ValidationError
from .units import EnergyWh, MassKg, PowerW, TimeMin

KINDS = ("motor", "propeller", "esc", "frame", "fcu", "compute", "radio",
         "battery", "payload")
POWERED_KINDS = ("compute", "radio")
DEFAULT_CELL_VOLTAGE = 3.7
DEFAULT_USABLE_FRACTION = 0.8
CAPACITY_TOLERANCE = 0.01

DESIGN_KEYS = ("motor", "propeller", "esc", "frame", "fcu", "compute", "radio",
               "batteries", "payloads", "motor_count", "target_flight_time_min",
               "usable_fraction", "loss_power_w")


@dataclass(frozen=True)
class ComponentSpec:
    kind: str
    name: str
    mass: MassKg
    max_power: Optional[PowerW] = None
    capacity: Optional[EnergyWh] = None
    cell_count: Optional[int] = None
    amp_hours: Optional[float] = None
    nominal_cell_voltage: Optional[float] = None

    def __post_init__(self):
        where = f"{self.kind}:{self.name}"
        if self.kind not in KINDS:
            raise ValidationError("kind", f"unknown component kind {self.kind!r}")
        try:
            mass = MassKg(self.mass)
        except ValueError as exc:
            raise ValidationError(f"{where}.mass", str(exc)) from None
        if mass <= 0:
            raise ValidationError(f"{where}.mass", "must be > 0")
        object.__setattr__(self, "mass", mass)

        if self.kind in POWERED_KINDS:
            try:
                object.__setattr__(self, "max_power", PowerW(self.max_power or 0.0))
            except ValueError as exc:
                raise ValidationError(f"{where}.max_power_w", str(exc)) from None
        elif self.max_power is not None:
            raise ValidationError(f"{where}.max_power_w",
                                  f"not allowed on {self.kind}")

        if self.kind == "battery":
            object.__setattr__(self, "capacity", self._resolve_capacity(where))
        elif self.capacity is not None or self.cell_count is not None:
            raise ValidationError(f"{where}.capacity_wh",
                                  f"not allowed on {self.kind}")

    def _resolve_capacity(self, where):
        derived = None
        pack = (self.cell_count, self.amp_hours)
        if any(v is not None for v in pack):
            if any(v is None for v in pack):
                raise ValidationError(f"{where}.cells",
                                      "cells and amp_hours must be given together")
            if int(self.cell_count) != self.cell_count or self.cell_count < 1:
                raise ValidationError(f"{where}.cells", "must be a positive integer")
            if not (self.amp_hours > 0 and math.isfinite(self.amp_hours)):
                raise ValidationError(f"{where}.amp_hours", "must be > 0")
            volts = (DEFAULT_CELL_VOLTAGE if self.nominal_cell_voltage is None
                     else self.nominal_cell_voltage)
            if not (volts > 0 and math.isfinite(volts)):
                raise ValidationError(f"{where}.nominal_cell_voltage", "must be > 0")
            object.__setattr__(self, "nominal_cell_voltage", float(volts))
            derived = self.cell_count * volts * self.amp_hours

        if self.capacity is None:
            if derived is None:
                raise ValidationError(
                    f"{where}.capacity_wh",
                    "battery needs capacity_wh or cells/amp_hours")
            capacity = derived
        else:
            capacity = self.capacity
            if derived is not None and \
                    abs(derived - capacity) > CAPACITY_TOLERANCE * capacity:
                raise ValidationError(
                    f"{where}.capacity_wh",
                    f"explicit {capacity:g} Wh disagrees with derived "
                    f"{derived:g} Wh by more than 1%")
        try:
            capacity = EnergyWh(capacity)
        except ValueError as exc:
            raise ValidationError(f"{where}.capacity_wh", str(exc)) from None
        if capacity <= 0:
            raise ValidationError(f"{where}.capacity_wh", "must be > 0")
        return capacity


def total_mass(parts: Iterable[ComponentSpec]) -> MassKg:
    # fsum is exactly rounded, so the result does not depend on order
    return MassKg(math.fsum(p.mass for p in parts))


@dataclass(frozen=True)
class DesignSpec:
    motor: ComponentSpec
    propeller: ComponentSpec
    esc: ComponentSpec
    frame: ComponentSpec
    fcu: ComponentSpec
    compute: ComponentSpec
    radio: ComponentSpec
    batteries: tuple = ()
    extra_payloads: tuple = ()
    motor_count: int = 4
    target_flight_time: TimeMin = TimeMin(0.0)
    usable_fraction: float = DEFAULT_USABLE_FRACTION
    loss_power: PowerW = PowerW(0.0)

    def __post_init__(self):
        for slot in ("motor", "propeller", "esc", "frame", "fcu", "compute", "radio"):
            part = getattr(self, slot)
            if not isinstance(part, ComponentSpec) or part.kind != slot:
                raise ValidationError(slot, f"expected a {slot} component")
        object.__setattr__(self, "batteries", tuple(self.batteries))
        object.__setattr__(self, "extra_payloads", tuple(self.extra_payloads))
        for b in self.batteries:
            if b.kind != "battery":
                raise ValidationError("batteries", f"{b.name!r} is a {b.kind}")
        for p in self.extra_payloads:
            if p.kind != "payload":
                raise ValidationError("payloads", f"{p.name!r} is a {p.kind}")
        n = self.motor_count
        if isinstance(n, bool) or int(n) != n or n < 3:
            raise ValidationError("motor_count", f"must be an integer >= 3, got {n!r}")
        object.__setattr__(self, "motor_count", int(n))
        f = self.usable_fraction
        if not (isinstance(f, (int, float)) and 0 < f <= 1):
            raise ValidationError("usable_fraction", f"must lie in (0, 1], got {f!r}")
        object.__setattr__(self, "usable_fraction", float(f))
        try:
            object.__setattr__(self, "target_flight_time", TimeMin(self.target_flight_time))
        except ValueError as exc:
            raise ValidationError("target_flight_time_min", str(exc)) from None
        try:
            object.__setattr__(self, "loss_power", PowerW(self.loss_power))
        except ValueError as exc:
            raise ValidationError("loss_power_w", str(exc)) from None

    def propulsion_parts(self):
        return [self.motor, self.propeller, self.esc] * self.motor_count

    def non_battery_parts(self):
        return (self.propulsion_parts()
                + [self.frame, self.fcu, self.compute, self.radio]
                + list(self.extra_payloads))

    def all_parts(self):
        return self.non_battery_parts() + list(self.batteries)

    @property
    def auw(self) -> MassKg:
        return total_mass(self.all_parts())

    @property
    def auw_other(self) -> MassKg:
        return total_mass(self.non_battery_parts())

    @property
    def battery_mass(self) -> MassKg:
        return total_mass(self.batteries)

    @property
    def battery_capacity(self) -> EnergyWh:
        return EnergyWh(math.fsum(b.capacity for b in self.batteries))

    @property
    def compute_power(self) -> PowerW:
        return self.compute.max_power

    @property
    def radio_power(self) -> PowerW:
        return self.radio.max_power

    def with_payloads(self, *payloads):
        return replace(self, extra_payloads=self.extra_payloads + tuple(payloads))

    def with_batteries(self, batteries):
        return replace(self, batteries=tuple(batteries))


# --- file format -----------------------------------------------------------

def parse_mass(value, where):
    if isinstance(value, bool) or not isinstance(value, dict) or len(value) != 1:
        raise ValidationError(where, 'mass must be {"g": x} or {"kg": x}')
    (unit, amount), = value.items()
    if unit not in ("g", "kg"):
        raise ValidationError(where, f"unknown mass unit {unit!r}")
    if isinstance(amount, bool) or not isinstance(amount, (int, float)):
        raise ValidationError(where, "mass magnitude must be a number")
    return amount / 1000.0 if unit == "g" else float(amount)


_ENTRY_KEYS = {"name", "mass", "max_power_w", "capacity_wh", "cells",
               "amp_hours", "nominal_cell_voltage", "count", "curve"}


def parse_component(kind, entry, where=None):
    """Build a ComponentSpec from one JSON object. Returns (spec, count)."""
    where = where or kind
    if not isinstance(entry, dict):
        raise ValidationError(where, "component entry must be an object")
    unknown = set(entry) - _ENTRY_KEYS
    if unknown:
        raise ValidationError(where, f"unknown field(s) {sorted(unknown)}")
    if "mass" not in entry:
        raise ValidationError(f"{where}.mass", "missing")
    count = entry.get("count", 1)
    if isinstance(count, bool) or not isinstance(count, int) or count < 1:
        raise ValidationError(f"{where}.count", "must be a positive integer")
    spec = ComponentSpec(
        kind=kind,
        name=str(entry.get("name", kind)),
        mass=parse_mass(entry["mass"], f"{where}.mass"),
        max_power=entry.get("max_power_w"),
        capacity=entry.get("capacity_wh"),
        cell_count=entry.get("cells"),
        amp_hours=entry.get("amp_hours"),
        nominal_cell_voltage=entry.get("nominal_cell_voltage"),
    )
    return spec, count


def _parse_list(kind, entries, where):
    if not isinstance(entries, list):
        raise ValidationError(where, "must be a list")
    out = []
    for i, entry in enumerate(entries):
        spec, count = parse_component(kind, entry, f"{where}[{i}]")
        out.extend([spec] * count)
    return out


def _read_json(path):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: malformed JSON at line {exc.lineno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ParseError(f"{path}: top level must be an object")
    return data


def design_from_dict(data) -> DesignSpec:
    unknown = set(data) - set(DESIGN_KEYS)
    if unknown:
        raise ValidationError("design", f"unknown key(s) {sorted(unknown)}")
    parts = {}
    for slot in ("motor", "propeller", "esc", "frame", "fcu", "compute", "radio"):
        if slot not in data:
            raise ValidationError(slot, "missing")
        spec, count = parse_component(slot, data[slot])
        if count != 1:
            raise ValidationError(f"{slot}.count", "only batteries and payloads take a count")
        parts[slot] = spec
    if "motor_count" not in data:
        raise ValidationError("motor_count", "missing")
    if "target_flight_time_min" not in data:
        raise ValidationError("target_flight_time_min", "missing")
    target = data["target_flight_time_min"]
    if isinstance(target, bool) or not isinstance(target, (int, float)):
        raise ValidationError("target_flight_time_min", "must be a number")
    return DesignSpec(
        **parts,
        batteries=_parse_list("battery", data.get("batteries", []), "batteries"),
        extra_payloads=_parse_list("payload", data.get("payloads", []), "payloads"),
        motor_count=data["motor_count"],
        target_flight_time=target,
        usable_fraction=data.get("usable_fraction", DEFAULT_USABLE_FRACTION),
        loss_power=data.get("loss_power_w", 0.0),
    )


def load_design(path) -> DesignSpec:
    return design_from_dict(_read_json(path))


def component_to_dict(c: ComponentSpec) -> dict:
    out = {"name": c.name, "mass": {"kg": float(c.mass)}}
    if c.max_power is not None:
        out["max_power_w"] = float(c.max_power)
    if c.capacity is not None:
        out["capacity_wh"] = float(c.capacity)
    if c.cell_count is not None:
        out["cells"] = c.cell_count
        out["amp_hours"] = c.amp_hours
        out["nominal_cell_voltage"] = c.nominal_cell_voltage
    return out


def design_to_dict(d: DesignSpec) -> dict:
    """Inverse of :func:`design_from_dict` (masses normalised to kg)."""
    out = {slot: component_to_dict(getattr(d, slot))
           for slot in ("motor", "propeller", "esc", "frame", "fcu", "compute", "radio")}
    out["batteries"] = [component_to_dict(b) for b in d.batteries]
    out["payloads"] = [component_to_dict(p) for p in d.extra_payloads]
    out["motor_count"] = d.motor_count
    out["target_flight_time_min"] = float(d.target_flight_time)
    out["usable_fraction"] = d.usable_fraction
    out["loss_power_w"] = float(d.loss_power)
    return out


# --- search catalogs -------------------------------------------------------

CATALOG_LISTS = {"motors": "motor", "propellers": "propeller", "escs": "esc",
                 "frames": "frame", "fcus": "fcu", "computes": "compute",
                 "radios": "radio", "batteries": "battery", "payloads": "payload"}
CATALOG_SETTINGS = ("motor_count", "max_battery_count", "target_flight_time_min",
                    "usable_fraction", "loss_power_w")


@dataclass(frozen=True)
class Catalog:
    """Candidate parts for an exhaustive design search.

    ``curves`` maps motor name to a path (or a loaded MotorCurve). Payloads
    are fixed: every candidate design carries all of them.
    """
    parts: dict
    curves: dict = field(default_factory=dict)
    motor_count: int = 4
    max_battery_count: int = 4
    target_flight_time: float = 0.0
    usable_fraction: float = DEFAULT_USABLE_FRACTION
    loss_power: float = 0.0

    def of_kind(self, kind):
        return list(self.parts.get(kind, ()))


def load_catalog(path) -> Catalog:
    """Read a search catalog. Motor ``curve`` paths resolve relative to the file."""
    path = Path(path)
    data = _read_json(path)
    unknown = set(data) - set(CATALOG_LISTS) - set(CATALOG_SETTINGS)
    if unknown:
        raise ValidationError("catalog", f"unknown key(s) {sorted(unknown)}")
    parts, curves = {}, {}
    for key, kind in CATALOG_LISTS.items():
        entries = data.get(key, [])
        if not isinstance(entries, list):
            raise ValidationError(key, "must be a list")
        specs = []
        for i, entry in enumerate(entries):
            spec, count = parse_component(kind, entry, f"{key}[{i}]")
            if kind == "payload":
                specs.extend([spec] * count)
                continue
            if count != 1:
                raise ValidationError(f"{key}[{i}].count",
                                      "only payloads take a count in catalogs")
            if kind == "motor":
                if "curve" not in entry:
                    raise ValidationError(f"{key}[{i}].curve", "motor needs a curve file")
                curves[spec.name] = (path.parent / entry["curve"]).resolve()
            specs.append(spec)
        parts[kind] = specs
    max_count = data.get("max_battery_count", 4)
    if isinstance(max_count, bool) or not isinstance(max_count, int) or max_count < 1:
        raise ValidationError("max_battery_count", "must be a positive integer")
    return Catalog(
        parts=parts,
        curves=curves,
        motor_count=data.get("motor_count", 4),
        max_battery_count=max_count,
        target_flight_time=data.get("target_flight_time_min", 0.0),
        usable_fraction=data.get("usable_fraction", DEFAULT_USABLE_FRACTION),
        loss_power=data.get("loss_power_w", 0.0),
    )
