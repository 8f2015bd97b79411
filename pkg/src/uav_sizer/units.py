"""Scalar physical quantities with fixed units.

Each type is a ``float`` subclass that validates on construction, so values
can flow straight into numpy and ordinary arithmetic (which returns plain
floats). Wrap results back into a quantity type at module boundaries.
"""
from __future__ import annotations

import math


class _Quantity(float):
    unit = ""
    minimum = 0.0
    maximum = math.inf

    def __new__(cls, value):
        v = float(value)
        if not math.isfinite(v):
            raise ValueError(f"{cls.__name__} must be finite, got {value!r}")
        if v < cls.minimum or v > cls.maximum:
            raise ValueError(
                f"{cls.__name__} must lie in [{cls.minimum:g}, {cls.maximum:g}] "
                f"{cls.unit}, got {v:g}")
        return super().__new__(cls, v)

    def __repr__(self):
        return f"{type(self).__name__}({float(self)!r})"

    def __str__(self):
        return f"{float(self):g} {self.unit}"


class MassKg(_Quantity):
    unit = "kg"


class PowerW(_Quantity):
    unit = "W"


class EnergyWh(_Quantity):
    unit = "Wh"


class ThrustKgf(_Quantity):
    unit = "kgf"


class TimeMin(_Quantity):
    unit = "min"


class PwmUs(_Quantity):
    """ESC command pulse width; limited to the plausible signal range."""
    unit = "us"
    minimum = 800.0
    maximum = 2200.0


def kg_to_kgf(mass):
    """Hover identity used throughout: 1 kg of AUW needs 1 kgf of thrust."""
    return ThrustKgf(mass)
