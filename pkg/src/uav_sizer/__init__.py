"""Sizing toolkit for multirotor UAVs that carry computers and radios.

Typical flow: ingest a thrust-stand table into a :class:`MotorCurve`, load a
:class:`DesignSpec`, then :func:`evaluate_design` for the hover PWM,
endurance and battery-frontier checks.
"""
from .battery_feasibility import (BatteryVerdict, FeasibilityFrontier, FrontierPoint,
                                  build_frontier, classify_battery,
                                  max_battery_mass_at_pwm, required_capacity_at_pwm)
from .catalog import (Catalog, ComponentSpec, DesignSpec, design_from_dict,
                      design_to_dict, load_catalog, load_design, total_mass)
from .design_loop import (DesignReport, SearchResult, Sweep, SweepPoint,
                          evaluate_design, search_catalog, sweep_auw)
from .errors import (CurveError, EnduranceUndefinedError, InputError,
                     InsufficientThrustError, OutOfDomainError, ParseError,
                     ValidationError)
from .motor_curve import (MotorCurve, ThrustStandSample, ingest_thrust_stand,
                          power_at_pwm, power_for_thrust, pwm_for_thrust,
                          thrust_at_pwm)
from .power_budget import (EnergyStore, PowerBudget, flight_time, hover_flight_power,
                           per_motor_thrust, predict_endurance, total_power)
from .units import EnergyWh, MassKg, PowerW, PwmUs, ThrustKgf, TimeMin

__version__ = "0.1.0"
