"""Bundled reference data.

``monarch_mn501s.csv`` is a synthetic thrust-stand table for an MN501-S
KV240 motor with a 20x6.5 propeller on 8S. It is not a measurement. It was
generated from a smooth power-law model, with thrust reaching 1.214 kgf near
1260 us and per-motor power around 171 W at 1.27 kgf, so that the bundled
prototype design at 5.08 kg predicts roughly 44.4 min. Endurance checks
against it are calibration-consistency checks, not independent predictions.

``f3.csv`` is a three-point toy curve that is convenient for hand arithmetic.
"""
from __future__ import annotations

from importlib import resources

from .catalog import load_catalog, load_design
from .interpolation import LINEAR
from .motor_curve import ingest_thrust_stand


def path(name):
    """Filesystem path of a bundled data file."""
    return resources.files("uav_sizer") / "data" / name


def monarch_curve(kind=LINEAR):
    return ingest_thrust_stand(path("monarch_mn501s.csv"), kind)


def f3_curve(kind=LINEAR):
    return ingest_thrust_stand(path("f3.csv"), kind)


def monarch_design():
    return load_design(path("monarch_design.json"))


def monarch_catalog():
    return load_catalog(path("monarch_catalog.json"))
