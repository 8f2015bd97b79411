"""Random fixtures and independent oracles shared by the test modules.

The oracles deliberately avoid the package's interpolation code: linear
queries are answered by scanning segments in plain Python, cubic ones by
scipy's PchipInterpolator plus brentq root finding.
"""
import math

import numpy as np
from scipy.interpolate import PchipInterpolator
from scipy.optimize import brentq

from uav_sizer import MotorCurve
from uav_sizer.catalog import ComponentSpec, DesignSpec


def random_samples(rng, n_min=3, n_max=12, strict_thrust=True, allow_flat=False):
    """Monotone thrust-stand table with random spacing and increments."""
    n = int(rng.integers(n_min, n_max + 1))
    start = float(rng.uniform(950, 1150))
    steps = rng.uniform(15, 90, size=n - 1)
    pwm = start + np.concatenate([[0.0], np.cumsum(steps)])
    dp = rng.uniform(0.0, 80.0, size=n - 1)
    dt = rng.uniform(0.02, 0.6, size=n - 1)
    if allow_flat:
        dp[rng.random(n - 1) < 0.2] = 0.0
        if not strict_thrust:
            dt[rng.random(n - 1) < 0.2] = 0.0
    power = float(rng.uniform(0, 10)) + np.concatenate([[0.0], np.cumsum(dp)])
    thrust = float(rng.uniform(0, 0.1)) + np.concatenate([[0.0], np.cumsum(dt)])
    return list(zip(pwm.tolist(), power.tolist(), thrust.tolist()))


def random_curve(rng, kind="linear", **kw):
    return MotorCurve(tuple(random_samples(rng, **kw)), kind)


def linear_oracle(xs, ys, x):
    for i in range(len(xs) - 1):
        if xs[i] <= x <= xs[i + 1]:
            return ys[i] + (ys[i + 1] - ys[i]) * (x - xs[i]) / (xs[i + 1] - xs[i])
    raise ValueError("outside")


def linear_inverse_oracle(xs, ys, y):
    """Smallest x with interpolated value y, by scanning segments."""
    for i in range(len(xs) - 1):
        if ys[i] <= y <= ys[i + 1]:
            if ys[i + 1] == ys[i]:
                return xs[i]
            return xs[i] + (y - ys[i]) * (xs[i + 1] - xs[i]) / (ys[i + 1] - ys[i])
    raise ValueError("outside")


class CurveOracle:
    """Recompute curve queries straight from the raw samples."""

    def __init__(self, samples, kind="linear"):
        self.pwm = [s[0] for s in samples]
        self.power = [s[1] for s in samples]
        self.thrust = [s[2] for s in samples]
        self.kind = kind
        if kind != "linear":
            self._p = PchipInterpolator(self.pwm, self.power)
            self._t = PchipInterpolator(self.pwm, self.thrust)

    def thrust_at(self, pwm):
        if self.kind == "linear":
            return linear_oracle(self.pwm, self.thrust, pwm)
        return float(self._t(pwm))

    def power_at(self, pwm):
        if self.kind == "linear":
            return linear_oracle(self.pwm, self.power, pwm)
        return float(self._p(pwm))

    def pwm_for(self, thrust):
        if self.kind == "linear":
            return linear_inverse_oracle(self.pwm, self.thrust, thrust)
        if thrust <= self.thrust[0]:
            return self.pwm[0]
        return brentq(lambda p: float(self._t(p)) - thrust, self.pwm[0], self.pwm[-1],
                      xtol=1e-12, rtol=1e-15)

    def endurance(self, auw, n, capacity_wh, fraction, p_c, p_r, p_l=0.0):
        p_f = n * self.power_at(self.pwm_for(auw / n))
        return 60.0 * fraction * capacity_wh / (p_f + p_c + p_r + p_l)


def part(kind, mass, **kw):
    return ComponentSpec(kind, f"{kind}-{mass:g}", mass, **kw)


def simple_design(frame_mass=1.0, battery_mass=1.0, capacity_wh=100.0, n=4,
                  p_c=65.0, p_r=18.0, target=45.0, fraction=0.8, loss=0.0,
                  payloads=(), tiny=1e-3, auw_other=None):
    """Design whose propulsion, FCU, compute and radio each weigh ``tiny`` kg.

    Passing ``auw_other`` sizes the frame so the non-battery mass hits it.
    """
    if auw_other is not None:
        frame_mass = auw_other - (3 * n + 3) * tiny - sum(payloads)
    return DesignSpec(
        motor=part("motor", tiny), propeller=part("propeller", tiny),
        esc=part("esc", tiny), frame=part("frame", frame_mass),
        fcu=part("fcu", tiny), compute=part("compute", tiny, max_power=p_c),
        radio=part("radio", tiny, max_power=p_r),
        batteries=(part("battery", battery_mass, capacity=capacity_wh),),
        extra_payloads=tuple(part("payload", m) for m in payloads),
        motor_count=n, target_flight_time=target, usable_fraction=fraction,
        loss_power=loss)


def rel_err(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def isclose(a, b, rel=1e-9, abs_=0.0):
    return math.isclose(a, b, rel_tol=rel, abs_tol=abs_)
