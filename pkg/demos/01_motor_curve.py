# %% [markdown]
# # Motor curve from a thrust-stand table
#
# A thrust stand logs PWM, electrical power and thrust for one motor and
# propeller. `MotorCurve` turns that table into a monotone lookup in both
# directions: PWM to power/thrust, and thrust back to PWM.

# %%
import numpy as np

from uav_sizer import OutOfDomainError, datasets, ingest_thrust_stand

curve = ingest_thrust_stand(datasets.path("monarch_mn501s.csv"))
print(curve.summary())

# %% [markdown]
# Forward queries interpolate between samples. Linear is the default;
# `monotone-cubic` is smoother and still never overshoots the samples.

# %%
cubic = curve.with_kind("monotone-cubic")
for pwm in (1100, 1255, 1500):
    print(f"{pwm} us: linear {float(curve.thrust_at_pwm(pwm)):.4f} kgf, "
          f"cubic {float(cubic.thrust_at_pwm(pwm)):.4f} kgf, "
          f"{float(curve.power_at_pwm(pwm)):.1f} W")

# %% [markdown]
# Inversion answers the sizing question: what throttle holds up a given share
# of the aircraft? A 4.856 kg quad needs 1.214 kgf per motor.

# %%
pwm = curve.pwm_for_thrust(1.214)
print(f"hover at {float(pwm):.2f} us drawing {float(curve.power_for_thrust(1.214)):.1f} W per motor")
print("round trip:", float(curve.thrust_at_pwm(pwm)))

# %% [markdown]
# Queries outside the measured range are refused rather than extrapolated.

# %%
try:
    curve.thrust_at_pwm(2100)
except OutOfDomainError as exc:
    print("refused:", exc)

grid = np.linspace(*curve.domain, 6)
print(np.column_stack([grid, [float(curve.thrust_at_pwm(p)) for p in grid]]))
