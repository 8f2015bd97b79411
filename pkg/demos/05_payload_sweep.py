# %% [markdown]
# # Endurance versus payload
#
# Sweeping extra payload shows how fast flight time falls as the aircraft
# gets heavier. The sweep stops early once the motors run out of thrust.

# %%
import numpy as np

from uav_sizer import datasets, sweep_auw

design = datasets.monarch_design()
curve = datasets.monarch_curve()
sweep = sweep_auw(design, curve, payload_range=(0.0, 16.0), step=0.5)
auw = np.array([p.auw for p in sweep])
minutes = np.array([p.predicted_flight_time for p in sweep])
for a, t in zip(auw[::5], minutes[::5]):
    print(f"{a:6.2f} kg  {t:6.2f} min")
print("truncated at payload", sweep.truncated_at)

# %% [markdown]
# Endurance never rises with weight, and the loss per kilogram grows.

# %%
slope = np.diff(minutes) / np.diff(auw)
print("min/kg:", np.round(slope[::5], 2))
assert np.all(np.diff(minutes) <= 0)
