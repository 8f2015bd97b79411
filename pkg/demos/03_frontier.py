# %% [markdown]
# # Battery feasibility frontier
#
# At each hover throttle two limits apply to the battery: how heavy it can be
# before the motors cannot lift it, and how much energy it must hold to last
# the target time at that throttle. A pack is viable where both hold at once.

# %%
import io

from uav_sizer import build_frontier, classify_battery, datasets

design = datasets.monarch_design()
curve = datasets.monarch_curve()
frontier = build_frontier(curve, design.motor_count, design.auw_other,
                          design.compute_power, design.radio_power,
                          design.target_flight_time, design.usable_fraction,
                          pwm_step=20)
pwm, mass, capacity = frontier.as_arrays()
for row in zip(pwm[:8], mass[:8], capacity[:8]):
    print("%6.0f us  %7.3f kg  %7.1f Wh" % row)

# %% [markdown]
# The four-pack of 8S 6Ah cells sits just inside the frontier.

# %%
verdict = classify_battery(frontier, design.battery_mass, design.battery_capacity)
print(verdict.to_dict())

# %% [markdown]
# Two packs fall short on energy. Extra packs stay viable while the motors
# can still lift them, at the cost of a higher hover throttle.

# %%
pack = design.batteries[0]
for count in (2, 4, 8, 32):
    v = classify_battery(frontier, count * float(pack.mass), count * float(pack.capacity))
    print(f"{count} packs: feasible={v.feasible}, surplus {v.capacity_surplus:.1f} Wh, "
          f"headroom {v.mass_headroom:.3f} kg")

# %% [markdown]
# The table writes straight to CSV for plotting elsewhere.

# %%
buf = io.StringIO()
frontier.write_csv(buf)
print(buf.getvalue().splitlines()[:3])
