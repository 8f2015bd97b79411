# %% [markdown]
# # Power budget and endurance
#
# Total draw is flight power plus compute, radio and any extra losses. Only
# the usable share of the pack's energy counts toward flight time.

# %%
from uav_sizer import (EnergyStore, PowerBudget, datasets, flight_time,
                       hover_flight_power, predict_endurance, total_power)

design = datasets.monarch_design()
curve = datasets.monarch_curve()
print(f"AUW {float(design.auw):.4f} kg, battery {float(design.battery_capacity):.1f} Wh")

# %% [markdown]
# Build the budget by hand: all four motors share the weight equally.

# %%
p_f = hover_flight_power(curve, design.auw, design.motor_count)
budget = PowerBudget(p_f, design.compute_power, design.radio_power)
store = EnergyStore(design.battery_capacity, design.usable_fraction)
print(f"flight {float(p_f):.1f} W + compute 65 W + radio 18 W = {float(total_power(budget)):.1f} W")
print(f"usable energy {store.usable_wh:.1f} Wh -> {float(flight_time(store, total_power(budget))):.2f} min")

# %% [markdown]
# `predict_endurance` does the same in one call.

# %%
print(f"{float(predict_endurance(design, curve)):.2f} min")

# %% [markdown]
# Halving the compute load buys a few minutes; the motors dominate the budget.

# %%
from dataclasses import replace

light = replace(design, compute=replace(design.compute, max_power=32.5))
print(f"with a 32.5 W computer: {float(predict_endurance(light, curve)):.2f} min")
