# %% [markdown]
# # Checking a complete design
#
# `evaluate_design` runs the whole loop: AUW, per-motor thrust, hover PWM
# against the throttle ceiling, predicted endurance against the target, and
# the battery against the frontier.

# %%
from uav_sizer import ComponentSpec, datasets, evaluate_design

design = datasets.monarch_design()
curve = datasets.monarch_curve()
report = evaluate_design(design, curve, pwm_threshold=1600, name="quad")
print(report.render_text())

# %% [markdown]
# Add 1.5 kg of sensors and the same airframe no longer makes the target.

# %%
heavy = design.with_payloads(ComponentSpec("payload", "lidar", 1.5))
report = evaluate_design(heavy, curve)
print("passed:", report.passed)
for reason in report.reasons():
    print(" -", reason)
