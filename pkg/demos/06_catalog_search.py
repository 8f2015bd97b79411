# %% [markdown]
# # Searching a parts catalog
#
# `search_catalog` tries every combination of parts, with one up to
# `max_battery_count` identical batteries, and ranks the designs that pass by
# flight time. Battery counts the motors could never lift are pruned early.

# %%
from uav_sizer import datasets, search_catalog

catalog = datasets.monarch_catalog()
result = search_catalog(catalog)
for rank, report in enumerate(result.passing, 1):
    print(f"#{rank} {report.predicted_flight_time:.2f} min  {report.auw:.3f} kg  {report.name}")

# %% [markdown]
# Every rejected design keeps its reasons.

# %%
for name, reasons in result.failures:
    print(name.split(" | ")[-1], "->", "; ".join(reasons))

# %% [markdown]
# Raising the target to 50 minutes leaves nothing standing.

# %%
print(len(search_catalog(catalog, target_flight_time=50).passing), "designs pass at 50 min")
