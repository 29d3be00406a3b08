# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Dimension counts
#
# Xi(d) compares the dimension of the Grassmannian of [n, k] codes with the
# dimension of the space of level structures.  Where it is positive the
# Goppa codes form a thin subset and can be told apart from random codes.

# %%
from goppa_levels import cut_points, parameter_report, unsafe_degrees, xi

[xi(0, 10, d) for d in range(10)]

# %%
cp = cut_points(0, 10)
cp.lower, cp.upper, unsafe_degrees(0, 10)

# %%
parameter_report(1, 20, 6).to_json()
