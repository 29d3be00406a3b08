# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Exhaustive audits
#
# Over small fields every structure can be enumerated.  The audits run on
# compiled kernels and are cross-checked against the scalar code in the
# test suite.

# %%
from goppa_levels.audits import (
    count_structures,
    delsarte_audit,
    identity_audit,
    image_census,
    injectivity_audit,
    selfdual_census,
)

count_structures(7, 5)

# %%
rep = injectivity_audit("7", 5, 2)
rep.structures_enumerated, rep.distinct_codes, rep.collision_groups

# %% [markdown]
# In degree 0 the code forgets the points, so collisions are expected there.

# %%
injectivity_audit("7", 5, 0).collision_groups

# %%
census = image_census("7", 5, 2)
census.distinct_codes, census.grassmannian_size, census.image_density

# %%
identity_audit("8", 5, 2).to_json()

# %%
[c["count"] for c in selfdual_census("7", 4, 1).configurations]

# %%
delsarte_audit("8", 5, samples=500).to_json()
