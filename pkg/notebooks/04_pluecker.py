# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Plücker coordinates and scalar recovery
#
# The maximal minors of a parity-check matrix determine the code.  For a
# Goppa code they have a closed form in the points and scalars.

# %%
from goppa_levels import code, make_structure, pluecker_closed_form, pluecker_of_code, recover_scalars

g = make_structure("7", 5, 2, [2, 3])
P = pluecker_closed_form(g)
print(P.coords)
P == pluecker_of_code(code(g))

# %% [markdown]
# In the range n/2 > d > 1 the coordinates are a complete invariant, so the
# scalars can be read back from the code.

# %%
g = make_structure("11", 7, 2, [2, 3, 5, 7], [3, 1, 4, 1, 5, 9])
recover_scalars(code(g), g.alphas, g.d) == g.scalars
